#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dring/derivation.hpp"
#include "dring/expr_parser.hpp"
#include "dring/solver.hpp"

namespace dring {

/// Parsed problem file:
///
///     # Example
///     vars: x, y, z
///     ideal: []
///     D: [y, x*z, 0]
///     prime: point(2, 3, 5)
///
/// `vars` and `D` are required, `ideal` and `prime` optional. A bracketed
/// list may continue over several lines until its brackets balance.
struct ProblemFile {
    RingPtr ring;
    std::vector<Poly> ideal;
    std::vector<Poly> derivation;
    std::optional<PrimeSpec> prime;

    [[nodiscard]] const std::vector<std::string>& vars() const { return ring->names; }
    [[nodiscard]] std::optional<Ideal> quotient() const;
    /// Validates quotient compatibility when `with_quotient` is set.
    [[nodiscard]] Derivation make_derivation(bool with_quotient = true) const;
    [[nodiscard]] const PrimeSpec& require_prime() const;

    friend bool operator==(const ProblemFile& a, const ProblemFile& b);
};

ProblemFile parse_problem(std::string_view text);

/// Canonical text; parse_problem(render_problem(p)) == p.
std::string render_problem(const ProblemFile& p);

/// `point(a, b, ...)` with one constant per variable, or `coord(x=a, ...)`.
PrimeSpec parse_prime(std::string_view text, const RingPtr& ring, SourcePos origin = {});

}  // namespace dring
