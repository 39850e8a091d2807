#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "dring/derivation.hpp"
#include "dring/field.hpp"
#include "dring/groebner.hpp"
#include "dring/series.hpp"

namespace dring {

/// A rational maximal ideal (x_1 - p_1, ..., x_n - p_n) or a coordinate
/// prime (x_i - c_i : i in S). Variables outside S are the residue
/// variables; the residue field is Q(those variables).
class PrimeSpec {
public:
    static PrimeSpec point(std::vector<Rational> coords);
    /// `values[i]` set for vanishing variables, empty for residue variables.
    static PrimeSpec coordinate(std::vector<std::optional<Rational>> values);

    [[nodiscard]] bool is_point() const;
    /// True when written as point(...), false for coord(...).
    [[nodiscard]] bool written_as_point() const { return as_point_; }
    [[nodiscard]] std::size_t size() const { return values_.size(); }
    [[nodiscard]] const std::vector<std::optional<Rational>>& values() const { return values_; }
    /// Center used for kernel searches: the prescribed value, 0 for residue variables.
    [[nodiscard]] std::vector<Rational> center() const;

    [[nodiscard]] std::vector<Poly> generators(const RingPtr& ring) const;
    [[nodiscard]] Ideal ideal(const RingPtr& ring) const;
    /// `point(2, 3, 5)` or `coord(x=0, y=0)`
    [[nodiscard]] std::string str(const Ring& ring) const;

    friend bool operator==(const PrimeSpec&, const PrimeSpec&) = default;

private:
    std::vector<std::optional<Rational>> values_;
    bool as_point_ = false;
};

/// ε_p: R → k(p).
FieldElement residue_eval(const PrimeSpec& p, const Poly& f);

enum class SolveMethod { exponential, ode, manual };
std::string to_string(SolveMethod m);

/// Truncated solution φ: x_i ↦ x_i(t) of a derivation through a prime.
struct Solution {
    RingPtr ring;
    PrimeSpec prime;
    std::size_t order = 0;
    std::vector<Series> coords;
    SolveMethod method = SolveMethod::manual;
};

/// (ε_p ⊗ 1) ∘ e^{tD} on the variables.
Solution solve_exponential(const Derivation& d, const PrimeSpec& p, std::size_t order);

/// Coefficient-by-coefficient recursion from f_i(x(t)) = x_i'(t); rational
/// points only.
Solution solve_ode(const Derivation& d, const PrimeSpec& p, std::size_t order);

/// Checks φ∘D = ∂_t∘φ on the variables up to t^order and that φ^{-1}((t))
/// is exactly the prime. Requires order <= s.order - 1.
bool verify_solution(const Solution& s, const Derivation& d, std::size_t order);

/// ε_p ∘ D = 0, i.e. every solution through p is constant.
bool is_trivial(const Derivation& d, const PrimeSpec& p);

/// φ(g) mod t^{order+1}.
Series push(const Solution& s, const Poly& g, std::size_t order);

/// Degree-bounded approximation of ker φ.
struct KernelApprox {
    std::size_t degree = 0;
    std::size_t order = 0;
    PrimeSpec prime;
    /// Reduced echelon basis in the centered coordinates x - center, with
    /// monomial columns in descending order; the ring variables stand for
    /// the centered coordinates.
    std::vector<Poly> centered_basis;
    /// The same basis expressed in the original variables.
    std::vector<Poly> basis;

    [[nodiscard]] std::size_t dimension() const { return basis.size(); }
};

KernelApprox kernel_from_solution(const Solution& s, std::size_t degree, std::size_t order);
KernelApprox kernel_approx(const Derivation& d, const PrimeSpec& p, std::size_t degree, std::size_t order);

/// Whether `f` (original coordinates) lies in the Q-span of the kernel basis.
bool kernel_span_contains(const KernelApprox& k, const Poly& f);

/// φ* = ψ*: same prime and identical kernel approximations at (degree, order).
/// Throws InputError when either solution fails verification or the primes differ.
bool topologically_equal(const Derivation& d, const Solution& a, const Solution& b, std::size_t degree,
                         std::size_t order);

struct NotSimple {
    Ideal witness;
    bool d_stable = false;
    bool inside_prime = false;
    bool nonzero = false;
};

/// Never an assertion of simplicity: no relation was found within the bounds.
struct NoObstructionUpTo {
    std::size_t degree = 0;
    std::size_t order = 0;
};

struct TrivialSolution {};

struct QuotientDiagnostic {
    bool annihilator_escapes_prime = false;
    Ideal transporter;
};

using SimplicityVerdict = std::variant<NotSimple, NoObstructionUpTo, TrivialSolution, QuotientDiagnostic>;

struct SimplicityReport {
    SimplicityVerdict verdict;
    std::optional<KernelApprox> kernel;
    int ring_dimension = 0;   // dim R
    int prime_dimension = 0;  // dim R/p
    int codimension = 0;      // codim(V(p), Spec R)
    /// dim R/J for a certified witness J.
    std::optional<int> witness_dimension;
    /// Upper bound on trdeg_K φ(R) from a witness: dim R/J - dim R/p.
    std::optional<int> trdeg_upper_bound;
    std::vector<std::string> warnings;
};

SimplicityReport simplicity_report(const Derivation& d, const PrimeSpec& p, std::size_t degree, std::size_t order,
                                   std::size_t saturation_cap = kDefaultSaturationCap);

/// Transporter (I : K) for the quotient ideal I of `d`, and whether it has
/// an element not vanishing at the point p.
QuotientDiagnostic annihilator_check(const Derivation& d, const PrimeSpec& p, const Ideal& kernel_candidate);

struct LiftReport {
    bool stable = false;              // D̂(I) ⊆ I
    bool ideal_in_kernel_span = false;
    bool kernel_in_ideal = false;
    [[nodiscard]] bool passes() const { return stable && ideal_in_kernel_span && kernel_in_ideal; }
};

/// Bounded surrogate for "D̂ stabilizes I and ker φ̂ = I".
LiftReport quotient_lift_check(const Derivation& dhat, const Ideal& ideal, const PrimeSpec& p, std::size_t degree,
                               std::size_t order);

/// Default kernel-search order for a degree bound: 2 * (degree * max deg f_i + 1).
std::size_t default_kernel_order(const Derivation& d, std::size_t degree);

}  // namespace dring
