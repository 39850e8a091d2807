#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "dring/groebner.hpp"
#include "dring/poly.hpp"

namespace dring {

inline constexpr std::size_t kDefaultSaturationCap = 50;

/// A k-derivation of k[x_1..x_n] (or of k[x]/I) given by the images
/// f_i = D(x_i) of the variables.
class Derivation {
public:
    /// Throws InputError when the arity is wrong or when `quotient` is not
    /// stable under D (so D would not descend to R/I).
    Derivation(RingPtr ring, std::vector<Poly> coeffs, std::optional<Ideal> quotient = std::nullopt);

    static Derivation zero(RingPtr ring);

    [[nodiscard]] const RingPtr& ring() const { return ring_; }
    [[nodiscard]] const std::vector<Poly>& coeffs() const { return coeffs_; }
    [[nodiscard]] const Poly& coeff(std::size_t i) const { return coeffs_.at(i); }
    [[nodiscard]] const std::optional<Ideal>& quotient_ideal() const { return quotient_; }
    [[nodiscard]] int max_coeff_degree() const;

    /// Same coefficients, no quotient ideal.
    [[nodiscard]] Derivation lift() const { return Derivation(ring_, coeffs_); }

    /// `[y, x*z, 0]`
    [[nodiscard]] std::string str() const;

private:
    RingPtr ring_;
    std::vector<Poly> coeffs_;
    std::optional<Ideal> quotient_;
};

/// D(f) = sum_i f_i * df/dx_i
Poly apply(const Derivation& d, const Poly& f);

/// D^n(f), with D^0 the identity.
Poly apply_power(const Derivation& d, const Poly& f, unsigned n);

/// Truncated exponential e^{tD} f: element n is D^n(f)/n!.
std::vector<Poly> exp_map(const Derivation& d, const Poly& f, std::size_t order);

/// D(I) ⊆ I, decided on generators (Leibniz makes this exact).
bool stabilizes(const Derivation& d, const Ideal& ideal);

/// Smallest D-stable ideal containing `seed`. Throws ResourceError after
/// `cap` rounds without reaching a fixed point.
Ideal saturate_stable(const Derivation& d, const Ideal& seed, std::size_t cap = kDefaultSaturationCap);

struct NilpotencyResult {
    bool nilpotent = false;  // false means "not confirmed within the bound"
    /// Least n <= bound with D^n(x_i) = 0, per variable.
    std::vector<std::optional<unsigned>> index;
};

NilpotencyResult is_locally_nilpotent_up_to(const Derivation& d, unsigned bound);

struct EllReport {
    std::optional<unsigned> generator_ell;
    /// Products of generators whose D^ell image leaves the ideal.
    std::vector<Poly> probe_violations;
};

/// Least ell >= 1 with D^ell(g) in m for every generator g, plus probes on
/// products of up to `probe_degree` generators. A diagnostic only.
EllReport ell_search(const Derivation& d, const Ideal& m, unsigned bound, unsigned probe_degree);

/// True iff the D^{ell-1} images of the generators of m generate the unit
/// ideal. Never a simplicity certificate on its own.
bool ln_simplicity_criterion(const Derivation& d, const Ideal& m, unsigned ell);

}  // namespace dring
