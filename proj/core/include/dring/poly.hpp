#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "dring/rational.hpp"
#include "dring/ring.hpp"

namespace dring {

struct Term {
    Monomial monomial;
    Rational coeff;

    friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse multivariate polynomial with rational coefficients.
///
/// Terms are kept sorted in descending order for the ring's monomial order
/// and never carry a zero coefficient, so the leading term is `terms().front()`.
class Poly {
public:
    explicit Poly(RingPtr ring) : ring_(std::move(ring)) {}
    Poly(RingPtr ring, std::vector<Term> terms);

    static Poly constant(RingPtr ring, const Rational& c);
    static Poly variable(RingPtr ring, std::size_t index);
    static Poly monomial(RingPtr ring, Monomial m, Rational c = Rational(1));

    [[nodiscard]] const RingPtr& ring() const { return ring_; }
    [[nodiscard]] const std::vector<Term>& terms() const { return terms_; }
    [[nodiscard]] std::size_t size() const { return terms_.size(); }

    [[nodiscard]] bool is_zero() const { return terms_.empty(); }
    [[nodiscard]] bool is_constant() const;
    /// Constant coefficient (coefficient of the unit monomial).
    [[nodiscard]] Rational constant_term() const;
    [[nodiscard]] int total_degree() const;  // -1 for zero
    [[nodiscard]] const Term& leading_term() const { return terms_.front(); }
    [[nodiscard]] const Monomial& leading_monomial() const { return terms_.front().monomial; }
    [[nodiscard]] const Rational& leading_coeff() const { return terms_.front().coeff; }
    [[nodiscard]] Rational coeff(const Monomial& m) const;
    /// True when the polynomial only involves variables flagged in `allowed`.
    [[nodiscard]] bool supported_in(const std::vector<bool>& allowed) const;

    [[nodiscard]] Poly monic() const;
    [[nodiscard]] Poly partial(std::size_t var) const;
    [[nodiscard]] Poly pow(unsigned n) const;
    /// Re-sorts the terms for a ring with the same variables and another order.
    [[nodiscard]] Poly in_ring(const RingPtr& ring) const;
    /// Homogeneous component of total degree `d`.
    [[nodiscard]] Poly homogeneous_part(unsigned d) const;

    [[nodiscard]] Rational evaluate(std::span<const Rational> point) const;
    /// Substitutes polynomials (all in ring `target`) for the variables.
    [[nodiscard]] Poly substitute(std::span<const Poly> images, const RingPtr& target) const;
    /// f(x + p): the same polynomial written in the shifted coordinates x - p.
    [[nodiscard]] Poly shift(std::span<const Rational> point) const;

    /// Exact quotient when `divisor` divides this polynomial.
    [[nodiscard]] std::optional<Poly> divide_exact(const Poly& divisor) const;

    [[nodiscard]] std::string str() const;

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o);
    Poly& operator*=(const Rational& c);

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
    friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
    friend Poly operator-(const Poly& a);

    /// Same ring and identical terms.
    friend bool operator==(const Poly& a, const Poly& b);

    /// Removes and returns the leading term. Requires a nonzero polynomial.
    Term take_leading();

    /// a - c * m * b without materializing the product.
    void sub_scaled(const Poly& b, const Rational& c, const Monomial& m);

private:
    void check_ring(const Poly& o) const;
    void normalize();  // sort + combine + drop zeros

    RingPtr ring_;
    std::vector<Term> terms_;
};

/// Taylor development around `point`: element j is the homogeneous degree-j
/// part of f written in the centered coordinates x - p (so element 0 is f(p)).
std::vector<Poly> poly_translate(const Poly& f, std::span<const Rational> point);

/// `x^2*z` style rendering; empty string for the unit monomial.
std::string render_monomial(const RingPtr& ring, const Monomial& m);

}  // namespace dring
