#pragma once

#include <ostream>
#include <string>
#include <variant>

#include "dring/poly.hpp"
#include "dring/rational.hpp"

namespace dring {

/// Quotient of two polynomials over Q.
///
/// No multivariate gcd is taken. Normalization folds constant denominators
/// into the numerator, makes the denominator monic, and cancels when the
/// denominator divides the numerator exactly. Equality is by
/// cross-multiplication.
class RationalFunction {
public:
    explicit RationalFunction(Poly num);
    RationalFunction(Poly num, Poly den);

    [[nodiscard]] const Poly& numerator() const { return num_; }
    [[nodiscard]] const Poly& denominator() const { return den_; }
    [[nodiscard]] const RingPtr& ring() const { return num_.ring(); }

    [[nodiscard]] bool is_zero() const { return num_.is_zero(); }
    /// True when the value is a rational constant.
    [[nodiscard]] bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    [[nodiscard]] Rational constant_value() const;
    [[nodiscard]] RationalFunction inverse() const;
    [[nodiscard]] RationalFunction partial(std::size_t var) const;
    [[nodiscard]] std::string str() const;

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator-(const RationalFunction& a);
    friend bool operator==(const RationalFunction& a, const RationalFunction& b);

private:
    void normalize();

    Poly num_;
    Poly den_;
};

/// Exact scalar of a residue field: a rational number, or a rational
/// function in the residue variables of a coordinate prime. Mixed
/// arithmetic promotes the rational operand.
class FieldElement {
public:
    FieldElement() : value_(Rational(0)) {}
    FieldElement(Rational r) : value_(std::move(r)) {}          // NOLINT(google-explicit-constructor)
    FieldElement(long r) : value_(Rational(r)) {}               // NOLINT(google-explicit-constructor)
    FieldElement(int r) : value_(Rational(r)) {}                // NOLINT(google-explicit-constructor)
    FieldElement(RationalFunction f);                           // NOLINT(google-explicit-constructor)

    [[nodiscard]] bool is_rational() const { return std::holds_alternative<Rational>(value_); }
    [[nodiscard]] const Rational& rational() const { return std::get<Rational>(value_); }
    [[nodiscard]] const RationalFunction& function() const { return std::get<RationalFunction>(value_); }

    [[nodiscard]] bool is_zero() const;
    /// Constant rational functions are stored as rationals, so this is
    /// equivalent to is_rational().
    [[nodiscard]] bool is_constant() const;
    [[nodiscard]] Rational constant_value() const;
    [[nodiscard]] FieldElement inverse() const;
    [[nodiscard]] std::string str() const;

    friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator-(const FieldElement& a);
    FieldElement& operator+=(const FieldElement& o) { return *this = *this + o; }
    FieldElement& operator-=(const FieldElement& o) { return *this = *this - o; }
    FieldElement& operator*=(const FieldElement& o) { return *this = *this * o; }
    FieldElement& operator/=(const FieldElement& o) { return *this = *this / o; }
    friend bool operator==(const FieldElement& a, const FieldElement& b);

    friend std::ostream& operator<<(std::ostream& os, const FieldElement& e) { return os << e.str(); }

private:
    std::variant<Rational, RationalFunction> value_;
};

}  // namespace dring
