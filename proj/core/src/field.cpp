#include "dring/field.hpp"

#include <functional>

#include "dring/errors.hpp"

namespace dring {

RationalFunction::RationalFunction(Poly num) : num_(std::move(num)), den_(Poly::constant(num_.ring(), Rational(1))) {}

RationalFunction::RationalFunction(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (!same_ring(num_.ring(), den_.ring())) throw InputError("rational function parts in different rings");
    if (den_.is_zero()) throw InputError("rational function with zero denominator");
    normalize();
}

void RationalFunction::normalize() {
    if (num_.is_zero()) {
        den_ = Poly::constant(num_.ring(), Rational(1));
        return;
    }
    if (!den_.is_constant()) {
        if (auto q = num_.divide_exact(den_)) {
            num_ = std::move(*q);
            den_ = Poly::constant(num_.ring(), Rational(1));
            return;
        }
    }
    Rational lc = den_.leading_coeff();
    if (!lc.is_one()) {
        Rational inv = lc.inverse();
        num_ *= inv;
        den_ *= inv;
    }
}

Rational RationalFunction::constant_value() const {
    if (!is_constant()) throw InputError("rational function is not constant");
    return num_.constant_term() / den_.constant_term();
}

RationalFunction RationalFunction::inverse() const {
    if (is_zero()) throw InputError("division by zero");
    return {den_, num_};
}

RationalFunction RationalFunction::partial(std::size_t var) const {
    return {num_.partial(var) * den_ - num_ * den_.partial(var), den_ * den_};
}

std::string RationalFunction::str() const {
    if (den_.is_constant()) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    if (a.den_ == b.den_) return {a.num_ + b.num_, a.den_};
    return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
    if (a.den_ == b.den_) return {a.num_ - b.num_, a.den_};
    return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    return {a.num_ * b.num_, a.den_ * b.den_};
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    if (b.is_zero()) throw InputError("division by zero");
    return {a.num_ * b.den_, a.den_ * b.num_};
}

RationalFunction operator-(const RationalFunction& a) { return {-a.num_, a.den_}; }

bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ * b.den_ == b.num_ * a.den_;
}

FieldElement::FieldElement(RationalFunction f) : value_(Rational(0)) {
    if (f.is_constant()) {
        value_ = f.constant_value();
    } else {
        value_ = std::move(f);
    }
}

bool FieldElement::is_zero() const {
    return is_rational() ? rational().is_zero() : function().is_zero();
}

bool FieldElement::is_constant() const { return is_rational() || function().is_constant(); }

Rational FieldElement::constant_value() const { return is_rational() ? rational() : function().constant_value(); }

FieldElement FieldElement::inverse() const {
    if (is_rational()) return FieldElement(rational().inverse());
    return FieldElement(function().inverse());
}

std::string FieldElement::str() const { return is_rational() ? rational().str() : function().str(); }

namespace {

RationalFunction promote(const FieldElement& v, const RingPtr& ring) {
    if (v.is_rational()) return RationalFunction(Poly::constant(ring, v.rational()));
    return v.function();
}

template <class RatOp, class FunOp>
FieldElement combine(const FieldElement& a, const FieldElement& b, RatOp rat_op, FunOp fun_op) {
    if (a.is_rational() && b.is_rational()) return FieldElement(rat_op(a.rational(), b.rational()));
    const RingPtr& ring = a.is_rational() ? b.function().ring() : a.function().ring();
    return FieldElement(fun_op(promote(a, ring), promote(b, ring)));
}

}  // namespace

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
    return combine(a, b, std::plus<>{}, std::plus<>{});
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
    return combine(a, b, std::minus<>{}, std::minus<>{});
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
    return combine(a, b, std::multiplies<>{}, std::multiplies<>{});
}

FieldElement operator/(const FieldElement& a, const FieldElement& b) {
    return combine(a, b, std::divides<>{}, std::divides<>{});
}

FieldElement operator-(const FieldElement& a) {
    if (a.is_rational()) return FieldElement(-a.rational());
    return FieldElement(-a.function());
}

bool operator==(const FieldElement& a, const FieldElement& b) {
    if (a.is_rational() && b.is_rational()) return a.rational() == b.rational();
    if (a.is_constant() && b.is_constant()) return a.constant_value() == b.constant_value();
    if (a.is_rational() || b.is_rational()) return false;
    return a.function() == b.function();
}

}  // namespace dring
