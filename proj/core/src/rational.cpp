#include "dring/rational.hpp"

#include "dring/errors.hpp"

namespace dring {

Rational::Rational(long num, long den) {
    if (den == 0) {
        throw InputError("rational with zero denominator");
    }
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rational::Rational(mpq_class v) : value_(std::move(v)) { value_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
    std::string s(text);
    auto slash = s.find('/');
    auto valid_int = [](const std::string& t) {
        std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
        if (i >= t.size()) return false;
        for (; i < t.size(); ++i) {
            if (t[i] < '0' || t[i] > '9') return false;
        }
        return true;
    };
    if (slash == std::string::npos) {
        if (!valid_int(s)) throw InputError("invalid rational literal '" + s + "'");
        if (s[0] == '+') s.erase(0, 1);
        return Rational(mpz_class(s, 10));
    }
    std::string num = s.substr(0, slash);
    std::string den = s.substr(slash + 1);
    if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+') {
        throw InputError("invalid rational literal '" + s + "'");
    }
    if (num[0] == '+') num.erase(0, 1);
    mpz_class d(den, 10);
    if (d == 0) throw InputError("rational with zero denominator");
    return Rational(mpq_class(mpz_class(num, 10), d));
}

Rational Rational::inverse() const {
    if (is_zero()) throw InputError("division by zero");
    return Rational(mpq_class(1 / value_));
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw InputError("division by zero");
    value_ /= o.value_;
    return *this;
}

std::string Rational::str() const { return value_.get_str(10); }

Rational factorial(unsigned n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return Rational(f);
}

}  // namespace dring
