#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "dring/errors.hpp"
#include "dring/field.hpp"
#include "dring/poly.hpp"

namespace dring {

/// Power series in t truncated after t^order, eagerly stored.
template <class F>
class TruncSeries {
public:
    explicit TruncSeries(std::size_t order) : coeffs_(order + 1) {}
    explicit TruncSeries(std::vector<F> coeffs) : coeffs_(std::move(coeffs)) {
        if (coeffs_.empty()) throw InputError("series needs at least one coefficient");
    }

    static TruncSeries constant(const F& c, std::size_t order) {
        TruncSeries s(order);
        s.coeffs_[0] = c;
        return s;
    }

    [[nodiscard]] std::size_t order() const { return coeffs_.size() - 1; }
    [[nodiscard]] const F& operator[](std::size_t k) const { return coeffs_[k]; }
    F& operator[](std::size_t k) { return coeffs_[k]; }
    [[nodiscard]] const std::vector<F>& coeffs() const { return coeffs_; }

    [[nodiscard]] bool is_zero() const {
        return std::all_of(coeffs_.begin(), coeffs_.end(), [](const F& c) { return c.is_zero(); });
    }
    /// Every coefficient beyond t^0 vanishes.
    [[nodiscard]] bool is_constant() const {
        return std::all_of(coeffs_.begin() + 1, coeffs_.end(), [](const F& c) { return c.is_zero(); });
    }

    friend TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) {
        TruncSeries r(std::min(a.order(), b.order()));
        for (std::size_t k = 0; k <= r.order(); ++k) r.coeffs_[k] = a.coeffs_[k] + b.coeffs_[k];
        return r;
    }
    friend TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) {
        TruncSeries r(std::min(a.order(), b.order()));
        for (std::size_t k = 0; k <= r.order(); ++k) r.coeffs_[k] = a.coeffs_[k] - b.coeffs_[k];
        return r;
    }
    friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
        TruncSeries r(std::min(a.order(), b.order()));
        for (std::size_t i = 0; i <= r.order(); ++i) {
            if (a.coeffs_[i].is_zero()) continue;
            for (std::size_t j = 0; i + j <= r.order(); ++j) {
                if (b.coeffs_[j].is_zero()) continue;
                r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
            }
        }
        return r;
    }
    friend TruncSeries operator*(const F& c, TruncSeries s) {
        for (auto& x : s.coeffs_) x = c * x;
        return s;
    }
    friend bool operator==(const TruncSeries& a, const TruncSeries& b) { return a.coeffs_ == b.coeffs_; }

    [[nodiscard]] std::string str() const {
        std::string out = "[";
        for (std::size_t k = 0; k < coeffs_.size(); ++k) {
            if (k) out += ", ";
            out += coeffs_[k].str();
        }
        return out + "]";
    }

private:
    std::vector<F> coeffs_;
};

/// The truncation homomorphism: keeps coefficients of t^0..t^r.
template <class F>
TruncSeries<F> truncate(const TruncSeries<F>& s, std::size_t r) {
    if (r > s.order()) throw InputError("cannot truncate a series above its order");
    return TruncSeries<F>(std::vector<F>(s.coeffs().begin(), s.coeffs().begin() + static_cast<std::ptrdiff_t>(r) + 1));
}

/// d/dt; the result has order one less than the input.
template <class F>
TruncSeries<F> series_derive(const TruncSeries<F>& s) {
    if (s.order() == 0) throw InputError("cannot differentiate an order-0 series");
    TruncSeries<F> d(s.order() - 1);
    for (std::size_t j = 0; j < s.order(); ++j) d[j] = F(Rational(static_cast<long>(j + 1))) * s[j + 1];
    return d;
}

/// f(x_1(t), ..., x_n(t)) mod t^{r+1}.
template <class F>
TruncSeries<F> poly_eval_series(const Poly& f, std::span<const TruncSeries<F>> args, std::size_t r) {
    if (args.size() != f.ring()->size()) throw InputError("one series per ring variable is required");
    for (const auto& a : args) {
        if (a.order() < r) throw InputError("argument series order is below the requested order");
    }
    std::vector<std::vector<TruncSeries<F>>> powers(args.size());
    TruncSeries<F> acc(r);
    for (const auto& term : f.terms()) {
        TruncSeries<F> v = TruncSeries<F>::constant(F(term.coeff), r);
        for (std::size_t i = 0; i < args.size(); ++i) {
            unsigned e = term.monomial[i];
            if (e == 0) continue;
            auto& pw = powers[i];
            if (pw.empty()) {
                pw.push_back(TruncSeries<F>::constant(F(Rational(1)), r));
                pw.push_back(truncate(args[i], r));
            }
            while (pw.size() <= e) pw.push_back(pw.back() * pw[1]);
            v = v * pw[e];
        }
        acc = acc + v;
    }
    return acc;
}

using Series = TruncSeries<FieldElement>;

}  // namespace dring
