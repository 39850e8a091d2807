#include "dring/poly.hpp"

#include <algorithm>
#include <sstream>

#include "dring/errors.hpp"

namespace dring {

Poly::Poly(RingPtr ring, std::vector<Term> terms) : ring_(std::move(ring)), terms_(std::move(terms)) {
    for (const auto& t : terms_) {
        if (t.monomial.size() != ring_->size()) throw InputError("monomial arity does not match ring");
    }
    normalize();
}

Poly Poly::constant(RingPtr ring, const Rational& c) {
    Poly p(ring);
    if (!c.is_zero()) p.terms_.push_back({Monomial(ring->size()), c});
    return p;
}

Poly Poly::variable(RingPtr ring, std::size_t index) {
    if (index >= ring->size()) throw InputError("variable index out of range");
    Poly p(ring);
    p.terms_.push_back({Monomial::variable(ring->size(), index), Rational(1)});
    return p;
}

Poly Poly::monomial(RingPtr ring, Monomial m, Rational c) {
    Poly p(ring);
    if (!c.is_zero()) p.terms_.push_back({std::move(m), std::move(c)});
    return p;
}

void Poly::normalize() {
    const auto& ord = ring_->order;
    std::sort(terms_.begin(), terms_.end(),
              [&](const Term& a, const Term& b) { return ord.compare(a.monomial, b.monomial) > 0; });
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
        if (!out.empty() && out.back().monomial == t.monomial) {
            out.back().coeff += t.coeff;
        } else {
            if (!out.empty() && out.back().coeff.is_zero()) out.pop_back();
            out.push_back(std::move(t));
        }
    }
    if (!out.empty() && out.back().coeff.is_zero()) out.pop_back();
    terms_ = std::move(out);
}

void Poly::check_ring(const Poly& o) const {
    if (!same_ring(ring_, o.ring_)) throw InputError("polynomials belong to different rings");
}

bool Poly::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one()); }

Rational Poly::constant_term() const {
    if (!terms_.empty() && terms_.back().monomial.is_one()) return terms_.back().coeff;
    return Rational(0);
}

int Poly::total_degree() const {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.monomial.degree()));
    return d;
}

Rational Poly::coeff(const Monomial& m) const {
    for (const auto& t : terms_) {
        if (t.monomial == m) return t.coeff;
    }
    return Rational(0);
}

bool Poly::supported_in(const std::vector<bool>& allowed) const {
    return std::all_of(terms_.begin(), terms_.end(), [&](const Term& t) { return t.monomial.supported_in(allowed); });
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    return *this * leading_coeff().inverse();
}

Poly Poly::partial(std::size_t var) const {
    if (var >= ring_->size()) throw InputError("variable index out of range");
    std::vector<Term> out;
    for (const auto& t : terms_) {
        unsigned e = t.monomial[var];
        if (e == 0) continue;
        Monomial m = t.monomial;
        m[var] = e - 1;
        out.push_back({std::move(m), t.coeff * Rational(static_cast<long>(e))});
    }
    return Poly(ring_, std::move(out));
}

Poly Poly::pow(unsigned n) const {
    Poly result = constant(ring_, Rational(1));
    Poly base = *this;
    while (n > 0) {
        if (n & 1U) result *= base;
        n >>= 1U;
        if (n > 0) base *= base;
    }
    return result;
}

Poly Poly::in_ring(const RingPtr& ring) const {
    if (ring->names != ring_->names) throw InputError("ring variables differ");
    return Poly(ring, terms_);
}

Poly Poly::homogeneous_part(unsigned d) const {
    Poly p(ring_);
    for (const auto& t : terms_) {
        if (t.monomial.degree() == d) p.terms_.push_back(t);
    }
    return p;
}

Rational Poly::evaluate(std::span<const Rational> point) const {
    if (point.size() != ring_->size()) throw InputError("point arity does not match ring");
    Rational acc(0);
    for (const auto& t : terms_) {
        Rational v = t.coeff;
        for (std::size_t i = 0; i < point.size(); ++i) {
            for (unsigned e = 0; e < t.monomial[i]; ++e) v *= point[i];
        }
        acc += v;
    }
    return acc;
}

Poly Poly::substitute(std::span<const Poly> images, const RingPtr& target) const {
    if (images.size() != ring_->size()) throw InputError("substitution arity does not match ring");
    // cache powers per variable
    std::vector<std::vector<Poly>> powers(images.size());
    Poly acc(target);
    for (const auto& t : terms_) {
        Poly v = constant(target, t.coeff);
        for (std::size_t i = 0; i < images.size(); ++i) {
            unsigned e = t.monomial[i];
            if (e == 0) continue;
            auto& pw = powers[i];
            if (pw.empty()) pw.push_back(constant(target, Rational(1)));
            while (pw.size() <= e) pw.push_back(pw.back() * images[i]);
            v *= pw[e];
        }
        acc += v;
    }
    return acc;
}

Poly Poly::shift(std::span<const Rational> point) const {
    if (point.size() != ring_->size()) throw InputError("point arity does not match ring");
    std::vector<Poly> images;
    images.reserve(point.size());
    for (std::size_t i = 0; i < point.size(); ++i) {
        images.push_back(variable(ring_, i) + constant(ring_, point[i]));
    }
    return substitute(images, ring_);
}

std::optional<Poly> Poly::divide_exact(const Poly& divisor) const {
    check_ring(divisor);
    if (divisor.is_zero()) throw InputError("division by zero polynomial");
    Poly rem = *this;
    std::vector<Term> quot;
    const Monomial& lm = divisor.leading_monomial();
    Rational lc_inv = divisor.leading_coeff().inverse();
    while (!rem.is_zero()) {
        const Term& lt = rem.leading_term();
        if (!lm.divides(lt.monomial)) return std::nullopt;
        Monomial q = lt.monomial / lm;
        Rational c = lt.coeff * lc_inv;
        rem.sub_scaled(divisor, c, q);
        quot.push_back({std::move(q), std::move(c)});
    }
    return Poly(ring_, std::move(quot));
}

Term Poly::take_leading() {
    Term t = std::move(terms_.front());
    terms_.erase(terms_.begin());
    return t;
}

Poly& Poly::operator+=(const Poly& o) {
    check_ring(o);
    const auto& ord = ring_->order;
    std::vector<Term> out;
    out.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < terms_.size() || j < o.terms_.size()) {
        int c = 0;
        if (i == terms_.size()) c = -1;
        else if (j == o.terms_.size()) c = 1;
        else c = ord.compare(terms_[i].monomial, o.terms_[j].monomial);
        if (c > 0) {
            out.push_back(std::move(terms_[i++]));
        } else if (c < 0) {
            out.push_back(o.terms_[j++]);
        } else {
            Rational s = terms_[i].coeff + o.terms_[j].coeff;
            if (!s.is_zero()) out.push_back({std::move(terms_[i].monomial), std::move(s)});
            ++i;
            ++j;
        }
    }
    terms_ = std::move(out);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    sub_scaled(o, Rational(1), Monomial(ring_->size()));
    return *this;
}

void Poly::sub_scaled(const Poly& b, const Rational& c, const Monomial& m) {
    check_ring(b);
    if (c.is_zero()) return;
    const auto& ord = ring_->order;
    const bool unit = m.is_one();
    std::vector<Term> out;
    out.reserve(terms_.size() + b.terms_.size());
    std::size_t i = 0;
    std::size_t j = 0;
    Monomial bm;
    auto load = [&](std::size_t k) { bm = unit ? b.terms_[k].monomial : b.terms_[k].monomial * m; };
    if (!b.terms_.empty()) load(0);
    while (i < terms_.size() || j < b.terms_.size()) {
        int cmp = 0;
        if (i == terms_.size()) cmp = -1;
        else if (j == b.terms_.size()) cmp = 1;
        else cmp = ord.compare(terms_[i].monomial, bm);
        if (cmp > 0) {
            out.push_back(std::move(terms_[i++]));
        } else if (cmp < 0) {
            out.push_back({bm, -(b.terms_[j].coeff * c)});
            if (++j < b.terms_.size()) load(j);
        } else {
            Rational s = terms_[i].coeff - b.terms_[j].coeff * c;
            if (!s.is_zero()) out.push_back({std::move(terms_[i].monomial), std::move(s)});
            ++i;
            if (++j < b.terms_.size()) load(j);
        }
    }
    terms_ = std::move(out);
}

Poly operator*(const Poly& a, const Poly& b) {
    a.check_ring(b);
    if (a.is_zero() || b.is_zero()) return Poly(a.ring_);
    std::vector<Term> prod;
    prod.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& s : a.terms_) {
        for (const auto& t : b.terms_) prod.push_back({s.monomial * t.monomial, s.coeff * t.coeff});
    }
    return Poly(a.ring_, std::move(prod));
}

Poly& Poly::operator*=(const Poly& o) {
    *this = *this * o;
    return *this;
}

Poly& Poly::operator*=(const Rational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& t : terms_) t.coeff *= c;
    return *this;
}

Poly operator-(const Poly& a) {
    Poly r = a;
    for (auto& t : r.terms_) t.coeff = -t.coeff;
    return r;
}

bool operator==(const Poly& a, const Poly& b) { return same_ring(a.ring_, b.ring_) && a.terms_ == b.terms_; }

std::string render_monomial(const RingPtr& ring, const Monomial& m) {
    std::string out;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0) continue;
        if (!out.empty()) out += '*';
        out += ring->names[i];
        if (m[i] > 1) out += '^' + std::to_string(m[i]);
    }
    return out;
}

std::string Poly::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& t : terms_) {
        bool neg = t.coeff.sign() < 0;
        Rational mag = neg ? -t.coeff : t.coeff;
        if (first) {
            if (neg) out += '-';
        } else {
            out += neg ? " - " : " + ";
        }
        first = false;
        std::string body = render_monomial(ring_, t.monomial);
        if (body.empty()) {
            out += mag.str();
        } else if (mag.is_one()) {
            out += body;
        } else {
            out += mag.str() + "*" + body;
        }
    }
    return out;
}

std::vector<Poly> poly_translate(const Poly& f, std::span<const Rational> point) {
    Poly centered = f.shift(point);
    int deg = f.total_degree();
    std::vector<Poly> parts;
    for (int j = 0; j <= std::max(deg, 0); ++j) parts.push_back(centered.homogeneous_part(static_cast<unsigned>(j)));
    return parts;
}

}  // namespace dring
