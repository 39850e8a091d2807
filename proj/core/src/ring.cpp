#include "dring/ring.hpp"

#include <algorithm>
#include <numeric>

#include "dring/errors.hpp"

namespace dring {

Monomial Monomial::variable(std::size_t nvars, std::size_t index, unsigned power) {
    Monomial m(nvars);
    m.exps_.at(index) = power;
    return m;
}

unsigned Monomial::degree() const { return std::accumulate(exps_.begin(), exps_.end(), 0U); }

bool Monomial::divides(const Monomial& other) const {
    for (std::size_t i = 0; i < exps_.size(); ++i) {
        if (exps_[i] > other.exps_[i]) return false;
    }
    return true;
}

bool Monomial::supported_in(const std::vector<bool>& allowed) const {
    for (std::size_t i = 0; i < exps_.size(); ++i) {
        if (exps_[i] > 0 && !allowed[i]) return false;
    }
    return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r(a);
    for (std::size_t i = 0; i < r.exps_.size(); ++i) r.exps_[i] += b.exps_[i];
    return r;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
    Monomial r(a);
    for (std::size_t i = 0; i < r.exps_.size(); ++i) r.exps_[i] -= b.exps_[i];
    return r;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r(a);
    for (std::size_t i = 0; i < r.exps_.size(); ++i) r.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
    return r;
}

bool coprime(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.exps_.size(); ++i) {
        if (a.exps_[i] > 0 && b.exps_[i] > 0) return false;
    }
    return true;
}

namespace {

int grevlex_compare(const Monomial& a, const Monomial& b, const std::vector<bool>* mask, bool flag) {
    unsigned da = 0;
    unsigned db = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (mask && (*mask)[i] != flag) continue;
        da += a[i];
        db += b[i];
    }
    if (da != db) return da < db ? -1 : 1;
    for (std::size_t i = a.size(); i-- > 0;) {
        if (mask && (*mask)[i] != flag) continue;
        if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
    }
    return 0;
}

}  // namespace

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
    switch (kind_) {
    case Kind::grevlex:
        return grevlex_compare(a, b, nullptr, true);
    case Kind::lex:
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
        }
        return 0;
    case Kind::block:
        if (int c = grevlex_compare(a, b, &elim_, true); c != 0) return c;
        return grevlex_compare(a, b, &elim_, false);
    }
    return 0;
}

std::string MonomialOrder::tag() const {
    switch (kind_) {
    case Kind::grevlex: return "grevlex";
    case Kind::lex: return "lex";
    case Kind::block: return "block";
    }
    return "?";
}

std::size_t Ring::index_of(const std::string& name) const {
    auto it = std::find(names.begin(), names.end(), name);
    return static_cast<std::size_t>(it - names.begin());
}

RingPtr make_ring(std::vector<std::string> names, MonomialOrder order) {
    for (std::size_t i = 0; i < names.size(); ++i) {
        for (std::size_t j = i + 1; j < names.size(); ++j) {
            if (names[i] == names[j]) throw InputError("duplicate variable '" + names[i] + "'");
        }
    }
    if (order.kind() == MonomialOrder::Kind::block && order.eliminated().size() != names.size()) {
        throw InputError("block order mask does not match variable count");
    }
    return std::make_shared<const Ring>(Ring{std::move(names), std::move(order)});
}

RingPtr with_order(const RingPtr& ring, MonomialOrder order) { return make_ring(ring->names, std::move(order)); }

}  // namespace dring
