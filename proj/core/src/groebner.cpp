#include "dring/groebner.hpp"

#include <algorithm>
#include <tuple>

#include "dring/errors.hpp"

namespace dring {

namespace {

struct Pair {
    std::size_t i;
    std::size_t j;
    Monomial lcm;
    unsigned degree;
};

Poly s_polynomial(const Poly& f, const Poly& g, const Monomial& l) {
    Poly s = f * Poly::monomial(f.ring(), l / f.leading_monomial(), g.leading_coeff());
    s.sub_scaled(g, f.leading_coeff(), l / g.leading_monomial());
    return s;
}

// Only valid on a Groebner basis: redundant leading terms are dropped outright.
std::vector<Poly> interreduce(std::vector<Poly> basis, const MonomialOrder& order) {
    // drop elements whose leading monomial is divisible by another one
    std::sort(basis.begin(), basis.end(),
              [&](const Poly& a, const Poly& b) { return order.compare(a.leading_monomial(), b.leading_monomial()) < 0; });
    std::vector<Poly> minimal;
    for (auto& g : basis) {
        bool redundant = std::any_of(minimal.begin(), minimal.end(), [&](const Poly& h) {
            return h.leading_monomial().divides(g.leading_monomial());
        });
        if (!redundant) minimal.push_back(std::move(g));
    }
    std::vector<Poly> reduced;
    reduced.reserve(minimal.size());
    for (std::size_t k = 0; k < minimal.size(); ++k) {
        std::vector<Poly> others;
        for (std::size_t m = 0; m < minimal.size(); ++m) {
            if (m != k) others.push_back(minimal[m]);
        }
        reduced.push_back(reduce(minimal[k], others).monic());
    }
    std::sort(reduced.begin(), reduced.end(),
              [&](const Poly& a, const Poly& b) { return order.compare(a.leading_monomial(), b.leading_monomial()) > 0; });
    return reduced;
}

}  // namespace

Poly reduce(const Poly& f, const std::vector<Poly>& divisors) {
    Poly p = f;
    std::vector<Term> rem;
    while (!p.is_zero()) {
        const Term& lt = p.leading_term();
        const Poly* hit = nullptr;
        for (const auto& g : divisors) {
            if (!g.is_zero() && g.leading_monomial().divides(lt.monomial)) {
                hit = &g;
                break;
            }
        }
        if (hit == nullptr) {
            rem.push_back(p.take_leading());
            continue;
        }
        Rational c = lt.coeff / hit->leading_coeff();
        Monomial m = lt.monomial / hit->leading_monomial();
        p.sub_scaled(*hit, c, m);
    }
    return Poly(f.ring(), std::move(rem));
}

GroebnerBasis buchberger(const std::vector<Poly>& gens, const MonomialOrder& order, std::size_t work_cap) {
    if (gens.empty()) throw InputError("buchberger needs at least one generator to fix the ring");
    RingPtr ring = gens.front().ring()->order == order ? gens.front().ring() : with_order(gens.front().ring(), order);

    std::vector<Poly> basis;
    for (const auto& g : gens) {
        if (!same_ring(g.ring(), gens.front().ring())) throw InputError("generators belong to different rings");
        if (!g.is_zero()) basis.push_back(g.in_ring(ring).monic());
    }
    if (basis.empty()) return GroebnerBasis{ring, {}};

    std::vector<Pair> pairs;
    auto add_pairs = [&](std::size_t j) {
        for (std::size_t i = 0; i < j; ++i) {
            const auto& a = basis[i].leading_monomial();
            const auto& b = basis[j].leading_monomial();
            if (coprime(a, b)) continue;  // product criterion
            Monomial l = lcm(a, b);
            unsigned d = l.degree();
            pairs.push_back({i, j, std::move(l), d});
        }
    };
    for (std::size_t j = 1; j < basis.size(); ++j) add_pairs(j);

    std::size_t work = 0;
    while (!pairs.empty()) {
        auto best = std::min_element(pairs.begin(), pairs.end(), [&](const Pair& a, const Pair& b) {
            if (a.degree != b.degree) return a.degree < b.degree;
            int c = order.compare(a.lcm, b.lcm);
            if (c != 0) return c < 0;
            return std::tie(a.j, a.i) < std::tie(b.j, b.i);
        });
        Pair pr = *best;
        pairs.erase(best);
        if (++work > work_cap) {
            throw ResourceError("Groebner basis work cap of " + std::to_string(work_cap) + " S-pair reductions exceeded");
        }
        Poly h = reduce(s_polynomial(basis[pr.i], basis[pr.j], pr.lcm), basis);
        if (h.is_zero()) continue;
        basis.push_back(h.monic());
        if (basis.back().is_constant()) {
            return GroebnerBasis{ring, {Poly::constant(ring, Rational(1))}};
        }
        add_pairs(basis.size() - 1);
    }
    return GroebnerBasis{ring, interreduce(std::move(basis), order)};
}

Poly normal_form(const Poly& f, const GroebnerBasis& gb) {
    if (gb.ring == nullptr) return f;
    if (same_ring(f.ring(), gb.ring)) return reduce(f, gb.elements);
    return reduce(f.in_ring(gb.ring), gb.elements).in_ring(f.ring());
}

Ideal::Ideal(RingPtr ring, std::vector<Poly> gens) : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {
    for (auto& g : gens) {
        if (!same_ring(g.ring(), ring_)) throw InputError("ideal generator belongs to a different ring");
        if (!g.is_zero()) gens_.push_back(std::move(g));
    }
}

const GroebnerBasis& Ideal::basis() const {
    std::call_once(cache_->once, [this] {
        if (gens_.empty()) {
            cache_->basis = GroebnerBasis{ring_, {}};
        } else {
            cache_->basis = buchberger(gens_, ring_->order);
        }
    });
    return *cache_->basis;
}

bool Ideal::contains(const Poly& f) const { return normal_form(f, basis()).is_zero(); }

bool Ideal::contains(const Ideal& other) const {
    return std::all_of(other.gens_.begin(), other.gens_.end(), [&](const Poly& g) { return contains(g); });
}

Ideal Ideal::plus(const std::vector<Poly>& extra) const {
    std::vector<Poly> all = gens_;
    all.insert(all.end(), extra.begin(), extra.end());
    return Ideal(ring_, std::move(all));
}

std::string Ideal::str() const {
    std::string out = "(";
    const auto& b = basis().elements;
    if (b.empty()) return "(0)";
    for (std::size_t i = 0; i < b.size(); ++i) {
        if (i) out += ", ";
        out += b[i].str();
    }
    return out + ")";
}

bool contains(const Ideal& ideal, const Poly& f) { return ideal.contains(f); }

bool ideal_equal(const Ideal& a, const Ideal& b) {
    if (!same_ring(a.ring(), b.ring())) throw InputError("ideals belong to different rings");
    return a.basis().elements == b.basis().elements;
}

RingPtr extend_ring(const RingPtr& ring, const std::vector<std::string>& extra, MonomialOrder order) {
    std::vector<std::string> names = ring->names;
    for (const auto& e : extra) {
        std::string n = e;
        while (ring->index_of(n) != ring->size()) n += "_";
        names.push_back(n);
    }
    return make_ring(std::move(names), std::move(order));
}

Poly embed(const Poly& f, const RingPtr& bigger) {
    std::vector<Term> terms;
    terms.reserve(f.size());
    for (const auto& t : f.terms()) {
        std::vector<unsigned> e = t.monomial.exponents();
        e.resize(bigger->size(), 0);
        terms.push_back({Monomial(std::move(e)), t.coeff});
    }
    return Poly(bigger, std::move(terms));
}

Poly restrict_to(const Poly& f, const RingPtr& smaller) {
    std::vector<Term> terms;
    terms.reserve(f.size());
    for (const auto& t : f.terms()) {
        std::vector<unsigned> e = t.monomial.exponents();
        for (std::size_t i = smaller->size(); i < e.size(); ++i) {
            if (e[i] != 0) throw InputError("cannot restrict a polynomial that uses dropped variables");
        }
        e.resize(smaller->size());
        terms.push_back({Monomial(std::move(e)), t.coeff});
    }
    return Poly(smaller, std::move(terms));
}

Ideal eliminate(const Ideal& ideal, const std::vector<std::size_t>& vars) {
    const RingPtr& ring = ideal.ring();
    std::vector<bool> elim(ring->size(), false);
    for (auto v : vars) {
        if (v >= ring->size()) throw InputError("elimination variable out of range");
        elim[v] = true;
    }
    if (ideal.is_zero()) return Ideal(ring);
    GroebnerBasis gb = buchberger(ideal.generators(), MonomialOrder::block(elim));
    std::vector<bool> keep(elim.size());
    for (std::size_t i = 0; i < elim.size(); ++i) keep[i] = !elim[i];
    std::vector<Poly> out;
    for (const auto& g : gb.elements) {
        if (g.supported_in(keep)) out.push_back(g.in_ring(ring));
    }
    return Ideal(ring, std::move(out));
}

Ideal intersect(const Ideal& a, const Ideal& b) {
    if (!same_ring(a.ring(), b.ring())) throw InputError("ideals belong to different rings");
    const RingPtr& ring = a.ring();
    if (a.is_zero() || b.is_zero()) return Ideal(ring);
    std::vector<bool> elim(ring->size() + 1, false);
    elim.back() = true;
    RingPtr big = extend_ring(ring, {"w"}, MonomialOrder::block(elim));
    Poly w = Poly::variable(big, ring->size());
    Poly one_minus_w = Poly::constant(big, Rational(1)) - w;
    std::vector<Poly> gens;
    for (const auto& g : a.generators()) gens.push_back(w * embed(g, big));
    for (const auto& g : b.generators()) gens.push_back(one_minus_w * embed(g, big));
    GroebnerBasis gb = buchberger(gens, big->order);
    std::vector<bool> keep(elim.size(), true);
    keep.back() = false;
    std::vector<Poly> out;
    for (const auto& g : gb.elements) {
        if (g.supported_in(keep)) out.push_back(restrict_to(g, ring));
    }
    return Ideal(ring, std::move(out));
}

Ideal quotient(const Ideal& ideal, const Poly& g) {
    if (g.is_zero()) throw InputError("ideal quotient by the zero polynomial");
    Ideal inter = intersect(ideal, Ideal(ideal.ring(), {g}));
    std::vector<Poly> out;
    for (const auto& h : inter.generators()) {
        auto q = h.divide_exact(g);
        if (!q) throw InconsistencyError("intersection generator not divisible by the quotient polynomial");
        out.push_back(std::move(*q));
    }
    return Ideal(ideal.ring(), std::move(out));
}

int dimension(const Ideal& ideal) {
    const auto& gb = ideal.basis();
    if (gb.is_unit()) return -1;
    const std::size_t n = ideal.ring()->size();
    if (n > 24) throw ResourceError("dimension search limited to 24 variables");
    int best = 0;
    for (unsigned long mask = 0; mask < (1UL << n); ++mask) {
        int size = __builtin_popcountl(mask);
        if (size <= best) continue;
        std::vector<bool> allowed(n);
        for (std::size_t i = 0; i < n; ++i) allowed[i] = (mask >> i) & 1UL;
        bool independent = std::none_of(gb.elements.begin(), gb.elements.end(),
                                        [&](const Poly& g) { return g.leading_monomial().supported_in(allowed); });
        if (independent) best = size;
    }
    return best;
}

}  // namespace dring
