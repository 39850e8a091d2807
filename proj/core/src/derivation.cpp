#include "dring/derivation.hpp"

#include <algorithm>

#include "dring/errors.hpp"

namespace dring {

Derivation::Derivation(RingPtr ring, std::vector<Poly> coeffs, std::optional<Ideal> quotient)
    : ring_(std::move(ring)), coeffs_(std::move(coeffs)), quotient_(std::move(quotient)) {
    if (coeffs_.size() != ring_->size()) {
        throw InputError("derivation needs " + std::to_string(ring_->size()) + " coefficients, got " +
                         std::to_string(coeffs_.size()));
    }
    for (const auto& c : coeffs_) {
        if (!same_ring(c.ring(), ring_)) throw InputError("derivation coefficient belongs to a different ring");
    }
    if (quotient_) {
        if (!same_ring(quotient_->ring(), ring_)) throw InputError("quotient ideal belongs to a different ring");
        if (!stabilizes(*this, *quotient_)) {
            throw InputError("derivation does not stabilize the quotient ideal " + quotient_->str());
        }
    }
}

Derivation Derivation::zero(RingPtr ring) {
    std::vector<Poly> c(ring->size(), Poly(ring));
    return Derivation(ring, std::move(c));
}

int Derivation::max_coeff_degree() const {
    int d = 0;
    for (const auto& c : coeffs_) d = std::max(d, c.total_degree());
    return d;
}

std::string Derivation::str() const {
    std::string out = "[";
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (i) out += ", ";
        out += coeffs_[i].str();
    }
    return out + "]";
}

Poly apply(const Derivation& d, const Poly& f) {
    if (!same_ring(f.ring(), d.ring())) throw InputError("polynomial and derivation belong to different rings");
    Poly out(d.ring());
    for (std::size_t i = 0; i < d.ring()->size(); ++i) {
        if (d.coeff(i).is_zero()) continue;
        Poly p = f.partial(i);
        if (p.is_zero()) continue;
        out += d.coeff(i) * p;
    }
    return out;
}

Poly apply_power(const Derivation& d, const Poly& f, unsigned n) {
    Poly g = f;
    for (unsigned k = 0; k < n && !g.is_zero(); ++k) g = apply(d, g);
    return g;
}

std::vector<Poly> exp_map(const Derivation& d, const Poly& f, std::size_t order) {
    std::vector<Poly> out;
    out.reserve(order + 1);
    Poly g = f;
    for (std::size_t n = 0; n <= order; ++n) {
        out.push_back(g * factorial(static_cast<unsigned>(n)).inverse());
        if (n < order) g = apply(d, g);
    }
    return out;
}

bool stabilizes(const Derivation& d, const Ideal& ideal) {
    return std::all_of(ideal.generators().begin(), ideal.generators().end(),
                       [&](const Poly& g) { return ideal.contains(apply(d, g)); });
}

Ideal saturate_stable(const Derivation& d, const Ideal& seed, std::size_t cap) {
    Ideal current = seed;
    for (std::size_t round = 0; round < cap; ++round) {
        std::vector<Poly> images;
        for (const auto& g : current.basis().elements) {
            Poly h = apply(d, g.in_ring(d.ring()));
            if (!current.contains(h)) images.push_back(std::move(h));
        }
        if (images.empty()) return current;
        Ideal next = current.plus(images);
        // keep the reduced basis as generators so later rounds stay small
        std::vector<Poly> gens;
        for (const auto& g : next.basis().elements) gens.push_back(g.in_ring(d.ring()));
        current = Ideal(d.ring(), std::move(gens));
    }
    throw ResourceError("D-stable saturation did not stabilize within " + std::to_string(cap) + " rounds");
}

NilpotencyResult is_locally_nilpotent_up_to(const Derivation& d, unsigned bound) {
    NilpotencyResult res;
    res.nilpotent = true;
    for (std::size_t i = 0; i < d.ring()->size(); ++i) {
        Poly g = Poly::variable(d.ring(), i);
        std::optional<unsigned> hit;
        for (unsigned n = 0; n <= bound; ++n) {
            if (g.is_zero()) {
                hit = n;
                break;
            }
            if (n < bound) g = apply(d, g);
        }
        if (!hit) res.nilpotent = false;
        res.index.push_back(hit);
    }
    return res;
}

namespace {

// All products of 2..max_degree generators, with repetition.
std::vector<Poly> generator_products(const std::vector<Poly>& gens, unsigned max_degree) {
    std::vector<Poly> out;
    std::vector<std::pair<Poly, std::size_t>> layer;
    for (std::size_t i = 0; i < gens.size(); ++i) layer.emplace_back(gens[i], i);
    for (unsigned deg = 2; deg <= max_degree; ++deg) {
        std::vector<std::pair<Poly, std::size_t>> next;
        for (const auto& [p, last] : layer) {
            for (std::size_t i = last; i < gens.size(); ++i) {
                next.emplace_back(p * gens[i], i);
                out.push_back(next.back().first);
            }
        }
        layer = std::move(next);
    }
    return out;
}

}  // namespace

EllReport ell_search(const Derivation& d, const Ideal& m, unsigned bound, unsigned probe_degree) {
    EllReport rep;
    const auto& gens = m.generators();
    std::vector<Poly> images = gens;
    for (unsigned ell = 1; ell <= bound; ++ell) {
        for (auto& g : images) g = apply(d, g);
        bool inside = std::all_of(images.begin(), images.end(), [&](const Poly& g) { return m.contains(g); });
        if (inside) {
            rep.generator_ell = ell;
            break;
        }
    }
    if (!rep.generator_ell) return rep;
    for (auto& probe : generator_products(gens, probe_degree)) {
        if (!m.contains(apply_power(d, probe, *rep.generator_ell))) rep.probe_violations.push_back(std::move(probe));
    }
    return rep;
}

bool ln_simplicity_criterion(const Derivation& d, const Ideal& m, unsigned ell) {
    if (ell == 0) throw InputError("ell must be at least 1");
    std::vector<Poly> images;
    for (const auto& g : m.generators()) images.push_back(apply_power(d, g, ell - 1));
    Ideal generated(d.ring(), std::move(images));
    return generated.contains(Poly::constant(d.ring(), Rational(1)));
}

}  // namespace dring
