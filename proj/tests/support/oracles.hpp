#pragma once

// Test-only oracles. Nothing here calls into the library's linear algebra
// or Groebner code, so the checks stay independent of the paths they test.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <random>
#include <vector>

#include "dring/poly.hpp"
#include "dring/rational.hpp"

namespace oracle {

using dring::Monomial;
using dring::Poly;
using dring::Rational;
using dring::RingPtr;

/// Plain Gaussian elimination rank.
inline std::size_t naive_rank(std::vector<std::vector<Rational>> m) {
    if (m.empty()) return 0;
    const std::size_t cols = m[0].size();
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
        std::size_t p = rank;
        while (p < m.size() && m[p][c].is_zero()) ++p;
        if (p == m.size()) continue;
        std::swap(m[p], m[rank]);
        for (std::size_t r = rank + 1; r < m.size(); ++r) {
            if (m[r][c].is_zero()) continue;
            Rational f = m[r][c] / m[rank][c];
            for (std::size_t k = c; k < cols; ++k) m[r][k] -= f * m[rank][k];
        }
        ++rank;
    }
    return rank;
}

/// All exponent vectors of total degree <= d in n variables.
inline std::vector<Monomial> all_monomials(std::size_t n, unsigned d) {
    std::vector<Monomial> out;
    std::vector<unsigned> e(n, 0);
    std::function<void(std::size_t, unsigned)> rec = [&](std::size_t i, unsigned budget) {
        if (i == n) {
            out.emplace_back(e);
            return;
        }
        for (unsigned k = 0; k <= budget; ++k) {
            e[i] = k;
            rec(i + 1, budget - k);
        }
        e[i] = 0;
    };
    rec(0, d);
    return out;
}

/// Is f = sum h_i g_i with deg h_i <= bound? Decided by a linear system on
/// the coefficients of the h_i.
inline bool bounded_membership(const Poly& f, const std::vector<Poly>& gens, unsigned bound) {
    const RingPtr& ring = f.ring();
    auto mults = all_monomials(ring->size(), bound);
    std::vector<Poly> columns;
    for (const auto& g : gens) {
        for (const auto& m : mults) columns.push_back(g * Poly::monomial(ring, m));
    }
    std::vector<Monomial> support;
    auto note = [&](const Poly& p) {
        for (const auto& t : p.terms()) {
            bool seen = false;
            for (const auto& s : support) seen = seen || s == t.monomial;
            if (!seen) support.push_back(t.monomial);
        }
    };
    for (const auto& c : columns) note(c);
    note(f);
    std::vector<std::vector<Rational>> a;
    std::vector<std::vector<Rational>> ab;
    for (const auto& m : support) {
        std::vector<Rational> row;
        for (const auto& c : columns) row.push_back(c.coeff(m));
        a.push_back(row);
        row.push_back(f.coeff(m));
        ab.push_back(row);
    }
    return naive_rank(a) == naive_rank(ab);
}

/// Krull dimension of k[x]/M for a monomial ideal M from the growth of the
/// affine Hilbert function: #standard monomials of degree <= D is a
/// polynomial in D of degree dim for large D.
inline int hilbert_dimension(const std::vector<Monomial>& gens, std::size_t n, unsigned start = 14) {
    auto count = [&](unsigned d) {
        long c = 0;
        for (const auto& m : all_monomials(n, d)) {
            bool in = false;
            for (const auto& g : gens) in = in || g.divides(m);
            if (!in) ++c;
        }
        return c;
    };
    std::vector<long> h;
    for (unsigned d = start; d <= start + n + 1; ++d) h.push_back(count(d));
    if (h.back() == 0) return -1;
    // smallest k whose (k+1)-th difference vanishes
    for (int k = 0; k <= static_cast<int>(n); ++k) {
        std::vector<long> diff = h;
        for (int s = 0; s <= k; ++s) {
            for (std::size_t i = 0; i + 1 < diff.size(); ++i) diff[i] = diff[i + 1] - diff[i];
            diff.pop_back();
        }
        bool zero = true;
        for (long v : diff) zero = zero && v == 0;
        if (zero) return k;
    }
    return static_cast<int>(n);
}

/// Krull dimension of k[x]/M for a monomial ideal M by brute force: the
/// largest variable subset S such that no generator is a monomial in S alone.
inline int independent_set_dimension(const std::vector<Monomial>& gens, std::size_t n) {
    for (const auto& g : gens) {
        if (g.degree() == 0) return -1;
    }
    int best = 0;
    for (unsigned long mask = 0; mask < (1UL << n); ++mask) {
        bool independent = true;
        for (const auto& g : gens) {
            bool inside = true;
            for (std::size_t i = 0; i < n; ++i) inside = inside && (g[i] == 0 || ((mask >> i) & 1UL));
            independent = independent && !inside;
        }
        if (independent) best = std::max(best, __builtin_popcountl(mask));
    }
    return best;
}

/// Coefficient of t^n in x(t) for y∂x + xz∂y through (a, b, c):
/// a c^m/(2m)! for n = 2m, b c^m/(2m+1)! for n = 2m+1.
inline Rational closed_form_x(const Rational& a, const Rational& b, const Rational& c, unsigned n) {
    Rational cm(1);
    for (unsigned k = 0; k < n / 2; ++k) cm *= c;
    Rational fact(1);
    for (unsigned k = 2; k <= n; ++k) fact *= Rational(static_cast<long>(k));
    return (n % 2 == 0 ? a : b) * cm / fact;
}

/// Small random polynomial with integer coefficients in [-range, range].
inline Poly random_poly(std::mt19937& rng, const RingPtr& ring, unsigned max_degree, std::size_t max_terms,
                        int range = 3) {
    std::uniform_int_distribution<int> coeff(-range, range);
    std::uniform_int_distribution<unsigned> deg(0, max_degree);
    std::uniform_int_distribution<std::size_t> nterms(0, max_terms);
    std::uniform_int_distribution<std::size_t> var(0, ring->size() - 1);
    std::vector<dring::Term> terms;
    std::size_t k = nterms(rng);
    for (std::size_t i = 0; i < k; ++i) {
        Monomial m(ring->size());
        unsigned d = deg(rng);
        for (unsigned j = 0; j < d; ++j) m[var(rng)] += 1;
        terms.push_back({m, Rational(coeff(rng))});
    }
    return Poly(ring, std::move(terms));
}

inline Rational random_rational(std::mt19937& rng, int range = 5) {
    std::uniform_int_distribution<int> num(-range, range);
    std::uniform_int_distribution<int> den(1, 3);
    return Rational(num(rng), den(rng));
}

}  // namespace oracle
