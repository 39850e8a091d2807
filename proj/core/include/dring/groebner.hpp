#pragma once

#include <cstddef>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "dring/poly.hpp"

namespace dring {

inline constexpr std::size_t kDefaultGroebnerWorkCap = 100000;

/// Reduced, monic Groebner basis sorted by leading monomial (descending).
struct GroebnerBasis {
    RingPtr ring;  // carries the order the basis was computed for
    std::vector<Poly> elements;

    [[nodiscard]] bool is_unit() const { return elements.size() == 1 && elements[0].is_constant(); }
};

/// Buchberger's algorithm with normal pair selection and the product
/// criterion. Throws ResourceError after `work_cap` S-pair reductions.
GroebnerBasis buchberger(const std::vector<Poly>& gens, const MonomialOrder& order,
                         std::size_t work_cap = kDefaultGroebnerWorkCap);

/// Fully reduced remainder of f modulo the basis, in f's ring.
Poly normal_form(const Poly& f, const GroebnerBasis& gb);

/// Remainder of f on division by an arbitrary list sharing f's ring.
Poly reduce(const Poly& f, const std::vector<Poly>& divisors);

/// Polynomial ideal given by generators. The Groebner basis for the ring's
/// own order is computed lazily, once, and shared between copies.
class Ideal {
public:
    explicit Ideal(RingPtr ring, std::vector<Poly> gens = {});

    static Ideal unit(RingPtr ring) { return Ideal(ring, {Poly::constant(ring, Rational(1))}); }

    [[nodiscard]] const RingPtr& ring() const { return ring_; }
    [[nodiscard]] const std::vector<Poly>& generators() const { return gens_; }
    [[nodiscard]] const GroebnerBasis& basis() const;

    [[nodiscard]] bool contains(const Poly& f) const;
    [[nodiscard]] bool contains(const Ideal& other) const;
    [[nodiscard]] bool is_zero() const { return gens_.empty(); }
    [[nodiscard]] bool is_unit() const { return basis().is_unit(); }

    /// I + (extra)
    [[nodiscard]] Ideal plus(const std::vector<Poly>& extra) const;
    [[nodiscard]] Ideal plus(const Ideal& other) const { return plus(other.gens_); }

    /// `(g1, g2, ...)` using the reduced basis.
    [[nodiscard]] std::string str() const;

private:
    struct Cache {
        std::once_flag once;
        std::optional<GroebnerBasis> basis;
    };

    RingPtr ring_;
    std::vector<Poly> gens_;
    std::shared_ptr<Cache> cache_;
};

bool contains(const Ideal& ideal, const Poly& f);
bool ideal_equal(const Ideal& a, const Ideal& b);

/// I ∩ k[remaining variables]; the result lives in the same ring.
Ideal eliminate(const Ideal& ideal, const std::vector<std::size_t>& vars);

Ideal intersect(const Ideal& a, const Ideal& b);

/// (I : g). Throws InputError when g is zero.
Ideal quotient(const Ideal& ideal, const Poly& g);

/// Krull dimension of R/I: the largest set of variables such that no
/// leading monomial of the basis lives purely in them. -1 for the unit ideal.
int dimension(const Ideal& ideal);

/// Ring with the same variables followed by `extra` new ones.
RingPtr extend_ring(const RingPtr& ring, const std::vector<std::string>& extra, MonomialOrder order);
/// Embeds f into a ring that extends f's ring by trailing variables.
Poly embed(const Poly& f, const RingPtr& bigger);
/// Drops trailing variables (which must not occur in f).
Poly restrict_to(const Poly& f, const RingPtr& smaller);

}  // namespace dring
