#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

namespace dring {

/// Exponent vector, one entry per ring variable.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
    explicit Monomial(std::vector<unsigned> exps) : exps_(std::move(exps)) {}

    static Monomial variable(std::size_t nvars, std::size_t index, unsigned power = 1);

    [[nodiscard]] std::size_t size() const { return exps_.size(); }
    [[nodiscard]] unsigned operator[](std::size_t i) const { return exps_[i]; }
    unsigned& operator[](std::size_t i) { return exps_[i]; }
    [[nodiscard]] const std::vector<unsigned>& exponents() const { return exps_; }

    [[nodiscard]] unsigned degree() const;
    [[nodiscard]] bool is_one() const { return degree() == 0; }
    [[nodiscard]] bool divides(const Monomial& other) const;
    /// Bitmask-free support test: true when every variable with a positive
    /// exponent is flagged in `allowed`.
    [[nodiscard]] bool supported_in(const std::vector<bool>& allowed) const;

    friend Monomial operator*(const Monomial& a, const Monomial& b);
    /// Requires b | a.
    friend Monomial operator/(const Monomial& a, const Monomial& b);
    friend Monomial lcm(const Monomial& a, const Monomial& b);
    friend bool coprime(const Monomial& a, const Monomial& b);

    friend bool operator==(const Monomial&, const Monomial&) = default;

private:
    std::vector<unsigned> exps_;
};

/// Total order on monomials compatible with multiplication.
class MonomialOrder {
public:
    enum class Kind { grevlex, lex, block };

    MonomialOrder() = default;
    static MonomialOrder grevlex() { return MonomialOrder(Kind::grevlex, {}); }
    static MonomialOrder lex() { return MonomialOrder(Kind::lex, {}); }
    /// Variables flagged in `eliminated` are larger than any monomial in the
    /// remaining ones; grevlex inside each block.
    static MonomialOrder block(std::vector<bool> eliminated) {
        return MonomialOrder(Kind::block, std::move(eliminated));
    }

    [[nodiscard]] Kind kind() const { return kind_; }
    [[nodiscard]] const std::vector<bool>& eliminated() const { return elim_; }

    /// Negative, zero or positive as a is smaller than, equal to or larger than b.
    [[nodiscard]] int compare(const Monomial& a, const Monomial& b) const;

    [[nodiscard]] std::string tag() const;

    friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

private:
    MonomialOrder(Kind k, std::vector<bool> elim) : kind_(k), elim_(std::move(elim)) {}

    Kind kind_ = Kind::grevlex;
    std::vector<bool> elim_;
};

/// Variable names plus the active monomial order.
struct Ring {
    std::vector<std::string> names;
    MonomialOrder order;

    [[nodiscard]] std::size_t size() const { return names.size(); }
    /// Index of `name` or `size()` when absent.
    [[nodiscard]] std::size_t index_of(const std::string& name) const;

    friend bool operator==(const Ring&, const Ring&) = default;
};

using RingPtr = std::shared_ptr<const Ring>;

RingPtr make_ring(std::vector<std::string> names, MonomialOrder order = MonomialOrder::grevlex());

/// Same variables, different order.
RingPtr with_order(const RingPtr& ring, MonomialOrder order);

inline bool same_ring(const RingPtr& a, const RingPtr& b) { return a == b || *a == *b; }

}  // namespace dring
