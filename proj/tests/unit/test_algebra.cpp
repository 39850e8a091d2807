#include <doctest.h>

#include <random>

#include "dring/expr_parser.hpp"
#include "dring/field.hpp"
#include "dring/matrix.hpp"
#include "dring/poly.hpp"
#include "dring/series.hpp"
#include "support/oracles.hpp"

using namespace dring;

namespace {

RingPtr xyz() {
    static RingPtr r = make_ring({"x", "y", "z"});
    return r;
}

Poly P(const std::string& s, const RingPtr& r = xyz()) { return parse_polynomial(s, r); }

Series S(std::initializer_list<long> c) {
    std::vector<FieldElement> v;
    for (long x : c) v.emplace_back(Rational(x));
    return Series(std::move(v));
}

}  // namespace

TEST_CASE("rational canonical form") {
    Rational a(6, -4);
    CHECK(a.str() == "-3/2");
    CHECK(a.denominator() == 2);
    CHECK(Rational(0, 7).str() == "0");
    CHECK(Rational::parse("10/4") == Rational(5, 2));
    CHECK_THROWS_AS(Rational::parse("1/0"), InputError);
    CHECK_THROWS_AS(Rational::parse("1.5"), InputError);
    CHECK_THROWS_AS(Rational(1) / Rational(0), InputError);
    CHECK(factorial(5) == Rational(120));
}

TEST_CASE("field axioms on random rational and rational-function operands") {
    std::mt19937 rng(7);
    RingPtr r = make_ring({"z", "w"});
    auto rnd = [&](int kind) -> FieldElement {
        if (kind == 0) return FieldElement(oracle::random_rational(rng));
        Poly num = oracle::random_poly(rng, r, 2, 3);
        Poly den = oracle::random_poly(rng, r, 1, 2);
        if (den.is_zero()) den = Poly::constant(r, Rational(1));
        return FieldElement(RationalFunction(num, den));
    };
    for (int trial = 0; trial < 60; ++trial) {
        FieldElement a = rnd(trial % 2);
        FieldElement b = rnd((trial / 2) % 2);
        FieldElement c = rnd(1);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK(a - a == FieldElement(0));
        if (!a.is_zero()) CHECK(a * a.inverse() == FieldElement(1));
    }
}

TEST_CASE("rational function normalization") {
    RingPtr r = make_ring({"z"});
    RationalFunction f(P("z^2", r), P("z", r));
    CHECK(f.denominator().is_constant());
    CHECK(f.str() == "z");
    RationalFunction g(P("1", r), P("2*z + 2", r));
    CHECK(g.denominator().str() == "z + 1");
    CHECK(g.numerator().str() == "1/2");
    CHECK(FieldElement(RationalFunction(P("3", r))).is_rational());
    CHECK_THROWS_AS(RationalFunction(P("1", r), Poly(r)), InputError);
}

TEST_CASE("poly_arith examples") {
    CHECK((P("x+y") + P("x-y")) == P("2*x"));
    CHECK((P("x+1") * P("x-1")) == P("x^2-1"));
    std::mt19937 rng(3);
    for (int i = 0; i < 10; ++i) CHECK((oracle::random_poly(rng, xyz(), 3, 5) * Poly(xyz())).is_zero());
    RingPtr other = make_ring({"a"});
    CHECK_THROWS_AS(P("x") + Poly::variable(other, 0), InputError);
}

TEST_CASE("canonical rendering is descending grevlex") {
    CHECK(P("-11 - y^2 + x^2*z").str() == "x^2*z - y^2 - 11");
    CHECK(P("5/2*x - x*y").str() == "-x*y + 5/2*x");
    CHECK(P("0").str() == "0");
    CHECK(P("-3/4").str() == "-3/4");
}

TEST_CASE("poly_partial examples") {
    RingPtr r = make_ring({"x", "y"});
    CHECK(P("x^2*y", r).partial(0) == P("2*x*y", r));
    CHECK(P("x^2", r).partial(1).is_zero());
    CHECK(P("x*z").partial(2) == P("x"));
    CHECK_THROWS_AS(static_cast<void>(P("x").partial(3)), InputError);
}

TEST_CASE("poly_translate examples") {
    RingPtr rx = make_ring({"x"});
    std::vector<Rational> two{Rational(2)};
    auto l = poly_translate(P("x^2", rx), two);
    REQUIRE(l.size() == 3);
    CHECK(l[0] == P("4", rx));
    CHECK(l[1] == P("4*x", rx));  // in the centered coordinate x - 2
    CHECK(l[2] == P("x^2", rx));

    RingPtr rxy = make_ring({"x", "y"});
    std::vector<Rational> origin{Rational(0), Rational(0)};
    auto m = poly_translate(P("x*y", rxy), origin);
    CHECK(m[0].is_zero());
    CHECK(m[1].is_zero());
    CHECK(m[2] == P("x*y", rxy));

    std::vector<Rational> ones{Rational(1), Rational(1)};
    auto n = poly_translate(P("x+y+1", rxy), ones);
    CHECK(n[0] == P("3", rxy));
    CHECK(n[1] == P("x+y", rxy));
}

TEST_CASE("property: Taylor parts re-expand to f") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        Poly f = oracle::random_poly(rng, xyz(), 4, 6);
        std::vector<Rational> p{oracle::random_rational(rng), oracle::random_rational(rng), oracle::random_rational(rng)};
        auto parts = poly_translate(f, p);
        Poly centered(xyz());
        for (std::size_t j = 0; j < parts.size(); ++j) {
            CHECK(parts[j] == parts[j].homogeneous_part(static_cast<unsigned>(j)));
            centered += parts[j];
        }
        std::vector<Rational> back{-p[0], -p[1], -p[2]};
        CHECK(centered.shift(back) == f);
        CHECK(parts[0].constant_term() == f.evaluate(p));
    }
}

TEST_CASE("poly_eval_series examples") {
    RingPtr rx = make_ring({"x"});
    std::vector<Series> a{S({1, 1, 0})};
    CHECK(poly_eval_series<FieldElement>(P("x^2", rx), a, 2) == S({1, 2, 1}));

    RingPtr rxy = make_ring({"x", "y"});
    std::vector<Series> b{S({0, 1, 0, 0}), S({0, 1, 0, 0})};
    CHECK(poly_eval_series<FieldElement>(P("x+y", rxy), b, 3) == S({0, 2, 0, 0}));

    // direct product (2+3t)(5) = 10 + 15t
    std::vector<Series> c{S({2, 3}), S({3, 0}), S({5, 0})};
    CHECK(poly_eval_series<FieldElement>(P("x*z"), c, 1) == S({10, 15}));

    std::vector<Series> short_args{S({1}), S({1}), S({1})};
    CHECK_THROWS_AS(poly_eval_series<FieldElement>(P("x"), short_args, 2), InputError);
}

TEST_CASE("property: composition is multiplicative and agrees with the Taylor route") {
    std::mt19937 rng(5);
    const std::size_t r = 5;
    for (int trial = 0; trial < 25; ++trial) {
        Poly f = oracle::random_poly(rng, xyz(), 3, 4);
        Poly g = oracle::random_poly(rng, xyz(), 3, 4);
        std::vector<Series> args;
        std::vector<Rational> p;
        for (int i = 0; i < 3; ++i) {
            std::vector<FieldElement> c;
            for (std::size_t k = 0; k <= r; ++k) c.emplace_back(oracle::random_rational(rng));
            p.push_back(c[0].rational());
            args.emplace_back(std::move(c));
        }
        auto fa = poly_eval_series<FieldElement>(f, args, r);
        auto ga = poly_eval_series<FieldElement>(g, args, r);
        CHECK(poly_eval_series<FieldElement>(f * g, args, r) == fa * ga);

        // sum_j λ^j([x - p]_r) mod t^{r+1}
        auto parts = poly_translate(f, p);
        std::vector<Series> centered = args;
        for (int i = 0; i < 3; ++i) centered[i][0] = FieldElement(0);
        Series acc(r);
        for (std::size_t j = 0; j < parts.size() && j <= r; ++j) acc = acc + poly_eval_series<FieldElement>(parts[j], centered, r);
        CHECK(acc == fa);
    }
}

TEST_CASE("series_derive and truncate") {
    std::vector<FieldElement> e{FieldElement(1), FieldElement(1), FieldElement(Rational(1, 2))};
    CHECK(series_derive(Series(e)) == S({1, 1}));
    CHECK(series_derive(S({7, 0, 0})) == S({0, 0}));
    CHECK(series_derive(S({0, 0, 0, 1})) == S({0, 0, 3}));
    CHECK_THROWS_AS(series_derive(S({4})), InputError);

    Series s = S({1, 1, 1, 1});
    CHECK(truncate(s, 2) == S({1, 1, 1}));
    CHECK(truncate(truncate(s, 3), 3) == truncate(s, 3));
    CHECK(truncate(S({0, 0, 0}), 1).is_zero());
    CHECK_THROWS_AS(truncate(s, 4), InputError);
}

TEST_CASE("property: Leibniz rule for series") {
    std::mt19937 rng(9);
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<FieldElement> a;
        std::vector<FieldElement> b;
        for (int k = 0; k <= 6; ++k) {
            a.emplace_back(oracle::random_rational(rng));
            b.emplace_back(oracle::random_rational(rng));
        }
        Series sa(a);
        Series sb(b);
        Series lhs = series_derive(sa * sb);
        Series rhs = series_derive(sa) * truncate(sb, 5) + truncate(sa, 5) * series_derive(sb);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("rref examples") {
    using M = Matrix<Rational>;
    auto r1 = rref(M({{Rational(1), Rational(2)}, {Rational(2), Rational(4)}}));
    CHECK(r1.rank == 1);
    REQUIRE(r1.kernel.size() == 1);
    CHECK(r1.kernel[0] == std::vector<Rational>{Rational(-2), Rational(1)});

    M id(3, 3);
    for (int i = 0; i < 3; ++i) id(i, i) = Rational(1);
    auto r2 = rref(id);
    CHECK(r2.rank == 3);
    CHECK(r2.kernel.empty());

    auto r3 = rref(M(2, 3));
    CHECK(r3.rank == 0);
    CHECK(r3.kernel.size() == 3);
}

TEST_CASE("property: rref row space and kernel") {
    std::mt19937 rng(21);
    std::uniform_int_distribution<int> dim(1, 5);
    for (int trial = 0; trial < 40; ++trial) {
        int nr = dim(rng);
        int nc = dim(rng);
        std::vector<std::vector<Rational>> rows(nr, std::vector<Rational>(nc));
        for (auto& row : rows) {
            for (auto& v : row) v = (rng() % 3 == 0) ? Rational(0) : oracle::random_rational(rng, 3);
        }
        if (nr > 1 && trial % 3 == 0) rows[1] = rows[0];
        Matrix<Rational> m(rows);
        auto res = rref(m);
        CHECK(res.rank == oracle::naive_rank(rows));
        CHECK(res.rank + res.kernel.size() == static_cast<std::size_t>(nc));
        for (const auto& v : res.kernel) {
            for (const auto& x : m.apply(v)) CHECK(x.is_zero());
        }
        // same row space: stacking does not raise the rank either way
        std::vector<std::vector<Rational>> stacked = rows;
        for (std::size_t i = 0; i < res.rank; ++i) stacked.push_back(res.reduced.row(i));
        CHECK(oracle::naive_rank(stacked) == res.rank);
        // echelon shape
        for (std::size_t i = 0; i < res.rank; ++i) {
            CHECK(res.reduced(i, res.pivots[i]).is_one());
            if (i > 0) CHECK(res.pivots[i] > res.pivots[i - 1]);
            for (std::size_t k = 0; k < static_cast<std::size_t>(nr); ++k) {
                if (k != i) CHECK(res.reduced(k, res.pivots[i]).is_zero());
            }
        }
    }
}

TEST_CASE("rref over rational functions") {
    RingPtr r = make_ring({"z"});
    FieldElement z(RationalFunction(P("z", r)));
    Matrix<FieldElement> m(std::vector<std::vector<FieldElement>>{{FieldElement(1), z}, {z, z * z}});
    auto res = rref(m);
    CHECK(res.rank == 1);
    REQUIRE(res.kernel.size() == 1);
    CHECK(res.kernel[0][0] == -z);
}
