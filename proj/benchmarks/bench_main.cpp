#include <benchmark/benchmark.h>

#include "dring/derivation.hpp"
#include "dring/expr_parser.hpp"
#include "dring/groebner.hpp"
#include "dring/solver.hpp"

using namespace dring;

namespace {

RingPtr xyz() {
    static RingPtr r = make_ring({"x", "y", "z"});
    return r;
}

Derivation first_integrals() {
    RingPtr r = xyz();
    return Derivation(r, {parse_polynomial("y", r), parse_polynomial("x*z", r), Poly(r)});
}

PrimeSpec point235() { return PrimeSpec::point({Rational(2), Rational(3), Rational(5)}); }

void BM_SolveExponential(benchmark::State& state) {
    Derivation d = first_integrals();
    auto order = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(solve_exponential(d, point235(), order));
}
BENCHMARK(BM_SolveExponential)->Arg(8)->Arg(12)->Arg(20);

void BM_SolveOde(benchmark::State& state) {
    Derivation d = first_integrals();
    auto order = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(solve_ode(d, point235(), order));
}
BENCHMARK(BM_SolveOde)->Arg(8)->Arg(12)->Arg(20);

void BM_Buchberger(benchmark::State& state) {
    RingPtr r = xyz();
    std::vector<Poly> gens{parse_polynomial("x^2 - y*z", r), parse_polynomial("y^2 - x*z", r),
                           parse_polynomial("z^2 - x*y + 1", r)};
    for (auto _ : state) benchmark::DoNotOptimize(buchberger(gens, MonomialOrder::grevlex()));
}
BENCHMARK(BM_Buchberger);

void BM_KernelApprox(benchmark::State& state) {
    Derivation d = first_integrals();
    auto degree = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(kernel_approx(d, point235(), degree, 10));
}
BENCHMARK(BM_KernelApprox)->Arg(2)->Arg(3);

void BM_SimplicityReport(benchmark::State& state) {
    Derivation d = first_integrals();
    for (auto _ : state) benchmark::DoNotOptimize(simplicity_report(d, point235(), 2, 6));
}
BENCHMARK(BM_SimplicityReport);

}  // namespace
BENCHMARK_MAIN();
