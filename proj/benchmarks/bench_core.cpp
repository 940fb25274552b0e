#include <benchmark/benchmark.h>

#include "equichar/moduli.hpp"
#include "equichar/permrep.hpp"
#include "equichar/trees.hpp"

using namespace equichar;

namespace {

void BM_schur_conversion(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const SymFunc f = Q_poly(n).coeff(unsigned(n / 2 - 1));  // a mid-degree coefficient
    for (auto _ : state) benchmark::DoNotOptimize(to_schur(f));
}
BENCHMARK(BM_schur_conversion)->Arg(8)->Arg(10)->Arg(11);

void BM_symfunc_product(benchmark::State& state) {
    const SymFunc a = Q_poly(6).coeff(2);
    const SymFunc b = Q_poly(5).coeff(1);
    for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_symfunc_product);

void BM_plethysm_sym_square(benchmark::State& state) {
    const SymFunc f = Q_poly(static_cast<int>(state.range(0))).coeff(1);
    for (auto _ : state) benchmark::DoNotOptimize(plethysm(h_gen(2), f));
}
BENCHMARK(BM_plethysm_sym_square)->Arg(4)->Arg(5)->Arg(6);

void BM_closed_form_coefficient(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(closed_form_P(n, (n - 3) / 2));
}
BENCHMARK(BM_closed_form_coefficient)->Arg(8)->Arg(9)->Arg(10);

void BM_quotient_poincare(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(quotient_poincare(n));
}
BENCHMARK(BM_quotient_poincare)->Arg(9)->Arg(11);

void BM_degreewise_identity(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(degreewise_identity_check(n, n / 2));
}
BENCHMARK(BM_degreewise_identity)->Arg(8)->Arg(10);

}  // namespace

BENCHMARK_MAIN();
