#include <benchmark/benchmark.h>

#include "rescycle/engine.hpp"
#include "rescycle/lift.hpp"
#include "rescycle/parser.hpp"
#include "rescycle/universal.hpp"

using namespace rescycle;

namespace {

const VarTable XY({"x", "y"});
const VarTable XYZ({"x", "y", "z"});

void bench_ci_p2(benchmark::State& state) {
  std::vector<Monomial> f = {parse_monomial("x^3", XY), parse_monomial("y^4", XY)};
  for (auto _ : state) benchmark::DoNotOptimize(verify_ci(f, XY));
}
BENCHMARK(bench_ci_p2);

void bench_ci_p3(benchmark::State& state) {
  std::vector<Monomial> f = {parse_monomial("x^2", XYZ), parse_monomial("y^3", XYZ),
                             parse_monomial("z^2", XYZ)};
  for (auto _ : state) benchmark::DoNotOptimize(verify_ci(f, XYZ));
}
BENCHMARK(bench_ci_p3);

void bench_staircase_cm(benchmark::State& state) {
  const int g = static_cast<int>(state.range(0));
  std::vector<Monomial> gens;
  for (int i = 0; i < g; ++i)
    gens.push_back(Monomial::var(0, i) * Monomial::var(1, g - 1 - i));
  MonomialIdeal J(2, gens);
  FreeComplex E = staircase_resolution(gens, 2);
  std::vector<Monomial> f = {Monomial::var(0, g - 1), Monomial::var(1, g - 1)};
  for (auto _ : state) benchmark::DoNotOptimize(verify_cm(J, E, f, XY));
}
BENCHMARK(bench_staircase_cm)->Arg(3)->Arg(4)->Arg(5);

void bench_chain_map_lift(benchmark::State& state) {
  const int g = static_cast<int>(state.range(0));
  std::vector<Monomial> gens;
  for (int i = 0; i < g; ++i)
    gens.push_back(Monomial::var(0, i) * Monomial::var(1, g - 1 - i));
  FreeComplex E = staircase_resolution(gens, 2);
  FreeComplex F = koszul_complex({Poly::monomial(Monomial::var(0, g - 1), 1),
                                  Poly::monomial(Monomial::var(1, g - 1), 1)},
                                 2);
  auto a0 = SuperMat<Form>::zero(0, 0, 1, 1);
  a0.at(0, 0) = Form::one();
  for (auto _ : state) benchmark::DoNotOptimize(lift_chain_map(F, E, a0));
}
BENCHMARK(bench_chain_map_lift)->Arg(3)->Arg(5);

void bench_universal_resolution(benchmark::State& state) {
  const int b = static_cast<int>(state.range(0));
  MonomialIdeal J(2, {Monomial::var(0, b), Monomial::var(1, b)});
  for (auto _ : state) benchmark::DoNotOptimize(verify_universal(J, {0, 1}, XY));
}
BENCHMARK(bench_universal_resolution)->Arg(2)->Arg(3);

void bench_residue_products(benchmark::State& state) {
  CurrentSum col = ch_product({{0, 3}, {1, 4}});
  CurrentSum g = current_from_form(Form::scalar(RatFun(parse_poly("x^2*y + y^3", XY))));
  for (auto _ : state) benchmark::DoNotOptimize(current_mul(g, col));
}
BENCHMARK(bench_residue_products);

} // namespace

BENCHMARK_MAIN();
