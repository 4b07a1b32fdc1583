#include <benchmark/benchmark.h>

#include "multispec/exactalg.hpp"
#include "multispec/parse.hpp"
#include "multispec/spectrum.hpp"

using namespace multispec;

static void BM_charpoly_dimension(benchmark::State& state) {
    // multiplication-by-derivative operator at growing modulus degree
    long dim = state.range(0);
    Poly a = Poly::monomial(1, static_cast<std::size_t>(dim)) - parse_poly("z - 1");
    Poly b = a.derivative();
    for (auto _ : state) {
        benchmark::DoNotOptimize(charpoly_mod(b, a));
    }
    state.SetComplexityN(dim);
}
BENCHMARK(BM_charpoly_dimension)->RangeMultiplier(2)->Range(8, 128)->Complexity();

static void BM_spectrum_level(benchmark::State& state) {
    PolyMap f(parse_poly("z^2 - 3"));
    unsigned long n = static_cast<unsigned long>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(spectrum_level(f, n));
    }
}
BENCHMARK(BM_spectrum_level)->DenseRange(1, 5);

static void BM_resultant(benchmark::State& state) {
    long d = state.range(0);
    Poly a = Poly::monomial(1, static_cast<std::size_t>(d)) - parse_poly("3*z + 1");
    Poly b = a.derivative() * parse_poly("z^2 + 1");
    for (auto _ : state) {
        benchmark::DoNotOptimize(resultant(a, b));
    }
}
BENCHMARK(BM_resultant)->RangeMultiplier(2)->Range(8, 64);

BENCHMARK_MAIN();
