#include <benchmark/benchmark.h>

#include "qadic/adic.hpp"
#include "qadic/constructions.hpp"
#include "qadic/correlation.hpp"
#include "qadic/gf2seq.hpp"
#include "qadic/numtheory.hpp"

using namespace qadic;

static void BM_BuildG1(benchmark::State& state) {
    const OddPrime p(static_cast<std::uint64_t>(state.range(0)));
    for (auto _ : state) {
        auto seq = build_g1(p);
        benchmark::DoNotOptimize(seq.digits.data());
    }
}
BENCHMARK(BM_BuildG1)->Arg(13)->Arg(101)->Arg(541);

static void BM_BuildG3(benchmark::State& state) {
    const auto base = msequence(first_primitive_poly(static_cast<unsigned>(state.range(0))));
    for (auto _ : state) {
        auto seq = build_g3(base);
        benchmark::DoNotOptimize(seq.digits.data());
    }
}
BENCHMARK(BM_BuildG3)->DenseRange(4, 10, 2);

static void BM_FullProfile(benchmark::State& state) {
    const auto seq = build_g3(msequence(first_primitive_poly(static_cast<unsigned>(state.range(0)))));
    for (auto _ : state) {
        auto prof = full_profile(seq);
        benchmark::DoNotOptimize(prof.values.data());
    }
    state.SetComplexityN(static_cast<std::int64_t>(seq.period()));
}
BENCHMARK(BM_FullProfile)->DenseRange(4, 8, 1)->Complexity(benchmark::oNSquared);

static void BM_ComplexityReport(benchmark::State& state) {
    const auto seq = build_g3(msequence(first_primitive_poly(static_cast<unsigned>(state.range(0)))));
    for (auto _ : state) {
        auto report = complexity_report(seq);
        benchmark::DoNotOptimize(report.gcd.get_mpz_t());
    }
}
BENCHMARK(BM_ComplexityReport)->DenseRange(4, 10, 2);

static void BM_VerifyTheoremG1(benchmark::State& state) {
    const std::uint64_t p = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) {
        auto result = verify_theorem(Family::g1, p);
        benchmark::DoNotOptimize(result.pass);
    }
}
BENCHMARK(BM_VerifyTheoremG1)->Arg(13)->Arg(241)->Arg(541);

static void BM_Lemma4(benchmark::State& state) {
    const OddPrime p(static_cast<std::uint64_t>(state.range(0)));
    for (auto _ : state) {
        auto result = check_lemma4(p);
        benchmark::DoNotOptimize(result.holds);
    }
}
BENCHMARK(BM_Lemma4)->Arg(31)->Arg(101)->Arg(199);

BENCHMARK_MAIN();
