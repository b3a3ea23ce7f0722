#include <benchmark/benchmark.h>

#include "aperylab/bernoulli.hpp"
#include "aperylab/congruences.hpp"
#include "aperylab/mhs.hpp"

using namespace aperylab;

namespace {

const CongruenceStatement& stmt(const std::string& family) {
    for (const auto& s : registry())
        if (s.family == family) return s;
    throw std::runtime_error("missing statement");
}

void BM_PadicMul(benchmark::State& state) {
    auto a = PadicApprox::from_rational(BigRational(1234577, 99991), 499, 10);
    auto b = PadicApprox::from_rational(BigRational(7777783, 1048573), 499, 10);
    for (auto _ : state) benchmark::DoNotOptimize(a * b);
}

void BM_PadicInv(benchmark::State& state) {
    auto a = PadicApprox::from_rational(BigRational(1234577, 99991), 499, 10);
    for (auto _ : state) benchmark::DoNotOptimize(a.inv());
}

void BM_PadicFromRational(benchmark::State& state) {
    const BigRational q(1234577, 99991 * 499LL);
    for (auto _ : state) benchmark::DoNotOptimize(PadicApprox::from_rational(q, 499, 10));
}

void BM_MhsPadicDepth2(benchmark::State& state) {
    const auto p = static_cast<std::uint64_t>(state.range(0));
    PadicContext ctx(p, 7);
    for (auto _ : state)
        benchmark::DoNotOptimize(mhs(ctx, static_cast<long long>(p) - 1, MhsIndex{1, 2}));
}

void BM_MhsExactDepth2(benchmark::State& state) {
    ExactContext ctx;
    const long long n = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(mhs(ctx, n, MhsIndex{1, 2}));
}

void BM_BernoulliTriangle(benchmark::State& state) {
    const auto p = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(bernoulli_mod_p_table(static_cast<int>(p) - 3, p));
}

void BM_BernoulliExact(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(bernoulli_exact(60));
}

void BM_EvaluateMc1Padic(benchmark::State& state) {
    const auto& s = stmt("mc1");
    const auto p = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(evaluate_statement(s, p, Engine::Padic));
}

void BM_EvaluateAltsExact(benchmark::State& state) {
    const auto& s = stmt("thm_alts");
    const auto p = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(evaluate_statement(s, p, Engine::Exact));
}

}  // namespace

BENCHMARK(BM_PadicMul);
BENCHMARK(BM_PadicInv);
BENCHMARK(BM_PadicFromRational);
BENCHMARK(BM_MhsPadicDepth2)->Arg(101)->Arg(499);
BENCHMARK(BM_MhsExactDepth2)->Arg(100)->Arg(198);
BENCHMARK(BM_BernoulliTriangle)->Arg(101)->Arg(499);
BENCHMARK(BM_BernoulliExact);
BENCHMARK(BM_EvaluateMc1Padic)->Arg(101)->Arg(499);
BENCHMARK(BM_EvaluateAltsExact)->Arg(101)->Arg(199);

BENCHMARK_MAIN();
