#include <benchmark/benchmark.h>

#include "a4/constructor.hpp"
#include "a4/hamiltonian.hpp"

using namespace a4;

namespace {

ParamVec pv(const std::array<std::string, 5>& a) { return ParamVec::from_strings(a); }

void BM_Classify(benchmark::State& state) {
    ParamVec a = pv({"4/3", "1/3", "-2/3", "0", "0"});
    for (auto _ : state) benchmark::DoNotOptimize(classify(a));
}
BENCHMARK(BM_Classify);

void BM_Construct(benchmark::State& state) {
    ParamVec a = pv({"7/3", "1/3", "-5/3", "0", "0"});
    for (auto _ : state) benchmark::DoNotOptimize(construct(a));
}
BENCHMARK(BM_Construct);

void BM_RecurrenceExpand(benchmark::State& state) {
    ParamVec a = pv({"1/3", "1/3", "1/3", "0", "0"});
    InfinityType type{InfinityKind::B, 0};
    for (auto _ : state)
        benchmark::DoNotOptimize(recurrence_expand(type, a, static_cast<int>(-state.range(0))));
}
BENCHMARK(BM_RecurrenceExpand)->Arg(12)->Arg(40);

void BM_ResidueBalance(benchmark::State& state) {
    auto r = construct(pv({"7/3", "1/3", "-5/3", "0", "0"}));
    for (auto _ : state) benchmark::DoNotOptimize(residue_balance(r->sol));
}
BENCHMARK(BM_ResidueBalance);

void BM_ApplyWord(benchmark::State& state) {
    auto [a, f] = seed_solution(SolvabilityClass::Class2);
    Word w = parse_word("s2 s3 s1 pi s0 s4 pi^-1 s2").value();
    for (auto _ : state) benchmark::DoNotOptimize(apply_word(w, a, f));
}
BENCHMARK(BM_ApplyWord);

}  // namespace

BENCHMARK_MAIN();
