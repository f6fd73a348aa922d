#include <cohit/invariants.hpp>
#include <cohit/lambda.hpp>
#include <cohit/preimage.hpp>
#include <cohit/transfer.hpp>

#include <benchmark/benchmark.h>

#include <thread>

using namespace cohit;

namespace {

const HitBasis& basis_4_33() {
    static const HitBasis b = admissible_basis_and_reducer(4, 33, thread_pool_for(std::thread::hardware_concurrency()));
    return b;
}

void BM_HitBasis(benchmark::State& st) {
    const int k = static_cast<int>(st.range(0)), d = static_cast<int>(st.range(1));
    for (auto _ : st) benchmark::DoNotOptimize(admissible_basis_and_reducer(k, d));
}
BENCHMARK(BM_HitBasis)->Args({3, 20})->Args({4, 20})->Args({4, 33})->Unit(benchmark::kMillisecond);

void BM_Transfer(benchmark::State& st) {
    const int t = static_cast<int>(st.range(0));
    DividedMonomial m{t, t, t, t};
    for (auto _ : st) benchmark::DoNotOptimize(adem_reduce(transfer(m)));
}
BENCHMARK(BM_Transfer)->Arg(2)->Arg(4)->Arg(6);

void BM_AdemReduce(benchmark::State& st) {
    LambdaWord w{13, 2, 9, 1, 5};
    for (auto _ : st) benchmark::DoNotOptimize(adem_reduce(w));
}
BENCHMARK(BM_AdemReduce);

void BM_Preimage(benchmark::State& st) {
    auto p = make_problem(4, parse_lambda("3,3,2,6 + 3,3,4,4 + 3,5,4,2 + 3,5,3,3"));
    for (auto _ : st) benchmark::DoNotOptimize(find_preimages(p));
}
BENCHMARK(BM_Preimage)->Unit(benchmark::kMillisecond);

void BM_Invariants(benchmark::State& st) {
    const auto& b = basis_4_33();
    for (auto _ : st) benchmark::DoNotOptimize(global_glk_invariants(b));
}
BENCHMARK(BM_Invariants)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
