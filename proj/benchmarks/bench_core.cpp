#include <benchmark/benchmark.h>
int main_placeholder() { return 0; }
static void BM_placeholder(benchmark::State& state) { for (auto _ : state) {} }
BENCHMARK(BM_placeholder);
