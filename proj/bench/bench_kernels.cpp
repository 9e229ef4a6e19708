// Serial reference vs OpenMP kernels. Thread count follows OMP_NUM_THREADS.

#include <benchmark/benchmark.h>

#include <random>

#include "cli.hpp"
#include "respeval/metrics.hpp"
#include "respeval/pipeline.hpp"
#include "respeval/records.hpp"

using namespace respeval;

namespace {

struct Triple {
    std::vector<double> human, a, b;
};

Triple ratings(std::size_t n) {
    std::mt19937_64 rng(1);
    std::normal_distribution<double> z(0, 1);
    Triple t;
    for (std::size_t i = 0; i < n; ++i) {
        t.human.push_back(std::round(z(rng) * 2));
        t.a.push_back(t.human.back() + z(rng));
        t.b.push_back(t.human.back() + 2 * z(rng));
    }
    return t;
}

const gibberish::Screener& screener() {
    static const auto s = cli::build_screener(cli::AppConfig::defaults(), {});
    return s;
}

// The desk corpora repeated up to n items.
std::vector<SurveyItem> items(std::size_t n) {
    std::vector<SurveyItem> base;
    for (const auto* name : {"english.jsonl", "korean.jsonl"}) {
        for (const auto& r : records::read_items(cli::AppConfig::defaults().data_dir / "desk" / name)) {
            base.push_back(*r.item);
        }
    }
    std::vector<SurveyItem> out;
    for (std::size_t i = 0; i < n; ++i) out.push_back(base[i % base.size()]);
    return out;
}

template <bool Parallel>
void bootstrap(benchmark::State& state) {
    const auto t = ratings(static_cast<std::size_t>(state.range(0)));
    const metrics::BootstrapOptions o{metrics::Statistic::spearman, 10000, 0.95, 7};
    for (auto _ : state) {
        auto ci = Parallel ? metrics::bootstrap_ci_diff(t.human, t.a, t.b, o)
                           : metrics::bootstrap_ci_diff_serial(t.human, t.a, t.b, o);
        benchmark::DoNotOptimize(ci);
    }
}

template <bool Parallel>
void screen(benchmark::State& state) {
    const auto batch = items(static_cast<std::size_t>(state.range(0)));
    const auto& s = screener();
    for (auto _ : state) {
        auto out = Parallel ? pipeline::screen_batch(s, batch) : pipeline::screen_batch_serial(s, batch);
        benchmark::DoNotOptimize(out);
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

}  // namespace

BENCHMARK(bootstrap<false>)->Name("bootstrap/serial")->Arg(100)->Arg(1000)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(bootstrap<true>)->Name("bootstrap/openmp")->Arg(100)->Arg(1000)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(screen<false>)->Name("screen/serial")->Arg(2000)->Arg(20000)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(screen<true>)->Name("screen/openmp")->Arg(2000)->Arg(20000)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
