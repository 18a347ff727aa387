// Serial vs OpenMP kernels for the search scan and ingestion.

#include "geomove/pipeline.hpp"
#include "geomove/search_index.hpp"

#include "synthetic.hpp"

#include <benchmark/benchmark.h>

using namespace geomove;

namespace {

const Gazetteer& gazetteer() {
    static const Gazetteer g = Gazetteer::load(std::string(GEOMOVE_DATA_DIR) + "/gazetteer.tsv");
    return g;
}

const IndexSnapshot& snapshot(std::size_t n) {
    static std::map<std::size_t, std::shared_ptr<const IndexSnapshot>> cache;
    auto& s = cache[n];
    if (!s) {
        SearchIndex idx;
        for (auto& st : geomove::testing::synthetic_statements(gazetteer(), {.count = n, .seed = 9}))
            idx.add(std::move(st));
        idx.commit();
        s = idx.snapshot();
    }
    return *s;
}

void search(benchmark::State& state, Kernel kernel, const char* text) {
    const auto& snap = snapshot(std::size_t(state.range(0)));
    Query q;
    q.text = text;
    q.scale = BinScale::Admin1;
    q.min_score = 0.6;
    for (auto _ : state) benchmark::DoNotOptimize(snap.search(q, kernel));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_SearchSerial(benchmark::State& s) { search(s, Kernel::Serial, ""); }
void BM_SearchParallel(benchmark::State& s) { search(s, Kernel::Parallel, ""); }
void BM_TextSearchSerial(benchmark::State& s) { search(s, Kernel::Serial, "smuggling"); }
void BM_TextSearchParallel(benchmark::State& s) { search(s, Kernel::Parallel, "smuggling"); }

const std::vector<std::string>& records() {
    static const std::vector<std::string> lines = [] {
        std::vector<std::string> out;
        for (const auto& s : geomove::testing::synthetic_statements(gazetteer(), {.count = 4000, .seed = 10}))
            out.push_back(R"({"id":")" + s.stmt_id + R"(","source":"news","published_at":")" +
                          format_date(s.published_at) + R"(","text":")" + s.text +
                          " Couriers travel from Mumbai to Chennai.\"}");
        return out;
    }();
    return lines;
}

void ingest(benchmark::State& state, Kernel kernel) {
    LexiconScorer scorer;
    RuleSet rules = modified_ruleset();
    Pipeline p{&gazetteer(), &scorer, &rules, 0.6, {}};
    for (auto _ : state) benchmark::DoNotOptimize(ingest_lines(records(), std::nullopt, {}, p, kernel));
    state.SetItemsProcessed(state.iterations() * long(records().size()));
}

void BM_IngestSerial(benchmark::State& s) { ingest(s, Kernel::Serial); }
void BM_IngestParallel(benchmark::State& s) { ingest(s, Kernel::Parallel); }

}  // namespace

BENCHMARK(BM_SearchSerial)->Arg(10000)->Arg(100000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SearchParallel)->Arg(10000)->Arg(100000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TextSearchSerial)->Arg(100000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TextSearchParallel)->Arg(100000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_IngestSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_IngestParallel)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
