#include <benchmark/benchmark.h>

#include <fstream>
#include <sstream>

#include "guibl/augment.hpp"
#include "guibl/config.hpp"
#include "guibl/corpus.hpp"
#include "guibl/index.hpp"
#include "guibl/mapping.hpp"
#include "guibl/preprocess.hpp"
#include "guibl/scenario.hpp"

namespace {

const std::filesystem::path kFixture = GUIBL_FIXTURE_DIR;

const guibl::Corpus& markor() {
    static const guibl::Corpus corpus = guibl::load_corpus(kFixture / "apps/markor");
    return corpus;
}

guibl::BugCase markor_bug() {
    std::ifstream in(kFixture / "bugs/markor-1/report.txt");
    std::ostringstream text;
    text << in.rdbuf();
    return {"markor-1", guibl::preprocess_text(text.str()),
            guibl::parse_scenario(kFixture / "bugs/markor-1/scenario", "markor-1"),
            {"app/src/main/java/net/gsantner/markor/ui/NewFileDialog.java"}};
}

void BM_preprocess_corpus(benchmark::State& state) {
    const auto& corpus = markor();
    std::size_t bytes = 0;
    for (auto _ : state) {
        for (std::size_t i = 0; i < corpus.rankable_count(); ++i) {
            const auto& doc = corpus.rankable_document(i);
            benchmark::DoNotOptimize(guibl::preprocess_text(doc.raw_text));
            bytes += doc.raw_text.size();
        }
    }
    state.SetBytesProcessed(static_cast<std::int64_t>(bytes));
}
BENCHMARK(BM_preprocess_corpus);

void BM_index_build(benchmark::State& state) {
    const auto& corpus = markor();
    for (auto _ : state) {
        benchmark::DoNotOptimize(guibl::Index::build(corpus));
    }
}
BENCHMARK(BM_index_build);

void BM_rank_rvsm(benchmark::State& state) {
    const auto index = guibl::Index::build(markor());
    const auto bug = markor_bug();
    for (auto _ : state) {
        benchmark::DoNotOptimize(guibl::rank_rvsm(index, {bug.bug_id, bug.report_tokens}));
    }
}
BENCHMARK(BM_rank_rvsm);

void BM_grid_one_bug(benchmark::State& state) {
    const auto index = guibl::Index::build(markor());
    const guibl::RvsmRanker ranker(index);
    const guibl::GuiFileMapper mapper(markor());
    const auto bug = markor_bug();
    const auto grid = guibl::enumerate_configs();
    for (auto _ : state) {
        guibl::BugEvaluator evaluator(ranker, mapper, bug);
        for (const auto& cfg : grid) {
            benchmark::DoNotOptimize(evaluator.evaluate(cfg));
        }
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(grid.size()));
}
BENCHMARK(BM_grid_one_bug)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
