#pragma once

#include <cstddef>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "guibl/wilcoxon.hpp"
#include "guibl_app/report.hpp"

namespace guibl::app {

enum ExitCode : int { kExitOk = 0, kExitValidation = 1, kExitRuntime = 2 };

// Runs body, mapping ValidationError to 1 and any other exception to 2.
int guarded(std::ostream& err, const std::function<int()>& body);

// index --manifest M --out D
// One <app_id>.index.json per app plus index_report.json. Apps whose corpus
// cannot be indexed are reported and skipped; returns 2 if any failed.
int cmd_index(const std::filesystem::path& manifest, const std::filesystem::path& out_dir,
              std::ostream& log);

struct RunOptions {
    std::filesystem::path manifest;
    std::vector<std::string> techniques;  // rvsm, tfidf, embed
    std::vector<std::string> configs;     // "all", "baseline", or canonical strings
    std::filesystem::path out_dir;
    std::optional<std::filesystem::path> index_dir;  // reuse persisted indices
    std::size_t threads = 0;                          // 0: hardware concurrency
};

// Evaluates the baseline and requested configurations for every usable bug.
// Throws ValidationError for bad options or when embed lacks stores.
RunReport execute_run(const RunOptions& options, std::ostream& log);

// run: execute_run, then writes report.csv and report.json into out_dir.
int cmd_run(const RunOptions& options, std::ostream& log);

enum class PairMode {
    baseline,  // each augmented run vs. the base report's baseline of that technique
    matching,  // each run vs. the base run with the same technique and config
};

// Movement, significance and overlap document for two run reports.
// Throws ValidationError if the evaluated bug sets differ.
nlohmann::json analyze(const RunReport& base, const RunReport& aug, PairMode mode,
                       Alternative alternative);

// analyze --base F --aug F --out D: writes analysis.json and analysis.csv.
int cmd_analyze(const std::filesystem::path& base, const std::filesystem::path& aug,
                const std::filesystem::path& out_dir, PairMode mode, Alternative alternative,
                std::ostream& log);

// queries --manifest M --out F: JSON lines with every distinct query the
// grid issues per bug, for producing query embeddings offline.
int cmd_queries(const std::filesystem::path& manifest, const std::filesystem::path& out_file,
                std::ostream& log);

}  // namespace guibl::app
