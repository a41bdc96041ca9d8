#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "guibl/metrics.hpp"

namespace guibl::app {

inline constexpr const char* kBaselineConfig = "baseline";
inline constexpr std::size_t kReportedK[] = {1, 5, 10};

struct BugInfo {
    std::string app_id;
    std::size_t corpus_size = 0;  // ranked documents; "not ranked" maps to this + 1
};

struct Exclusion {
    std::string bug_id;
    std::string reason;
};

// First ranks of every evaluated bug for one (technique, configuration).
struct RunRecord {
    std::string technique;
    std::string config;  // canonical configuration string or "baseline"
    FirstRanks first_ranks;
    std::vector<std::string> filter_skipped;  // bugs whose filter set was empty
};

struct RunReport {
    std::string generated;  // timestamp; excluded from determinism checks
    std::vector<std::string> techniques;
    std::map<std::string, BugInfo> bugs;  // evaluated bugs only
    std::vector<Exclusion> excluded;
    std::vector<RunRecord> runs;  // per technique: baseline first, then grid order

    const RunRecord* find(const std::string& technique, const std::string& config) const;
    std::map<std::string, std::size_t> corpus_sizes() const;
};

struct CsvRow {
    std::string technique;
    std::string config;
    HitsAtK hits[3];
    std::optional<double> rel_improvement10;  // vs the technique's baseline
};

std::vector<CsvRow> summarize(const RunReport& report);

// "# ..." header lines (timestamp, exclusions) followed by the table.
std::string render_csv(const RunReport& report);

// The table without the "#" header lines.
std::string csv_body(const std::string& csv);

nlohmann::json to_json(const RunReport& report);
RunReport report_from_json(const nlohmann::json& doc);
RunReport load_report(const std::filesystem::path& file);

nlohmann::json to_json(const MovementReport& m);

std::string format_fixed(double value, int decimals = 6);

}  // namespace guibl::app
