#include "guibl_app/report.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "guibl/error.hpp"

namespace guibl::app {

using nlohmann::json;

const RunRecord* RunReport::find(const std::string& technique, const std::string& config) const {
    for (const auto& run : runs) {
        if (run.technique == technique && run.config == config) {
            return &run;
        }
    }
    return nullptr;
}

std::map<std::string, std::size_t> RunReport::corpus_sizes() const {
    std::map<std::string, std::size_t> out;
    for (const auto& [bug, info] : bugs) {
        out.emplace(bug, info.corpus_size);
    }
    return out;
}

std::string format_fixed(double value, int decimals) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", decimals, value);
    return buf;
}

std::vector<CsvRow> summarize(const RunReport& report) {
    std::vector<CsvRow> rows;
    for (const auto& run : report.runs) {
        CsvRow row;
        row.technique = run.technique;
        row.config = run.config;
        for (std::size_t i = 0; i < 3; ++i) {
            row.hits[i] = hits_at_k(run.first_ranks, kReportedK[i]);
        }
        if (run.config != kBaselineConfig) {
            if (const auto* base = report.find(run.technique, kBaselineConfig)) {
                row.rel_improvement10 = relative_improvement(
                    row.hits[2].fraction, hits_at_k(base->first_ranks, 10).fraction);
            }
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string render_csv(const RunReport& report) {
    std::ostringstream out;
    out << "# generated: " << report.generated << '\n';
    out << "# excluded:";
    for (const auto& ex : report.excluded) {
        out << ' ' << ex.bug_id << " (" << ex.reason << ");";
    }
    out << '\n';
    out << "technique,config,h1,h5,h10,hits1,hits5,hits10,bugs,rel_improvement10\n";
    for (const auto& row : summarize(report)) {
        out << row.technique << ',' << row.config;
        for (const auto& h : row.hits) {
            out << ',' << format_fixed(h.fraction);
        }
        for (const auto& h : row.hits) {
            out << ',' << h.hits;
        }
        out << ',' << row.hits[0].total << ',';
        if (row.rel_improvement10) {
            out << format_fixed(*row.rel_improvement10);
        } else if (row.config != kBaselineConfig) {
            out << "NA";
        }
        out << '\n';
    }
    return out.str();
}

std::string csv_body(const std::string& csv) {
    std::istringstream in(csv);
    std::ostringstream out;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line[0] == '#') {
            continue;
        }
        out << line << '\n';
    }
    return out.str();
}

json to_json(const MovementReport& m) {
    return {{"cutoff", m.cutoff},
            {"out10_to_in10", m.out_to_in},
            {"in10_to_out10", m.in_to_out},
            {"stayed_in", m.stayed_in},
            {"stayed_out", m.stayed_out},
            {"inside_improved", m.inside_improved},
            {"inside_deteriorated", m.inside_deteriorated},
            {"inside_unchanged", m.inside_unchanged},
            {"outside_improved", m.outside_improved},
            {"outside_deteriorated", m.outside_deteriorated},
            {"outside_unchanged", m.outside_unchanged}};
}

json to_json(const RunReport& report) {
    json doc;
    doc["format"] = "guibl-run";
    doc["generated"] = report.generated;
    doc["techniques"] = report.techniques;
    json bugs = json::object();
    for (const auto& [id, info] : report.bugs) {
        bugs[id] = {{"app_id", info.app_id}, {"corpus_size", info.corpus_size}};
    }
    doc["bugs"] = std::move(bugs);
    json excluded = json::array();
    for (const auto& ex : report.excluded) {
        excluded.push_back({{"bug_id", ex.bug_id}, {"reason", ex.reason}});
    }
    doc["excluded"] = std::move(excluded);

    json runs = json::array();
    for (const auto& run : report.runs) {
        json ranks = json::object();
        for (const auto& [bug, rank] : run.first_ranks) {
            ranks[bug] = rank ? json(*rank) : json(nullptr);
        }
        json entry = {{"technique", run.technique},
                      {"config", run.config},
                      {"first_ranks", std::move(ranks)},
                      {"filter_skipped", run.filter_skipped}};
        json hits = json::object();
        for (auto k : kReportedK) {
            const auto h = hits_at_k(run.first_ranks, k);
            hits[std::to_string(k)] = {{"hits", h.hits}, {"fraction", h.fraction}};
        }
        entry["hits"] = std::move(hits);
        if (run.config != kBaselineConfig) {
            if (const auto* base = report.find(run.technique, kBaselineConfig)) {
                entry["movement"] = to_json(rank_movement(base->first_ranks, run.first_ranks));
            }
        }
        runs.push_back(std::move(entry));
    }
    doc["runs"] = std::move(runs);
    return doc;
}

RunReport report_from_json(const json& doc) {
    try {
        if (doc.at("format").get<std::string>() != "guibl-run") {
            throw ValidationError("not a run report");
        }
        RunReport report;
        report.generated = doc.at("generated").get<std::string>();
        report.techniques = doc.at("techniques").get<std::vector<std::string>>();
        for (const auto& [id, info] : doc.at("bugs").items()) {
            report.bugs[id] = {info.at("app_id").get<std::string>(),
                               info.at("corpus_size").get<std::size_t>()};
        }
        for (const auto& ex : doc.at("excluded")) {
            report.excluded.push_back(
                {ex.at("bug_id").get<std::string>(), ex.at("reason").get<std::string>()});
        }
        for (const auto& r : doc.at("runs")) {
            RunRecord run;
            run.technique = r.at("technique").get<std::string>();
            run.config = r.at("config").get<std::string>();
            for (const auto& [bug, rank] : r.at("first_ranks").items()) {
                run.first_ranks[bug] =
                    rank.is_null() ? std::nullopt : std::optional<std::size_t>(rank.get<std::size_t>());
            }
            run.filter_skipped = r.at("filter_skipped").get<std::vector<std::string>>();
            report.runs.push_back(std::move(run));
        }
        return report;
    } catch (const json::exception& e) {
        throw ValidationError(std::string("malformed run report: ") + e.what());
    }
}

RunReport load_report(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) {
        throw ValidationError("cannot open report " + file.string());
    }
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw ValidationError("report " + file.string() + " is not valid JSON: " + e.what());
    }
    return report_from_json(doc);
}

}  // namespace guibl::app
