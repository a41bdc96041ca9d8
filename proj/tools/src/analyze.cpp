#include <fstream>
#include <ostream>
#include <sstream>

#include "guibl/error.hpp"
#include "guibl_app/commands.hpp"

namespace guibl::app {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::string_view to_string(Alternative alt) {
    switch (alt) {
        case Alternative::two_sided: return "two_sided";
        case Alternative::greater: return "greater";
        case Alternative::less: return "less";
    }
    return "two_sided";
}

// Runs of a technique with the best Hits@10, ties broken by Hits@5; what
// is still tied is returned in report (grid) order.
std::vector<const RunRecord*> best_runs(const RunReport& report, const std::string& technique) {
    std::vector<const RunRecord*> best;
    std::pair<double, double> best_key{-1.0, -1.0};
    for (const auto& run : report.runs) {
        if (run.technique != technique || run.config == kBaselineConfig) {
            continue;
        }
        const std::pair<double, double> key{hits_at_k(run.first_ranks, 10).fraction,
                                            hits_at_k(run.first_ranks, 5).fraction};
        if (key > best_key) {
            best.clear();
            best_key = key;
        }
        if (key == best_key) {
            best.push_back(&run);
        }
    }
    return best;
}

json overlap_json(const std::vector<OverlapCell>& cells) {
    json out = json::array();
    for (const auto& cell : cells) {
        out.push_back({{"techniques", cell.techniques}, {"count", cell.count}});
    }
    return out;
}

}  // namespace

json analyze(const RunReport& base, const RunReport& aug, PairMode mode, Alternative alternative) {
    if (base.bugs.size() != aug.bugs.size() ||
        !std::equal(base.bugs.begin(), base.bugs.end(), aug.bugs.begin(),
                    [](const auto& a, const auto& b) { return a.first == b.first; })) {
        throw ValidationError("base and augmented reports cover different bug sets");
    }
    const auto sizes = base.corpus_sizes();

    json pairs = json::array();
    for (const auto& run : aug.runs) {
        const auto& base_config = mode == PairMode::matching ? run.config : std::string(kBaselineConfig);
        const auto* reference = base.find(run.technique, base_config);
        if (reference == nullptr) {
            throw ValidationError("base report has no run for technique '" + run.technique +
                                  "' config '" + base_config + "'");
        }
        const auto movement = rank_movement(reference->first_ranks, run.first_ranks);
        const auto base_ranks = ranks_with_sentinel(reference->first_ranks, sizes);
        const auto aug_ranks = ranks_with_sentinel(run.first_ranks, sizes);
        const auto test = wilcoxon_signed_rank(base_ranks, aug_ranks, alternative);
        const double h10_base = hits_at_k(reference->first_ranks, 10).fraction;
        const double h10_aug = hits_at_k(run.first_ranks, 10).fraction;
        const auto rel = relative_improvement(h10_aug, h10_base);
        pairs.push_back({{"technique", run.technique},
                         {"base_config", base_config},
                         {"aug_config", run.config},
                         {"hits10_base", h10_base},
                         {"hits10_aug", h10_aug},
                         {"rel_improvement10", rel ? json(*rel) : json(nullptr)},
                         {"movement", to_json(movement)},
                         {"wilcoxon",
                          {{"alternative", to_string(alternative)},
                           {"w_plus", test.w_plus},
                           {"w_minus", test.w_minus},
                           {"statistic", test.statistic},
                           {"p_value", test.p_value},
                           {"n_used", test.n_used},
                           {"exact", test.exact}}}});
    }

    std::map<std::string, std::set<std::string>> baseline_hits;
    std::map<std::string, std::set<std::string>> best_hits;
    json best = json::object();
    for (const auto& technique : base.techniques) {
        if (const auto* run = base.find(technique, kBaselineConfig)) {
            baseline_hits[technique] = hit_set(run->first_ranks, 10);
        }
    }
    for (const auto& technique : aug.techniques) {
        const auto runs = best_runs(aug, technique);
        if (runs.empty()) {
            continue;
        }
        json tied = json::array();
        for (const auto* run : runs) {
            tied.push_back(run->config);
        }
        best_hits[technique] = hit_set(runs.front()->first_ranks, 10);
        best[technique] = {{"config", runs.front()->config}, {"tied", std::move(tied)}};
    }

    json doc;
    doc["format"] = "guibl-analysis";
    doc["pair_mode"] = mode == PairMode::matching ? "matching" : "baseline";
    doc["pairs"] = std::move(pairs);
    doc["best_configs"] = std::move(best);
    doc["overlap_baselines"] = baseline_hits.empty() ? json::array() : overlap_json(top10_overlap(baseline_hits));
    doc["overlap_best"] = best_hits.empty() ? json::array() : overlap_json(top10_overlap(best_hits));
    return doc;
}

int cmd_analyze(const fs::path& base_file, const fs::path& aug_file, const fs::path& out_dir,
                PairMode mode, Alternative alternative, std::ostream& log) {
    const auto base = load_report(base_file);
    const auto aug = load_report(aug_file);
    const auto doc = analyze(base, aug, mode, alternative);

    std::error_code ec;
    fs::create_directories(out_dir, ec);
    std::ofstream json_out(out_dir / "analysis.json", std::ios::binary);
    std::ofstream csv_out(out_dir / "analysis.csv", std::ios::binary);
    if (!json_out || !csv_out) {
        throw IoError("cannot write analysis into " + out_dir.string());
    }
    json_out << doc.dump(1) << '\n';

    csv_out << "technique,base_config,aug_config,hits10_base,hits10_aug,out10_to_in10,in10_to_out10,"
               "inside_improved,inside_deteriorated,inside_unchanged,outside_improved,"
               "outside_deteriorated,outside_unchanged,wilcoxon_w,p_value\n";
    for (const auto& p : doc["pairs"]) {
        const auto& m = p["movement"];
        csv_out << p["technique"].get<std::string>() << ',' << p["base_config"].get<std::string>() << ','
                << p["aug_config"].get<std::string>() << ','
                << format_fixed(p["hits10_base"].get<double>()) << ','
                << format_fixed(p["hits10_aug"].get<double>()) << ',' << m["out10_to_in10"] << ','
                << m["in10_to_out10"] << ',' << m["inside_improved"] << ','
                << m["inside_deteriorated"] << ',' << m["inside_unchanged"] << ','
                << m["outside_improved"] << ',' << m["outside_deteriorated"] << ','
                << m["outside_unchanged"] << ','
                << format_fixed(p["wilcoxon"]["statistic"].get<double>(), 1) << ','
                << format_fixed(p["wilcoxon"]["p_value"].get<double>(), 6) << '\n';
    }
    log << "wrote analysis of " << doc["pairs"].size() << " run pairs to " << out_dir.string() << '\n';
    return kExitOk;
}

}  // namespace guibl::app
