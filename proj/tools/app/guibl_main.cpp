#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "guibl_app/commands.hpp"

namespace {

std::vector<std::string> split_list(const std::vector<std::string>& items) {
    std::vector<std::string> out;
    for (const auto& item : items) {
        std::string::size_type start = 0;
        while (start <= item.size()) {
            auto end = item.find(',', start);
            if (end == std::string::npos) {
                end = item.size();
            }
            if (end > start) {
                out.push_back(item.substr(start, end - start));
            }
            start = end + 1;
        }
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    using namespace guibl::app;

    CLI::App app{"GUI-augmented bug localization over Android app corpora"};
    app.require_subcommand(1);

    std::string manifest;
    std::string out;

    auto* index = app.add_subcommand("index", "build and persist one index per app");
    index->add_option("--manifest", manifest, "dataset manifest (JSON)")->required();
    index->add_option("--out", out, "output directory")->required();

    RunOptions run_opts;
    std::vector<std::string> techs{"rvsm"};
    std::vector<std::string> configs{"all"};
    std::string index_dir;
    auto* run = app.add_subcommand("run", "evaluate the baseline and configurations");
    run->add_option("--manifest", manifest, "dataset manifest (JSON)")->required();
    run->add_option("--tech", techs, "techniques: rvsm, tfidf, embed (comma separated)")
        ->capture_default_str();
    run->add_option("--configs", configs, "\"all\" or configuration strings (comma separated)")
        ->capture_default_str();
    run->add_option("--out", out, "output directory")->required();
    run->add_option("--index-dir", index_dir, "reuse indices written by 'index'");
    run->add_option("--threads", run_opts.threads, "worker threads (0: all cores)")
        ->capture_default_str();

    std::string base_file;
    std::string aug_file;
    std::string pair_mode = "baseline";
    std::string alternative = "two_sided";
    auto* analyze = app.add_subcommand("analyze", "rank movement, overlap and Wilcoxon tests");
    analyze->add_option("--base", base_file, "base report.json")->required();
    analyze->add_option("--aug", aug_file, "augmented report.json")->required();
    analyze->add_option("--out", out, "output directory")->required();
    analyze->add_option("--pair", pair_mode, "pair each run with the base 'baseline' or 'matching' config")
        ->check(CLI::IsMember({"baseline", "matching"}))
        ->capture_default_str();
    analyze->add_option("--alternative", alternative, "two_sided, greater (base ranks worse) or less")
        ->check(CLI::IsMember({"two_sided", "greater", "less"}))
        ->capture_default_str();

    auto* queries = app.add_subcommand("queries", "list every query the grid issues (JSON lines)");
    queries->add_option("--manifest", manifest, "dataset manifest (JSON)")->required();
    queries->add_option("--out", out, "output file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitValidation;
    }

    return guarded(std::cerr, [&]() -> int {
        if (*index) {
            return cmd_index(manifest, out, std::cerr);
        }
        if (*run) {
            run_opts.manifest = manifest;
            run_opts.techniques = split_list(techs);
            run_opts.configs = split_list(configs);
            run_opts.out_dir = out;
            if (!index_dir.empty()) {
                run_opts.index_dir = index_dir;
            }
            return cmd_run(run_opts, std::cerr);
        }
        if (*analyze) {
            const auto mode = pair_mode == "matching" ? PairMode::matching : PairMode::baseline;
            const auto alt = alternative == "greater" ? guibl::Alternative::greater
                             : alternative == "less"  ? guibl::Alternative::less
                                                      : guibl::Alternative::two_sided;
            return cmd_analyze(base_file, aug_file, out, mode, alt, std::cerr);
        }
        return cmd_queries(manifest, out, std::cerr);
    });
}
