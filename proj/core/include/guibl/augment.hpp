#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "guibl/config.hpp"
#include "guibl/mapping.hpp"
#include "guibl/ranking.hpp"
#include "guibl/scenario.hpp"

namespace guibl {

struct BugCase {
    std::string bug_id;
    TokenList report_tokens;
    ReproductionScenario scenario;
    std::set<std::string> truth;  // buggy file paths
};

// Screen names then component ids, each run through preprocess_text.
TokenList gui_term_tokens(const GuiTermSet& gui);

// expand: report ++ GUI tokens. replace: GUI tokens only.
TokenList reformulate_query(const TokenList& report_tokens, const GuiTermSet& gui, Reform method);

// Entries whose path is in keep, order and scores preserved.
RankedList filter_ranking(const RankedList& ranked, const FileSet& keep);

// Boosted entries first, then the rest; relative order kept in both blocks.
RankedList boost_ranking(const RankedList& ranked, const FileSet& boosted);

// Id under which a ranker sees the query for this bug and configuration:
// "<bug>" for the plain report, "<bug>@<reform>:<info>:s<k>" when reformulated.
std::string query_id_for(const std::string& bug_id, const Configuration& cfg);

struct ConfigOutcome {
    RankedList ranking;
    bool filter_skipped = false;  // filter set was empty, filtering not applied
    std::size_t filter_files = 0;
    std::size_t boost_files = 0;
    std::vector<TermDiagnostic> diagnostics;
};

// Query construction, ranking, then filtering before boosting. Throws
// ValidationError for invalid configurations.
ConfigOutcome apply_config(const Ranker& ranker, const GuiFileMapper& mapper,
                           const Configuration& cfg, const BugCase& bug);

// Evaluates many configurations for one bug, memoizing rankings per
// distinct query and GUI file sets per (information type, screens).
// Produces the same outcome as apply_config. Not thread-safe; use one per
// worker.
class BugEvaluator {
public:
    BugEvaluator(const Ranker& ranker, const GuiFileMapper& mapper, const BugCase& bug);

    const RankedList& baseline();
    ConfigOutcome evaluate(const Configuration& cfg);

private:
    const Ranker& ranker_;
    const GuiFileMapper& mapper_;
    const BugCase& bug_;
    std::map<std::string, RankedList> rankings_;
    std::map<std::tuple<GuiInfoType, std::size_t>, MappingResult> files_;

    const RankedList& ranking_for(const Query& query);
    const MappingResult& files_for(GuiInfoType info, std::size_t n);
};

Query build_query(const BugCase& bug, const Configuration& cfg);

// Every distinct query the full grid issues for this bug, keyed by query id.
std::map<std::string, TokenList> grid_queries(const BugCase& bug);

}  // namespace guibl
