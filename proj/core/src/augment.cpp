#include "guibl/augment.hpp"

#include <algorithm>

namespace guibl {

TokenList gui_term_tokens(const GuiTermSet& gui) {
    TokenList out;
    for (const auto* group : {&gui.screen_terms, &gui.component_ids}) {
        for (const auto& term : *group) {
            auto tokens = preprocess_text(term);
            out.insert(out.end(), tokens.begin(), tokens.end());
        }
    }
    return out;
}

TokenList reformulate_query(const TokenList& report_tokens, const GuiTermSet& gui, Reform method) {
    if (method == Reform::none) {
        throw std::invalid_argument("reformulate_query: method must be expand or replace");
    }
    auto gui_tokens = gui_term_tokens(gui);
    if (method == Reform::replace) {
        return gui_tokens;
    }
    TokenList out = report_tokens;
    out.insert(out.end(), gui_tokens.begin(), gui_tokens.end());
    return out;
}

RankedList filter_ranking(const RankedList& ranked, const FileSet& keep) {
    RankedList out;
    out.query_id = ranked.query_id;
    std::copy_if(ranked.entries.begin(), ranked.entries.end(), std::back_inserter(out.entries),
                 [&](const RankedEntry& e) { return keep.contains(e.path); });
    return out;
}

RankedList boost_ranking(const RankedList& ranked, const FileSet& boosted) {
    RankedList out;
    out.query_id = ranked.query_id;
    out.entries = ranked.entries;
    std::stable_partition(out.entries.begin(), out.entries.end(),
                          [&](const RankedEntry& e) { return boosted.contains(e.path); });
    return out;
}

std::string query_id_for(const std::string& bug_id, const Configuration& cfg) {
    if (cfg.reform == Reform::none) {
        return bug_id;
    }
    return bug_id + "@" + std::string(to_string(cfg.reform)) + ":" +
           std::string(to_string(*cfg.reform_info)) + ":s" + std::to_string(cfg.n_screens);
}

Query build_query(const BugCase& bug, const Configuration& cfg) {
    Query q{query_id_for(bug.bug_id, cfg), bug.report_tokens};
    if (cfg.reform != Reform::none) {
        const auto gui = extract_terms(select_screens(bug.scenario, cfg.n_screens), *cfg.reform_info);
        q.tokens = reformulate_query(bug.report_tokens, gui, cfg.reform);
    }
    return q;
}

namespace {

// Shared re-ranking tail of apply_config and BugEvaluator::evaluate.
template <typename FilesFn>
ConfigOutcome rerank(RankedList ranking, const Configuration& cfg, FilesFn&& files_for) {
    ConfigOutcome outcome;
    const bool filtering = cfg.rerank == Rerank::filter || cfg.rerank == Rerank::filter_boost;
    const bool boosting = cfg.rerank == Rerank::boost || cfg.rerank == Rerank::filter_boost;
    if (filtering) {
        const MappingResult& keep = files_for(*cfg.filter_info);
        outcome.filter_files = keep.files.size();
        outcome.diagnostics.insert(outcome.diagnostics.end(), keep.diagnostics.begin(),
                                   keep.diagnostics.end());
        if (keep.files.empty()) {
            outcome.filter_skipped = true;
        } else {
            ranking = filter_ranking(ranking, keep.files);
        }
    }
    if (boosting) {
        const MappingResult& boosted = files_for(*cfg.boost_info);
        outcome.boost_files = boosted.files.size();
        outcome.diagnostics.insert(outcome.diagnostics.end(), boosted.diagnostics.begin(),
                                   boosted.diagnostics.end());
        ranking = boost_ranking(ranking, boosted.files);
    }
    outcome.ranking = std::move(ranking);
    return outcome;
}

}  // namespace

ConfigOutcome apply_config(const Ranker& ranker, const GuiFileMapper& mapper,
                           const Configuration& cfg, const BugCase& bug) {
    cfg.validate();
    auto ranking = ranker.rank(build_query(bug, cfg));
    MappingResult scratch;
    return rerank(std::move(ranking), cfg, [&](GuiInfoType info) -> const MappingResult& {
        scratch = mapper.gui_related_files(bug.scenario, info, cfg.n_screens);
        return scratch;
    });
}

BugEvaluator::BugEvaluator(const Ranker& ranker, const GuiFileMapper& mapper, const BugCase& bug)
    : ranker_(ranker), mapper_(mapper), bug_(bug) {}

const RankedList& BugEvaluator::ranking_for(const Query& query) {
    auto it = rankings_.find(query.id);
    if (it == rankings_.end()) {
        it = rankings_.emplace(query.id, ranker_.rank(query)).first;
    }
    return it->second;
}

const MappingResult& BugEvaluator::files_for(GuiInfoType info, std::size_t n) {
    const auto key = std::make_tuple(info, n);
    auto it = files_.find(key);
    if (it == files_.end()) {
        it = files_.emplace(key, mapper_.gui_related_files(bug_.scenario, info, n)).first;
    }
    return it->second;
}

const RankedList& BugEvaluator::baseline() {
    return ranking_for(Query{bug_.bug_id, bug_.report_tokens});
}

ConfigOutcome BugEvaluator::evaluate(const Configuration& cfg) {
    cfg.validate();
    const auto& ranking = ranking_for(build_query(bug_, cfg));
    return rerank(ranking, cfg, [&](GuiInfoType info) -> const MappingResult& {
        return files_for(info, cfg.n_screens);
    });
}

std::map<std::string, TokenList> grid_queries(const BugCase& bug) {
    std::map<std::string, TokenList> out;
    out.emplace(bug.bug_id, bug.report_tokens);
    for (const auto& cfg : enumerate_configs()) {
        if (cfg.reform != Reform::none) {
            auto q = build_query(bug, cfg);
            out.emplace(std::move(q.id), std::move(q.tokens));
        }
    }
    return out;
}

}  // namespace guibl
