#include "guibl/metrics.hpp"

#include <limits>

#include "guibl/error.hpp"

namespace guibl {

std::optional<std::size_t> first_rank(const RankedList& ranked, const std::set<std::string>& truth) {
    for (std::size_t i = 0; i < ranked.entries.size(); ++i) {
        if (truth.count(ranked.entries[i].path) != 0) {
            return i + 1;
        }
    }
    return std::nullopt;
}

FirstRanks first_ranks(const RankingSet& rankings, const GroundTruth& truth) {
    FirstRanks out;
    for (const auto& [bug, ranked] : rankings) {
        auto it = truth.find(bug);
        if (it == truth.end()) {
            throw ValidationError("no ground truth for bug '" + bug + "'");
        }
        out.emplace(bug, first_rank(ranked, it->second));
    }
    return out;
}

HitsAtK hits_at_k(const FirstRanks& ranks, std::size_t k) {
    HitsAtK h;
    h.k = k;
    h.total = ranks.size();
    for (const auto& [bug, rank] : ranks) {
        if (rank && *rank <= k) {
            ++h.hits;
        }
    }
    h.fraction = h.total == 0 ? 0.0 : static_cast<double>(h.hits) / static_cast<double>(h.total);
    return h;
}

HitsAtK hits_at_k(const RankingSet& rankings, const GroundTruth& truth, std::size_t k) {
    return hits_at_k(first_ranks(rankings, truth), k);
}

std::optional<double> relative_improvement(double h_gui, double h_base) noexcept {
    if (h_base == 0.0) {
        return std::nullopt;
    }
    return (h_gui - h_base) / h_base;
}

MovementReport rank_movement(const FirstRanks& base, const FirstRanks& aug, std::size_t cutoff) {
    if (base.size() != aug.size()) {
        throw ValidationError("rank_movement: bug sets differ in size");
    }
    constexpr auto kUnranked = std::numeric_limits<std::size_t>::max();
    MovementReport report;
    report.cutoff = cutoff;
    for (const auto& [bug, base_rank] : base) {
        auto it = aug.find(bug);
        if (it == aug.end()) {
            throw ValidationError("rank_movement: bug '" + bug + "' missing from augmented set");
        }
        const auto before = base_rank.value_or(kUnranked);
        const auto after = it->second.value_or(kUnranked);
        const bool was_in = before <= cutoff;
        const bool is_in = after <= cutoff;
        if (was_in && is_in) {
            ++report.stayed_in;
            if (after < before) {
                ++report.inside_improved;
            } else if (after > before) {
                ++report.inside_deteriorated;
            } else {
                ++report.inside_unchanged;
            }
        } else if (!was_in && !is_in) {
            ++report.stayed_out;
            if (after < before) {
                ++report.outside_improved;
            } else if (after > before) {
                ++report.outside_deteriorated;
            } else {
                ++report.outside_unchanged;
            }
        } else if (is_in) {
            ++report.out_to_in;
        } else {
            ++report.in_to_out;
        }
    }
    return report;
}

MovementReport rank_movement(const RankingSet& base, const RankingSet& aug, const GroundTruth& truth,
                             std::size_t cutoff) {
    return rank_movement(first_ranks(base, truth), first_ranks(aug, truth), cutoff);
}

std::vector<OverlapCell> top10_overlap(const std::map<std::string, std::set<std::string>>& hit_bugs) {
    if (hit_bugs.empty()) {
        throw ValidationError("top10_overlap needs at least one technique");
    }
    if (hit_bugs.size() > 20) {
        throw ValidationError("top10_overlap supports at most 20 techniques");
    }
    std::vector<std::string> names;
    std::set<std::string> all_bugs;
    for (const auto& [name, bugs] : hit_bugs) {
        names.push_back(name);
        all_bugs.insert(bugs.begin(), bugs.end());
    }
    const std::size_t cells = (std::size_t{1} << names.size()) - 1;
    std::vector<std::size_t> counts(cells + 1, 0);
    for (const auto& bug : all_bugs) {
        std::size_t mask = 0;
        for (std::size_t i = 0; i < names.size(); ++i) {
            if (hit_bugs.at(names[i]).count(bug) != 0) {
                mask |= std::size_t{1} << i;
            }
        }
        ++counts[mask];
    }
    std::vector<OverlapCell> out;
    out.reserve(cells);
    for (std::size_t mask = 1; mask <= cells; ++mask) {
        OverlapCell cell;
        for (std::size_t i = 0; i < names.size(); ++i) {
            if (mask & (std::size_t{1} << i)) {
                cell.techniques.push_back(names[i]);
            }
        }
        cell.count = counts[mask];
        out.push_back(std::move(cell));
    }
    return out;
}

std::set<std::string> hit_set(const FirstRanks& ranks, std::size_t k) {
    std::set<std::string> out;
    for (const auto& [bug, rank] : ranks) {
        if (rank && *rank <= k) {
            out.insert(bug);
        }
    }
    return out;
}

}  // namespace guibl
