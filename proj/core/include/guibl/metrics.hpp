#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "guibl/ranking.hpp"

namespace guibl {

// bug id -> buggy file paths
using GroundTruth = std::map<std::string, std::set<std::string>>;

// bug id -> ranking
using RankingSet = std::map<std::string, RankedList>;

// bug id -> best rank of any buggy file (nullopt: no buggy file ranked)
using FirstRanks = std::map<std::string, std::optional<std::size_t>>;

std::optional<std::size_t> first_rank(const RankedList& ranked, const std::set<std::string>& truth);

// Throws ValidationError when a ranked bug has no ground truth.
FirstRanks first_ranks(const RankingSet& rankings, const GroundTruth& truth);

struct HitsAtK {
    std::size_t k = 0;
    std::size_t hits = 0;
    std::size_t total = 0;
    double fraction = 0.0;  // hits / total, 0 for an empty bug set
};

HitsAtK hits_at_k(const RankingSet& rankings, const GroundTruth& truth, std::size_t k);
HitsAtK hits_at_k(const FirstRanks& ranks, std::size_t k);

// (gui - base) / base; nullopt when base is zero.
std::optional<double> relative_improvement(double h_gui, double h_base) noexcept;

struct MovementReport {
    std::size_t cutoff = 10;
    std::size_t out_to_in = 0;
    std::size_t in_to_out = 0;
    std::size_t stayed_in = 0;
    std::size_t stayed_out = 0;
    std::size_t inside_improved = 0;
    std::size_t inside_deteriorated = 0;
    std::size_t inside_unchanged = 0;
    std::size_t outside_improved = 0;
    std::size_t outside_deteriorated = 0;
    std::size_t outside_unchanged = 0;

    std::size_t total() const noexcept { return out_to_in + in_to_out + stayed_in + stayed_out; }
    bool operator==(const MovementReport&) const = default;
};

// Classifies each bug by its first rank before and after augmentation (an
// unranked bug counts as rank infinity). Inside/outside buckets cover bugs
// that stayed on the same side of the cutoff. Throws ValidationError if the
// bug sets differ.
MovementReport rank_movement(const FirstRanks& base, const FirstRanks& aug, std::size_t cutoff = 10);
MovementReport rank_movement(const RankingSet& base, const RankingSet& aug, const GroundTruth& truth,
                             std::size_t cutoff = 10);

struct OverlapCell {
    std::vector<std::string> techniques;  // sorted, non-empty
    std::size_t count = 0;                // bugs hit by exactly these techniques
};

// One cell per non-empty subset of techniques (2^m - 1 cells).
std::vector<OverlapCell> top10_overlap(const std::map<std::string, std::set<std::string>>& hit_bugs);

// Bugs whose first rank is within k.
std::set<std::string> hit_set(const FirstRanks& ranks, std::size_t k);

}  // namespace guibl
