#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "guibl/preprocess.hpp"

namespace guibl {

struct RankedEntry {
    std::string path;
    double score = 0.0;

    bool operator==(const RankedEntry&) const = default;
};

// Ordered retrieval result. Rankers emit entries by descending score with
// ascending path as tie-breaker; re-rankers may reorder positionally.
struct RankedList {
    std::string query_id;
    std::vector<RankedEntry> entries;

    // 1-based position of path, if present.
    std::optional<std::size_t> rank_of(std::string_view path) const noexcept;

    std::vector<std::string> paths() const;

    bool operator==(const RankedList&) const = default;
};

// Sorts by score descending, then path ascending.
void sort_by_score(std::vector<RankedEntry>& entries);

// A query for a ranker: the id addresses precomputed vectors (embeddings),
// the tokens feed term-based models.
struct Query {
    std::string id;
    TokenList tokens;
};

class Ranker {
public:
    virtual ~Ranker() = default;
    virtual std::string_view name() const noexcept = 0;
    virtual RankedList rank(const Query& query) const = 0;
};

}  // namespace guibl
