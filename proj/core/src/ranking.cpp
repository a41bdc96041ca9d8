#include "guibl/ranking.hpp"

#include <algorithm>

namespace guibl {

std::optional<std::size_t> RankedList::rank_of(std::string_view path) const noexcept {
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (entries[i].path == path) {
            return i + 1;
        }
    }
    return std::nullopt;
}

std::vector<std::string> RankedList::paths() const {
    std::vector<std::string> out;
    out.reserve(entries.size());
    for (const auto& e : entries) {
        out.push_back(e.path);
    }
    return out;
}

void sort_by_score(std::vector<RankedEntry>& entries) {
    std::sort(entries.begin(), entries.end(), [](const RankedEntry& a, const RankedEntry& b) {
        if (a.score != b.score) {
            return a.score > b.score;
        }
        return a.path < b.path;
    });
}

}  // namespace guibl
