#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "guibl/ranking.hpp"

namespace guibl {

// Record paths starting with this prefix carry query vectors.
inline constexpr std::string_view kQueryPrefix = "query:";

// Segment embeddings for documents and queries, all of one dimension and
// unit L2 norm (within kUnitNormTolerance).
//
// On-disk format (UTF-8 JSON lines):
//   {"dim": 768}
//   {"path": "app/src/Foo.java", "segment_index": 0, "vector": [0.01, ...]}
//   {"path": "query:bug-17", "segment_index": 0, "vector": [...]}
// Segment indices of one path must be 0..k-1 (any line order).
class EmbeddingStore {
public:
    static constexpr double kUnitNormTolerance = 1e-4;
    using Vector = std::vector<double>;

    explicit EmbeddingStore(std::size_t dim = 0);

    std::size_t dim() const noexcept { return dim_; }

    // Throws ValidationError on dimension mismatch, non-unit norm or a
    // repeated (path, segment_index).
    void add(const std::string& path, std::size_t segment_index, Vector vec);

    bool has_document(const std::string& path) const;
    bool has_query(const std::string& query_id) const;

    // Segments in index order; throws ValidationError when absent or gappy.
    const std::vector<Vector>& document_segments(const std::string& path) const;
    const std::vector<Vector>& query_segments(const std::string& query_id) const;

    std::vector<std::string> document_paths() const;
    std::vector<std::string> query_ids() const;

    static EmbeddingStore read(std::istream& in);
    static EmbeddingStore load(const std::filesystem::path& file);
    void write(std::ostream& out) const;

private:
    std::size_t dim_;
    std::map<std::string, std::vector<Vector>> documents_;
    std::map<std::string, std::vector<Vector>> queries_;

    std::map<std::string, std::vector<Vector>>& bucket_for(const std::string& path,
                                                          std::string& key);
};

double cosine(const std::vector<double>& a, const std::vector<double>& b);

// Scores each document by the best cosine over (query segment, document
// segment) pairs. With an empty doc set every stored document is ranked;
// otherwise every listed document must be in the store.
RankedList rank_embeddings(const EmbeddingStore& store, const std::string& query_id,
                           const std::vector<std::string>& documents = {});

class EmbeddingRanker final : public Ranker {
public:
    EmbeddingRanker(const EmbeddingStore& store, std::vector<std::string> documents)
        : store_(store), documents_(std::move(documents)) {}
    std::string_view name() const noexcept override { return "embed"; }
    RankedList rank(const Query& query) const override {
        return rank_embeddings(store_, query.id, documents_);
    }

private:
    const EmbeddingStore& store_;
    std::vector<std::string> documents_;
};

}  // namespace guibl
