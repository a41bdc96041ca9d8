#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "guibl/corpus.hpp"
#include "guibl/ranking.hpp"

namespace guibl {

using SparseVector = std::vector<std::pair<std::string, double>>;  // sorted by term

struct TermCounts {
    std::string path;
    std::map<std::string, std::size_t> counts;
};

struct IndexedDocument {
    std::string path;
    std::size_t length = 0;  // number of tokens (#terms)
    SparseVector weights;    // (1 + ln tf) * idf, zero weights omitted
    double norm = 0.0;       // L2 norm of weights
};

// tf-idf index over the rankable documents of one corpus. Documents whose
// token list is empty are excluded and listed in excluded().
class Index {
public:
    // Throws ValidationError if no rankable document has any token.
    static Index build(const Corpus& corpus);

    // Rebuilds an index from persisted term counts.
    static Index from_term_counts(std::string app_id, std::vector<TermCounts> docs,
                                  std::vector<std::string> excluded = {});

    const std::string& app_id() const noexcept { return app_id_; }
    const std::vector<IndexedDocument>& documents() const noexcept { return documents_; }
    const std::vector<TermCounts>& term_counts() const noexcept { return term_counts_; }
    const std::map<std::string, double>& idf() const noexcept { return idf_; }
    const std::vector<std::string>& excluded() const noexcept { return excluded_; }
    std::size_t doc_count() const noexcept { return documents_.size(); }

    // ln(N / df); nullopt for terms that occur in no indexed document.
    std::optional<double> idf_of(const std::string& term) const;

    // tf-idf weights of a query. Terms unknown to the index are dropped.
    SparseVector query_vector(const TokenList& tokens) const;

    // Min-max normalized document length; 0.5 when all lengths are equal.
    double normalized_length(std::size_t doc) const;

    // Logistic length boost 1 / (1 + e^-normalized_length).
    double length_boost(std::size_t doc) const;

private:
    std::string app_id_;
    std::vector<TermCounts> term_counts_;
    std::vector<IndexedDocument> documents_;
    std::map<std::string, double> idf_;
    std::vector<std::string> excluded_;
    std::size_t min_length_ = 0;
    std::size_t max_length_ = 0;
};

double sparse_dot(const SparseVector& a, const SparseVector& b) noexcept;
double sparse_norm(const SparseVector& v) noexcept;

// Cosine between the query's tf-idf vector and every indexed document.
RankedList rank_tfidf(const Index& index, const Query& query);

// Cosine scaled by the logistic document-length boost.
RankedList rank_rvsm(const Index& index, const Query& query);

class TfidfRanker final : public Ranker {
public:
    explicit TfidfRanker(const Index& index) : index_(index) {}
    std::string_view name() const noexcept override { return "tfidf"; }
    RankedList rank(const Query& query) const override { return rank_tfidf(index_, query); }

private:
    const Index& index_;
};

class RvsmRanker final : public Ranker {
public:
    explicit RvsmRanker(const Index& index) : index_(index) {}
    std::string_view name() const noexcept override { return "rvsm"; }
    RankedList rank(const Query& query) const override { return rank_rvsm(index_, query); }

private:
    const Index& index_;
};

}  // namespace guibl
