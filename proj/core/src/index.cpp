#include "guibl/index.hpp"

#include <algorithm>
#include <cmath>

#include "guibl/error.hpp"

namespace guibl {
namespace {

double tf_weight(std::size_t tf) { return 1.0 + std::log(static_cast<double>(tf)); }

std::map<std::string, std::size_t> count_terms(const TokenList& tokens) {
    std::map<std::string, std::size_t> counts;
    for (const auto& t : tokens) {
        ++counts[t];
    }
    return counts;
}

}  // namespace

double sparse_dot(const SparseVector& a, const SparseVector& b) noexcept {
    double sum = 0.0;
    auto ia = a.begin();
    auto ib = b.begin();
    while (ia != a.end() && ib != b.end()) {
        if (ia->first < ib->first) {
            ++ia;
        } else if (ib->first < ia->first) {
            ++ib;
        } else {
            sum += ia->second * ib->second;
            ++ia;
            ++ib;
        }
    }
    return sum;
}

double sparse_norm(const SparseVector& v) noexcept {
    double sum = 0.0;
    for (const auto& [term, w] : v) {
        sum += w * w;
    }
    return std::sqrt(sum);
}

Index Index::build(const Corpus& corpus) {
    std::vector<TermCounts> docs;
    std::vector<std::string> excluded;
    for (std::size_t i = 0; i < corpus.rankable_count(); ++i) {
        const auto& doc = corpus.rankable_document(i);
        if (doc.tokens.empty()) {
            excluded.push_back(doc.path);
            continue;
        }
        docs.push_back({doc.path, count_terms(doc.tokens)});
    }
    if (docs.empty()) {
        throw ValidationError("corpus '" + corpus.app_id() +
                              "' has no rankable document with tokens after preprocessing");
    }
    return from_term_counts(corpus.app_id(), std::move(docs), std::move(excluded));
}

Index Index::from_term_counts(std::string app_id, std::vector<TermCounts> docs,
                              std::vector<std::string> excluded) {
    if (docs.empty()) {
        throw ValidationError("index must contain at least one document");
    }
    std::sort(docs.begin(), docs.end(),
              [](const TermCounts& a, const TermCounts& b) { return a.path < b.path; });

    Index index;
    index.app_id_ = std::move(app_id);
    index.excluded_ = std::move(excluded);

    std::map<std::string, std::size_t> df;
    for (std::size_t i = 0; i < docs.size(); ++i) {
        if (i > 0 && docs[i].path == docs[i - 1].path) {
            throw ValidationError("duplicate indexed document: " + docs[i].path);
        }
        for (const auto& [term, count] : docs[i].counts) {
            if (count == 0) {
                throw ValidationError("zero term count for '" + term + "' in " + docs[i].path);
            }
            ++df[term];
        }
    }
    const auto n = static_cast<double>(docs.size());
    for (const auto& [term, freq] : df) {
        index.idf_.emplace(term, std::log(n / static_cast<double>(freq)));
    }

    index.documents_.reserve(docs.size());
    for (const auto& tc : docs) {
        IndexedDocument doc;
        doc.path = tc.path;
        for (const auto& [term, count] : tc.counts) {
            doc.length += count;
            const double w = tf_weight(count) * index.idf_.at(term);
            if (w != 0.0) {
                doc.weights.emplace_back(term, w);
            }
        }
        if (doc.length == 0) {
            throw ValidationError("empty indexed document: " + tc.path);
        }
        doc.norm = sparse_norm(doc.weights);
        index.documents_.push_back(std::move(doc));
    }
    const auto [lo, hi] = std::minmax_element(
        index.documents_.begin(), index.documents_.end(),
        [](const IndexedDocument& a, const IndexedDocument& b) { return a.length < b.length; });
    index.min_length_ = lo->length;
    index.max_length_ = hi->length;
    index.term_counts_ = std::move(docs);
    return index;
}

std::optional<double> Index::idf_of(const std::string& term) const {
    auto it = idf_.find(term);
    if (it == idf_.end()) {
        return std::nullopt;
    }
    return it->second;
}

SparseVector Index::query_vector(const TokenList& tokens) const {
    SparseVector out;
    for (const auto& [term, count] : count_terms(tokens)) {
        auto it = idf_.find(term);
        if (it == idf_.end()) {
            continue;
        }
        const double w = tf_weight(count) * it->second;
        if (w != 0.0) {
            out.emplace_back(term, w);
        }
    }
    return out;
}

double Index::normalized_length(std::size_t doc) const {
    if (max_length_ == min_length_) {
        return 0.5;
    }
    const auto len = static_cast<double>(documents_.at(doc).length);
    return (len - static_cast<double>(min_length_)) /
           static_cast<double>(max_length_ - min_length_);
}

double Index::length_boost(std::size_t doc) const {
    return 1.0 / (1.0 + std::exp(-normalized_length(doc)));
}

namespace {

template <typename ScoreFn>
RankedList rank_with(const Index& index, const Query& query, ScoreFn&& score) {
    const auto qv = index.query_vector(query.tokens);
    const double qnorm = sparse_norm(qv);
    RankedList out;
    out.query_id = query.id;
    out.entries.reserve(index.doc_count());
    for (std::size_t i = 0; i < index.doc_count(); ++i) {
        const auto& doc = index.documents()[i];
        double cosine = 0.0;
        if (qnorm > 0.0 && doc.norm > 0.0) {
            cosine = std::min(1.0, sparse_dot(qv, doc.weights) / (qnorm * doc.norm));
        }
        out.entries.push_back({doc.path, score(i, cosine)});
    }
    sort_by_score(out.entries);
    return out;
}

}  // namespace

RankedList rank_tfidf(const Index& index, const Query& query) {
    return rank_with(index, query, [](std::size_t, double cosine) { return cosine; });
}

RankedList rank_rvsm(const Index& index, const Query& query) {
    return rank_with(index, query,
                     [&](std::size_t i, double cosine) { return index.length_boost(i) * cosine; });
}

}  // namespace guibl
