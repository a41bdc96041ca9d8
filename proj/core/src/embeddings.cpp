#include "guibl/embeddings.hpp"

#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>

#include <nlohmann/json.hpp>

#include "guibl/error.hpp"

namespace guibl {

namespace {

double l2(const std::vector<double>& v) {
    double sum = 0.0;
    for (double x : v) {
        sum += x * x;
    }
    return std::sqrt(sum);
}

const std::vector<EmbeddingStore::Vector>& checked_segments(
    const std::map<std::string, std::vector<EmbeddingStore::Vector>>& bucket,
    const std::string& key, const char* what) {
    auto it = bucket.find(key);
    if (it == bucket.end()) {
        throw ValidationError(std::string("embedding store has no ") + what + " '" + key + "'");
    }
    for (const auto& seg : it->second) {
        if (seg.empty()) {
            throw ValidationError(std::string("embedding store ") + what + " '" + key +
                                  "' has a gap in its segment indices");
        }
    }
    return it->second;
}

}  // namespace

EmbeddingStore::EmbeddingStore(std::size_t dim) : dim_(dim) {}

std::map<std::string, std::vector<EmbeddingStore::Vector>>& EmbeddingStore::bucket_for(
    const std::string& path, std::string& key) {
    if (path.compare(0, kQueryPrefix.size(), kQueryPrefix) == 0) {
        key = path.substr(kQueryPrefix.size());
        return queries_;
    }
    key = path;
    return documents_;
}

void EmbeddingStore::add(const std::string& path, std::size_t segment_index, Vector vec) {
    if (dim_ == 0) {
        throw ValidationError("embedding store dimension must be positive");
    }
    if (vec.size() != dim_) {
        throw ValidationError("embedding for '" + path + "' has dimension " +
                              std::to_string(vec.size()) + ", expected " + std::to_string(dim_));
    }
    const double norm = l2(vec);
    if (std::abs(norm - 1.0) > kUnitNormTolerance) {
        throw ValidationError("embedding for '" + path + "' segment " +
                              std::to_string(segment_index) + " is not unit norm (" +
                              std::to_string(norm) + ")");
    }
    std::string key;
    auto& segments = bucket_for(path, key)[key];
    if (segments.size() <= segment_index) {
        segments.resize(segment_index + 1);
    }
    if (!segments[segment_index].empty()) {
        throw ValidationError("duplicate embedding record for '" + path + "' segment " +
                              std::to_string(segment_index));
    }
    segments[segment_index] = std::move(vec);
}

bool EmbeddingStore::has_document(const std::string& path) const {
    return documents_.count(path) != 0;
}

bool EmbeddingStore::has_query(const std::string& query_id) const {
    return queries_.count(query_id) != 0;
}

const std::vector<EmbeddingStore::Vector>& EmbeddingStore::document_segments(
    const std::string& path) const {
    return checked_segments(documents_, path, "document");
}

const std::vector<EmbeddingStore::Vector>& EmbeddingStore::query_segments(
    const std::string& query_id) const {
    return checked_segments(queries_, query_id, "query");
}

std::vector<std::string> EmbeddingStore::document_paths() const {
    std::vector<std::string> out;
    for (const auto& [path, segs] : documents_) {
        out.push_back(path);
    }
    return out;
}

std::vector<std::string> EmbeddingStore::query_ids() const {
    std::vector<std::string> out;
    for (const auto& [id, segs] : queries_) {
        out.push_back(id);
    }
    return out;
}

EmbeddingStore EmbeddingStore::read(std::istream& in) {
    std::string line;
    std::size_t line_no = 0;
    auto fail = [&](const std::string& msg) {
        throw ValidationError("embedding store line " + std::to_string(line_no) + ": " + msg);
    };

    EmbeddingStore store;
    bool have_header = false;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string::npos) {
            continue;
        }
        nlohmann::json rec;
        try {
            rec = nlohmann::json::parse(line);
        } catch (const nlohmann::json::parse_error& e) {
            fail(e.what());
        }
        if (!have_header) {
            if (!rec.is_object() || !rec.contains("dim") || !rec["dim"].is_number_unsigned() ||
                rec["dim"].get<std::size_t>() == 0) {
                fail("expected header {\"dim\": <positive integer>}");
            }
            store.dim_ = rec["dim"].get<std::size_t>();
            have_header = true;
            continue;
        }
        if (!rec.is_object() || !rec.contains("path") || !rec["path"].is_string() ||
            !rec.contains("segment_index") || !rec["segment_index"].is_number_unsigned() ||
            !rec.contains("vector") || !rec["vector"].is_array()) {
            fail("expected {\"path\", \"segment_index\", \"vector\"} record");
        }
        Vector vec;
        vec.reserve(rec["vector"].size());
        for (const auto& x : rec["vector"]) {
            if (!x.is_number()) {
                fail("vector entries must be numbers");
            }
            vec.push_back(x.get<double>());
        }
        try {
            store.add(rec["path"].get<std::string>(), rec["segment_index"].get<std::size_t>(),
                      std::move(vec));
        } catch (const ValidationError& e) {
            fail(e.what());
        }
    }
    if (!have_header) {
        throw ValidationError("embedding store is empty (missing dim header)");
    }
    return store;
}

EmbeddingStore EmbeddingStore::load(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) {
        throw IoError("cannot open embedding store " + file.string());
    }
    return read(in);
}

void EmbeddingStore::write(std::ostream& out) const {
    out << nlohmann::json{{"dim", dim_}}.dump() << '\n';
    auto emit = [&](const std::string& path, const std::vector<Vector>& segments) {
        for (std::size_t i = 0; i < segments.size(); ++i) {
            nlohmann::json rec;
            rec["path"] = path;
            rec["segment_index"] = i;
            rec["vector"] = segments[i];
            out << rec.dump() << '\n';
        }
    };
    for (const auto& [path, segs] : documents_) {
        emit(path, segs);
    }
    for (const auto& [id, segs] : queries_) {
        emit(std::string(kQueryPrefix) + id, segs);
    }
}

double cosine(const std::vector<double>& a, const std::vector<double>& b) {
    if (a.size() != b.size()) {
        throw ValidationError("cosine: dimension mismatch");
    }
    double dot = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        dot += a[i] * b[i];
    }
    const double denom = l2(a) * l2(b);
    return denom > 0.0 ? dot / denom : 0.0;
}

RankedList rank_embeddings(const EmbeddingStore& store, const std::string& query_id,
                           const std::vector<std::string>& documents) {
    const auto& query = store.query_segments(query_id);
    const auto paths = documents.empty() ? store.document_paths() : documents;
    if (paths.empty()) {
        throw ValidationError("embedding store has no documents to rank");
    }
    RankedList out;
    out.query_id = query_id;
    out.entries.reserve(paths.size());
    for (const auto& path : paths) {
        double best = -1.0;
        for (const auto& seg : store.document_segments(path)) {
            for (const auto& q : query) {
                best = std::max(best, cosine(q, seg));
            }
        }
        out.entries.push_back({path, best});
    }
    sort_by_score(out.entries);
    return out;
}

}  // namespace guibl
