#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "guibl/preprocess.hpp"

namespace guibl {

enum class DocumentKind { java, xml, other };

std::string_view to_string(DocumentKind kind) noexcept;

// Kind is decided by extension: .java, .xml, anything else is "other".
DocumentKind kind_for_path(std::string_view path) noexcept;

struct SourceDocument {
    std::string path;  // forward-slash path relative to the corpus root
    DocumentKind kind = DocumentKind::other;
    std::string raw_text;
    TokenList tokens;
};

// Builds a document and runs the preprocessing pipeline over its text.
SourceDocument make_document(std::string path, std::string raw_text);

struct LoadWarning {
    std::string path;
    std::string message;
};

// Immutable set of source documents for one app. Documents are kept in
// ascending path order; only .java documents are rankable.
class Corpus {
public:
    Corpus() = default;

    // Throws ValidationError on duplicate paths.
    Corpus(std::string app_id, std::vector<SourceDocument> documents,
           std::vector<LoadWarning> warnings = {});

    const std::string& app_id() const noexcept { return app_id_; }
    const std::vector<SourceDocument>& documents() const noexcept { return documents_; }
    const std::vector<LoadWarning>& warnings() const noexcept { return warnings_; }

    // Indices into documents() of the kind=java subset, ascending.
    const std::vector<std::size_t>& rankable() const noexcept { return rankable_; }
    std::size_t rankable_count() const noexcept { return rankable_.size(); }
    const SourceDocument& rankable_document(std::size_t i) const {
        return documents_.at(rankable_.at(i));
    }

    const SourceDocument* find(std::string_view path) const noexcept;
    bool is_rankable(std::string_view path) const noexcept;

private:
    std::string app_id_;
    std::vector<SourceDocument> documents_;
    std::vector<std::size_t> rankable_;
    std::vector<LoadWarning> warnings_;
};

inline const std::vector<std::string> kDefaultIncludeGlobs = {"**/*.java", "**/*.xml"};

// Glob over forward-slash relative paths. "*" and "?" stay within one path
// segment; "**/" matches zero or more leading directories.
bool glob_match(std::string_view pattern, std::string_view path) noexcept;

// Walks root (following directory symlinks, rejecting cycles) and loads
// every file matched by at least one glob. Unreadable files are skipped and
// reported through Corpus::warnings(). Throws ValidationError when nothing
// matches and IoError when root is missing or a symlink cycle is found.
Corpus load_corpus(const std::filesystem::path& root,
                   const std::vector<std::string>& include_globs = kDefaultIncludeGlobs,
                   std::string app_id = {});

}  // namespace guibl
