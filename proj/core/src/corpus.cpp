#include "guibl/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "guibl/error.hpp"

namespace guibl {

namespace fs = std::filesystem;

std::string_view to_string(DocumentKind kind) noexcept {
    switch (kind) {
        case DocumentKind::java: return "java";
        case DocumentKind::xml: return "xml";
        case DocumentKind::other: return "other";
    }
    return "other";
}

DocumentKind kind_for_path(std::string_view path) noexcept {
    auto ends_with = [&](std::string_view suffix) {
        return path.size() >= suffix.size() && path.substr(path.size() - suffix.size()) == suffix;
    };
    if (ends_with(".java")) return DocumentKind::java;
    if (ends_with(".xml")) return DocumentKind::xml;
    return DocumentKind::other;
}

SourceDocument make_document(std::string path, std::string raw_text) {
    SourceDocument doc;
    doc.kind = kind_for_path(path);
    doc.tokens = preprocess_text(raw_text);
    doc.path = std::move(path);
    doc.raw_text = std::move(raw_text);
    return doc;
}

Corpus::Corpus(std::string app_id, std::vector<SourceDocument> documents,
               std::vector<LoadWarning> warnings)
    : app_id_(std::move(app_id)), documents_(std::move(documents)), warnings_(std::move(warnings)) {
    std::sort(documents_.begin(), documents_.end(),
              [](const SourceDocument& a, const SourceDocument& b) { return a.path < b.path; });
    for (std::size_t i = 0; i < documents_.size(); ++i) {
        if (i > 0 && documents_[i].path == documents_[i - 1].path) {
            throw ValidationError("duplicate document path in corpus: " + documents_[i].path);
        }
        if (documents_[i].kind == DocumentKind::java) {
            rankable_.push_back(i);
        }
    }
}

const SourceDocument* Corpus::find(std::string_view path) const noexcept {
    auto it = std::lower_bound(documents_.begin(), documents_.end(), path,
                               [](const SourceDocument& d, std::string_view p) { return d.path < p; });
    if (it == documents_.end() || it->path != path) {
        return nullptr;
    }
    return &*it;
}

bool Corpus::is_rankable(std::string_view path) const noexcept {
    const auto* doc = find(path);
    return doc != nullptr && doc->kind == DocumentKind::java;
}

bool glob_match(std::string_view pattern, std::string_view path) noexcept {
    if (pattern.empty()) {
        return path.empty();
    }
    if (pattern.substr(0, 3) == "**/") {
        const auto rest = pattern.substr(3);
        if (glob_match(rest, path)) {
            return true;
        }
        for (std::size_t i = 0; i < path.size(); ++i) {
            if (path[i] == '/' && glob_match(rest, path.substr(i + 1))) {
                return true;
            }
        }
        return false;
    }
    if (pattern == "**") {
        return true;
    }
    switch (pattern[0]) {
        case '*':
            for (std::size_t i = 0; i <= path.size(); ++i) {
                if (glob_match(pattern.substr(1), path.substr(i))) {
                    return true;
                }
                if (i < path.size() && path[i] == '/') {
                    break;
                }
            }
            return false;
        case '?':
            return !path.empty() && path[0] != '/' && glob_match(pattern.substr(1), path.substr(1));
        default:
            return !path.empty() && path[0] == pattern[0] &&
                   glob_match(pattern.substr(1), path.substr(1));
    }
}

namespace {

struct Walker {
    const fs::path& root;
    const std::vector<std::string>& globs;
    std::vector<SourceDocument> documents;
    std::vector<LoadWarning> warnings;
    std::vector<fs::path> stack;  // canonical directories on the current descent

    void walk(const fs::path& dir) {
        const auto canonical = fs::canonical(dir);
        if (std::find(stack.begin(), stack.end(), canonical) != stack.end()) {
            throw IoError("symlink cycle detected at " + dir.string());
        }
        stack.push_back(canonical);

        std::vector<fs::directory_entry> entries;
        for (const auto& entry : fs::directory_iterator(dir)) {
            entries.push_back(entry);
        }
        std::sort(entries.begin(), entries.end(),
                  [](const auto& a, const auto& b) { return a.path() < b.path(); });

        for (const auto& entry : entries) {
            std::error_code ec;
            if (entry.is_directory(ec)) {
                walk(entry.path());
            } else if (entry.is_regular_file(ec)) {
                visit_file(entry.path());
            } else if (entry.is_symlink(ec) && !fs::exists(entry.path(), ec)) {
                visit_dangling(entry.path());
            }
        }
        stack.pop_back();
    }

    bool selected(const std::string& rel) const {
        return std::any_of(globs.begin(), globs.end(),
                           [&](const std::string& g) { return glob_match(g, rel); });
    }

    void visit_dangling(const fs::path& link) {
        const auto rel = link.lexically_relative(root).generic_string();
        if (selected(rel)) {
            warnings.push_back({rel, "dangling symlink skipped"});
        }
    }

    void visit_file(const fs::path& file) {
        const auto rel = file.lexically_relative(root).generic_string();
        if (!selected(rel)) {
            return;
        }
        std::ifstream in(file, std::ios::binary);
        std::ostringstream buf;
        if (in) {
            buf << in.rdbuf();
        }
        if (!in || in.bad()) {
            warnings.push_back({rel, "unreadable file skipped"});
            return;
        }
        documents.push_back(make_document(rel, buf.str()));
    }
};

}  // namespace

Corpus load_corpus(const fs::path& root, const std::vector<std::string>& include_globs,
                   std::string app_id) {
    std::error_code ec;
    if (!fs::is_directory(root, ec)) {
        throw IoError("corpus root is not a directory: " + root.string());
    }
    Walker walker{root, include_globs, {}, {}, {}};
    try {
        walker.walk(root);
    } catch (const fs::filesystem_error& e) {
        throw IoError(std::string("cannot walk corpus: ") + e.what());
    }
    if (walker.documents.empty()) {
        throw ValidationError("no files matched the include globs under " + root.string());
    }
    return Corpus(std::move(app_id), std::move(walker.documents), std::move(walker.warnings));
}

}  // namespace guibl
