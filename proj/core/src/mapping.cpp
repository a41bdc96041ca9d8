#include "guibl/mapping.hpp"

#include <algorithm>

namespace guibl {

FileSet set_union(const FileSet& a, const FileSet& b) {
    FileSet out = a;
    out.paths.insert(b.paths.begin(), b.paths.end());
    return out;
}

bool is_subset(const FileSet& inner, const FileSet& outer) {
    return std::includes(outer.paths.begin(), outer.paths.end(), inner.paths.begin(),
                         inner.paths.end());
}

namespace {

constexpr bool is_ident_char(char c) noexcept {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_';
}

std::string basename_stem(std::string_view path) {
    if (const auto slash = path.rfind('/'); slash != std::string_view::npos) {
        path = path.substr(slash + 1);
    }
    if (const auto dot = path.rfind('.'); dot != std::string_view::npos) {
        path = path.substr(0, dot);
    }
    return std::string(path);
}

}  // namespace

std::set<std::string> lexical_resource_references(const SourceDocument& doc) {
    std::set<std::string> ids;
    const std::string_view text = doc.raw_text;

    constexpr std::string_view kRef = "R.id.";
    for (auto pos = text.find(kRef); pos != std::string_view::npos; pos = text.find(kRef, pos + 1)) {
        if (pos > 0 && is_ident_char(text[pos - 1])) {
            continue;
        }
        auto end = pos + kRef.size();
        while (end < text.size() && is_ident_char(text[end])) {
            ++end;
        }
        if (end > pos + kRef.size()) {
            ids.emplace(text.substr(pos + kRef.size(), end - pos - kRef.size()));
        }
    }

    constexpr std::string_view kLiteral = "\"id/";
    for (auto pos = text.find(kLiteral); pos != std::string_view::npos;
         pos = text.find(kLiteral, pos + 1)) {
        const auto start = pos + kLiteral.size();
        const auto close = text.find('"', start);
        if (close == std::string_view::npos || close == start) {
            continue;
        }
        const auto id = text.substr(start, close - start);
        if (std::all_of(id.begin(), id.end(), is_ident_char)) {
            ids.emplace(id);
        }
    }
    return ids;
}

GuiFileMapper::GuiFileMapper(const Corpus& corpus, ReferenceExtractor extractor)
    : corpus_(corpus) {
    for (std::size_t i = 0; i < corpus.rankable_count(); ++i) {
        const auto& doc = corpus.rankable_document(i);
        files_by_basename_[basename_stem(doc.path)].insert(doc.path);
        for (const auto& id : extractor(doc)) {
            files_by_reference_[id].insert(doc.path);
        }
    }
}

MappingResult GuiFileMapper::map_screen_terms(const std::set<std::string>& terms) const {
    MappingResult result;
    for (const auto& term : terms) {
        const auto outer = term.substr(0, term.find('$'));
        std::size_t matches = 0;
        if (auto it = files_by_basename_.find(outer); it != files_by_basename_.end()) {
            result.files.paths.insert(it->second.begin(), it->second.end());
            matches = it->second.size();
        }
        result.diagnostics.push_back({TermDiagnostic::Kind::screen, term, matches});
    }
    return result;
}

MappingResult GuiFileMapper::map_component_ids(const std::set<std::string>& ids) const {
    MappingResult result;
    for (const auto& id : ids) {
        std::size_t matches = 0;
        if (auto it = files_by_reference_.find(id); it != files_by_reference_.end()) {
            result.files.paths.insert(it->second.begin(), it->second.end());
            matches = it->second.size();
        }
        result.diagnostics.push_back({TermDiagnostic::Kind::component, id, matches});
    }
    return result;
}

MappingResult GuiFileMapper::gui_related_files(const ReproductionScenario& scenario,
                                               GuiInfoType info, std::size_t n_screens) const {
    const auto terms = extract_terms(select_screens(scenario, n_screens), info);
    auto result = map_screen_terms(terms.screen_terms);
    auto components = map_component_ids(terms.component_ids);
    result.files = set_union(result.files, components.files);
    result.diagnostics.insert(result.diagnostics.end(),
                              std::make_move_iterator(components.diagnostics.begin()),
                              std::make_move_iterator(components.diagnostics.end()));
    return result;
}

MappingResult map_screen_terms(const std::set<std::string>& terms, const Corpus& corpus) {
    return GuiFileMapper(corpus).map_screen_terms(terms);
}

MappingResult map_component_ids(const std::set<std::string>& ids, const Corpus& corpus) {
    return GuiFileMapper(corpus).map_component_ids(ids);
}

}  // namespace guibl
