#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "guibl/corpus.hpp"
#include "guibl/scenario.hpp"

namespace guibl {

// Set of rankable corpus paths.
struct FileSet {
    std::set<std::string> paths;

    bool contains(const std::string& path) const { return paths.count(path) != 0; }
    bool empty() const noexcept { return paths.empty(); }
    std::size_t size() const noexcept { return paths.size(); }

    bool operator==(const FileSet&) const = default;
};

FileSet set_union(const FileSet& a, const FileSet& b);
bool is_subset(const FileSet& inner, const FileSet& outer);

struct TermDiagnostic {
    enum class Kind { screen, component };
    Kind kind = Kind::screen;
    std::string term;
    std::size_t matches = 0;
};

struct MappingResult {
    FileSet files;
    std::vector<TermDiagnostic> diagnostics;  // one per term, in term order
};

// Extracts the resource ids a document references. Swappable so a
// listener-aware analysis can replace plain lexical matching.
using ReferenceExtractor = std::function<std::set<std::string>(const SourceDocument&)>;

// Ids referenced as R.id.<id> or as the string literal "id/<id>".
std::set<std::string> lexical_resource_references(const SourceDocument& doc);

// Resolves GUI terms against one corpus. Reference extraction runs once per
// rankable document at construction.
class GuiFileMapper {
public:
    explicit GuiFileMapper(const Corpus& corpus,
                           ReferenceExtractor extractor = lexical_resource_references);

    const Corpus& corpus() const noexcept { return corpus_; }

    // Rankable files whose basename (sans extension) equals a term; "A$B"
    // matches on "A".
    MappingResult map_screen_terms(const std::set<std::string>& terms) const;

    // Rankable files that reference any of the ids.
    MappingResult map_component_ids(const std::set<std::string>& ids) const;

    // select_screens -> extract_terms -> union of both mappings.
    MappingResult gui_related_files(const ReproductionScenario& scenario, GuiInfoType info,
                                    std::size_t n_screens) const;

private:
    const Corpus& corpus_;
    std::map<std::string, std::set<std::string>> files_by_basename_;
    std::map<std::string, std::set<std::string>> files_by_reference_;
};

MappingResult map_screen_terms(const std::set<std::string>& terms, const Corpus& corpus);
MappingResult map_component_ids(const std::set<std::string>& ids, const Corpus& corpus);

}  // namespace guibl
