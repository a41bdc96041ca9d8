#pragma once

#include <filesystem>
#include <iosfwd>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "guibl/augment.hpp"
#include "guibl/corpus.hpp"
#include "guibl/embeddings.hpp"
#include "guibl/index.hpp"
#include "guibl/mapping.hpp"
#include "guibl_app/manifest.hpp"
#include "guibl_app/report.hpp"

namespace guibl::app::detail {

struct AppData {
    std::string app_id;
    std::filesystem::path root;
    Corpus corpus;
    Index index;
    std::unique_ptr<GuiFileMapper> mapper;  // refers to corpus; AppData never moves
};

struct LoadedBug {
    BugCase bug;
    AppData* app = nullptr;
    const EmbeddingStore* store = nullptr;
};

struct Dataset {
    std::map<std::string, std::unique_ptr<AppData>> apps;
    std::map<std::string, std::unique_ptr<EmbeddingStore>> stores;  // by path
    std::vector<LoadedBug> bugs;                                    // manifest order
    std::vector<Exclusion> excluded;
};

// Loads corpora, indices, reports, scenarios and (optionally) embedding
// stores. Bugs with unusable inputs land in excluded with a reason.
Dataset load_dataset(const DatasetManifest& manifest,
                     const std::optional<std::filesystem::path>& index_dir, bool load_stores,
                     std::ostream& log);

std::string read_text_file(const std::filesystem::path& file);

std::string utc_timestamp();

}  // namespace guibl::app::detail
