#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace guibl::app {

// One bug of the dataset. Paths are absolute after loading (relative paths
// in the file are resolved against the manifest's directory).
struct BugDescriptor {
    std::string bug_id;
    std::string app_id;
    std::filesystem::path corpus_root;
    std::filesystem::path report_path;  // plain text: title line, then body
    std::vector<std::string> truth_paths;
    std::filesystem::path scenario_dir;
    std::optional<std::filesystem::path> embedding_store_path;
};

struct DatasetManifest {
    std::filesystem::path source;
    std::vector<std::string> include_globs;
    std::vector<BugDescriptor> bugs;
};

// Structural validation only: JSON shape, required fields, unique bug ids.
// Throws ValidationError. Referenced paths are checked per bug later so
// one broken bug does not abort a whole run.
DatasetManifest load_manifest(const std::filesystem::path& file);

// Human-readable problems with the paths a bug references (empty if none).
std::vector<std::string> missing_paths(const BugDescriptor& bug);

}  // namespace guibl::app
