#include "guibl_app/manifest.hpp"

#include <fstream>
#include <set>

#include <nlohmann/json.hpp>

#include "guibl/corpus.hpp"
#include "guibl/error.hpp"

namespace guibl::app {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::string required_string(const json& obj, const char* key, const std::string& where) {
    if (!obj.contains(key) || !obj[key].is_string() || obj[key].get<std::string>().empty()) {
        throw ValidationError(where + ": field '" + key + "' must be a non-empty string");
    }
    return obj[key].get<std::string>();
}

fs::path resolve(const fs::path& base, const std::string& p) {
    fs::path path(p);
    return path.is_absolute() ? path : (base / path).lexically_normal();
}

}  // namespace

DatasetManifest load_manifest(const fs::path& file) {
    std::ifstream in(file);
    if (!in) {
        throw ValidationError("cannot open manifest " + file.string());
    }
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw ValidationError("manifest " + file.string() + " is not valid JSON: " + e.what());
    }
    if (!doc.is_object() || !doc.contains("bugs") || !doc["bugs"].is_array()) {
        throw ValidationError("manifest must be an object with a 'bugs' array");
    }

    DatasetManifest manifest;
    manifest.source = fs::absolute(file);
    const auto base = manifest.source.parent_path();

    manifest.include_globs = kDefaultIncludeGlobs;
    if (doc.contains("include_globs")) {
        const auto& globs = doc["include_globs"];
        if (!globs.is_array() || globs.empty()) {
            throw ValidationError("manifest 'include_globs' must be a non-empty array of strings");
        }
        manifest.include_globs.clear();
        for (const auto& g : globs) {
            if (!g.is_string()) {
                throw ValidationError("manifest 'include_globs' must contain strings");
            }
            manifest.include_globs.push_back(g.get<std::string>());
        }
    }

    std::set<std::string> seen;
    std::size_t n = 0;
    for (const auto& entry : doc["bugs"]) {
        const auto where = "manifest bug #" + std::to_string(n++);
        if (!entry.is_object()) {
            throw ValidationError(where + ": expected an object");
        }
        BugDescriptor bug;
        bug.bug_id = required_string(entry, "bug_id", where);
        bug.app_id = required_string(entry, "app_id", where);
        bug.corpus_root = resolve(base, required_string(entry, "corpus_root", where));
        bug.report_path = resolve(base, required_string(entry, "report_path", where));
        bug.scenario_dir = resolve(base, required_string(entry, "scenario_dir", where));
        if (!entry.contains("truth_paths") || !entry["truth_paths"].is_array() ||
            entry["truth_paths"].empty()) {
            throw ValidationError(where + ": 'truth_paths' must be a non-empty array");
        }
        for (const auto& p : entry["truth_paths"]) {
            if (!p.is_string()) {
                throw ValidationError(where + ": 'truth_paths' must contain strings");
            }
            bug.truth_paths.push_back(p.get<std::string>());
        }
        if (entry.contains("embedding_store_path") && !entry["embedding_store_path"].is_null()) {
            bug.embedding_store_path =
                resolve(base, required_string(entry, "embedding_store_path", where));
        }
        if (!seen.insert(bug.bug_id).second) {
            throw ValidationError("duplicate bug_id '" + bug.bug_id + "' in manifest");
        }
        manifest.bugs.push_back(std::move(bug));
    }
    if (manifest.bugs.empty()) {
        throw ValidationError("manifest lists no bugs");
    }
    return manifest;
}

std::vector<std::string> missing_paths(const BugDescriptor& bug) {
    std::vector<std::string> out;
    std::error_code ec;
    if (!fs::is_directory(bug.corpus_root, ec)) {
        out.push_back("corpus root not found: " + bug.corpus_root.string());
    }
    if (!fs::is_regular_file(bug.report_path, ec)) {
        out.push_back("bug report not found: " + bug.report_path.string());
    }
    if (!fs::is_directory(bug.scenario_dir, ec)) {
        out.push_back("scenario directory not found: " + bug.scenario_dir.string());
    }
    if (bug.embedding_store_path && !fs::is_regular_file(*bug.embedding_store_path, ec)) {
        out.push_back("embedding store not found: " + bug.embedding_store_path->string());
    }
    return out;
}

}  // namespace guibl::app
