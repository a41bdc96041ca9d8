#include "guibl_app/index_io.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "guibl/error.hpp"

namespace guibl::app {

using nlohmann::json;
namespace fs = std::filesystem;

constexpr const char* kFormat = "guibl-index";
constexpr int kVersion = 1;

std::string serialize_index(const Index& index) {
    json doc;
    doc["format"] = kFormat;
    doc["version"] = kVersion;
    doc["app_id"] = index.app_id();
    doc["excluded"] = index.excluded();
    json docs = json::array();
    for (const auto& tc : index.term_counts()) {
        docs.push_back({{"path", tc.path}, {"counts", tc.counts}});
    }
    doc["documents"] = std::move(docs);
    return doc.dump(1) + "\n";
}

Index deserialize_index(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ValidationError(std::string("index file is not valid JSON: ") + e.what());
    }
    try {
        if (doc.at("format").get<std::string>() != kFormat || doc.at("version").get<int>() != kVersion) {
            throw ValidationError("unsupported index format");
        }
        std::vector<TermCounts> docs;
        for (const auto& d : doc.at("documents")) {
            docs.push_back({d.at("path").get<std::string>(),
                            d.at("counts").get<std::map<std::string, std::size_t>>()});
        }
        return Index::from_term_counts(doc.at("app_id").get<std::string>(), std::move(docs),
                                       doc.at("excluded").get<std::vector<std::string>>());
    } catch (const json::exception& e) {
        throw ValidationError(std::string("malformed index file: ") + e.what());
    }
}

void write_index(const Index& index, const fs::path& file) {
    std::ofstream out(file, std::ios::binary);
    if (!out) {
        throw IoError("cannot write index " + file.string());
    }
    out << serialize_index(index);
}

Index read_index(const fs::path& file) {
    std::ifstream in(file, std::ios::binary);
    if (!in) {
        throw IoError("cannot open index " + file.string());
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return deserialize_index(buf.str());
}

fs::path index_file_for(const fs::path& dir, const std::string& app_id) {
    return dir / (app_id + ".index.json");
}

}  // namespace guibl::app
