#pragma once

#include <filesystem>
#include <string>

#include "guibl/index.hpp"

namespace guibl::app {

// Persisted form is JSON holding per-document term counts; weights, idf
// and lengths are recomputed on load so the round trip is exact.
std::string serialize_index(const Index& index);
Index deserialize_index(const std::string& text);

void write_index(const Index& index, const std::filesystem::path& file);
Index read_index(const std::filesystem::path& file);

std::filesystem::path index_file_for(const std::filesystem::path& dir, const std::string& app_id);

}  // namespace guibl::app
