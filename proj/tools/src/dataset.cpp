#include "dataset.hpp"

#include <chrono>
#include <ctime>
#include <fstream>
#include <ostream>
#include <sstream>

#include "guibl/error.hpp"
#include "guibl/scenario.hpp"
#include "guibl_app/index_io.hpp"

namespace guibl::app::detail {

namespace fs = std::filesystem;

std::string read_text_file(const fs::path& file) {
    std::ifstream in(file, std::ios::binary);
    if (!in) {
        throw IoError("cannot read " + file.string());
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string utc_timestamp() {
    const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

namespace {

std::unique_ptr<AppData> load_app(const BugDescriptor& first, const DatasetManifest& manifest,
                                  const std::optional<fs::path>& index_dir) {
    auto app = std::make_unique<AppData>();
    app->app_id = first.app_id;
    app->root = first.corpus_root;
    app->corpus = load_corpus(first.corpus_root, manifest.include_globs, first.app_id);
    if (index_dir) {
        app->index = read_index(index_file_for(*index_dir, first.app_id));
        if (app->index.app_id() != first.app_id) {
            throw ValidationError("index file for '" + first.app_id + "' belongs to app '" +
                                  app->index.app_id() + "'");
        }
    } else {
        app->index = Index::build(app->corpus);
    }
    app->mapper = std::make_unique<GuiFileMapper>(app->corpus);
    return app;
}

}  // namespace

Dataset load_dataset(const DatasetManifest& manifest, const std::optional<fs::path>& index_dir,
                     bool load_stores, std::ostream& log) {
    Dataset data;
    std::map<std::string, std::string> app_failures;

    for (const auto& desc : manifest.bugs) {
        auto exclude = [&](const std::string& reason) {
            log << "excluding " << desc.bug_id << ": " << reason << '\n';
            data.excluded.push_back({desc.bug_id, reason});
        };
        if (auto missing = missing_paths(desc); !missing.empty()) {
            exclude(missing.front());
            continue;
        }
        if (auto failed = app_failures.find(desc.app_id); failed != app_failures.end()) {
            exclude(failed->second);
            continue;
        }
        auto app_it = data.apps.find(desc.app_id);
        if (app_it == data.apps.end()) {
            try {
                app_it = data.apps.emplace(desc.app_id, load_app(desc, manifest, index_dir)).first;
            } catch (const Error& e) {
                app_failures[desc.app_id] = "app '" + desc.app_id + "' unusable: " + e.what();
                exclude(app_failures[desc.app_id]);
                continue;
            }
        }
        AppData& app = *app_it->second;
        if (fs::weakly_canonical(app.root) != fs::weakly_canonical(desc.corpus_root)) {
            exclude("corpus_root differs from the one first given for app '" + desc.app_id + "'");
            continue;
        }

        LoadedBug loaded;
        loaded.app = &app;
        loaded.bug.bug_id = desc.bug_id;
        try {
            loaded.bug.report_tokens = preprocess_text(read_text_file(desc.report_path));
            loaded.bug.scenario = parse_scenario(desc.scenario_dir, desc.bug_id);
        } catch (const Error& e) {
            exclude(e.what());
            continue;
        }
        std::string truth_problem;
        for (const auto& path : desc.truth_paths) {
            if (!app.corpus.is_rankable(path)) {
                truth_problem = "truth file is not a rankable corpus file: " + path;
                break;
            }
            loaded.bug.truth.insert(path);
        }
        if (!truth_problem.empty()) {
            exclude(truth_problem);
            continue;
        }
        if (load_stores && desc.embedding_store_path) {
            const auto key = desc.embedding_store_path->string();
            auto store_it = data.stores.find(key);
            if (store_it == data.stores.end()) {
                try {
                    store_it = data.stores
                                   .emplace(key, std::make_unique<EmbeddingStore>(
                                                     EmbeddingStore::load(*desc.embedding_store_path)))
                                   .first;
                } catch (const Error& e) {
                    exclude(e.what());
                    continue;
                }
            }
            loaded.store = store_it->second.get();
        }
        data.bugs.push_back(std::move(loaded));
    }
    return data;
}

}  // namespace guibl::app::detail
