#include "guibl_app/commands.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <map>
#include <ostream>
#include <set>
#include <thread>

#include "dataset.hpp"
#include "guibl/config.hpp"
#include "guibl/error.hpp"
#include "guibl_app/index_io.hpp"

namespace guibl::app {

namespace fs = std::filesystem;
using nlohmann::json;

int guarded(std::ostream& err, const std::function<int()>& body) {
    try {
        return body();
    } catch (const ValidationError& e) {
        err << "error: " << e.what() << '\n';
        return kExitValidation;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitRuntime;
    }
}

namespace {

void write_file(const fs::path& file, const std::string& content) {
    std::ofstream out(file, std::ios::binary);
    if (!out) {
        throw IoError("cannot write " + file.string());
    }
    out << content;
}

void ensure_dir(const fs::path& dir) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (!fs::is_directory(dir)) {
        throw IoError("cannot create output directory " + dir.string());
    }
}

template <typename Fn>
void parallel_for(std::size_t n, std::size_t threads, Fn&& fn) {
    if (threads == 0) {
        threads = std::max<std::size_t>(1, std::thread::hardware_concurrency());
    }
    threads = std::min(threads, n);
    if (threads <= 1) {
        for (std::size_t i = 0; i < n; ++i) {
            fn(i);
        }
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    {
        std::vector<std::jthread> pool;
        for (std::size_t t = 0; t < threads; ++t) {
            pool.emplace_back([&] {
                for (std::size_t i = next++; i < n; i = next++) {
                    try {
                        fn(i);
                    } catch (...) {
                        std::lock_guard lock(failure_mutex);
                        if (!failure) {
                            failure = std::current_exception();
                        }
                    }
                }
            });
        }
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
}

std::vector<std::string> normalize_techniques(const std::vector<std::string>& requested) {
    static const std::set<std::string> kKnown = {"rvsm", "tfidf", "embed"};
    std::vector<std::string> out;
    for (const auto& t : requested) {
        if (kKnown.count(t) == 0) {
            throw ValidationError("unknown technique '" + t + "' (expected rvsm, tfidf or embed)");
        }
        if (std::find(out.begin(), out.end(), t) == out.end()) {
            out.push_back(t);
        }
    }
    if (out.empty()) {
        throw ValidationError("no technique selected");
    }
    return out;
}

std::vector<Configuration> resolve_configs(const std::vector<std::string>& requested) {
    if (requested.empty()) {
        throw ValidationError("no configuration selected");
    }
    if (std::find(requested.begin(), requested.end(), "all") != requested.end()) {
        return enumerate_configs();
    }
    std::vector<Configuration> out;
    for (const auto& text : requested) {
        if (text == kBaselineConfig) {
            continue;
        }
        auto cfg = Configuration::parse(text);
        if (std::find(out.begin(), out.end(), cfg) == out.end()) {
            out.push_back(cfg);
        }
    }
    return out;
}

// Query ids a bug needs embeddings for under the requested configurations.
std::set<std::string> needed_query_ids(const BugCase& bug, const std::vector<Configuration>& configs) {
    std::set<std::string> ids{bug.bug_id};
    for (const auto& cfg : configs) {
        ids.insert(query_id_for(bug.bug_id, cfg));
    }
    return ids;
}

std::vector<std::string> indexed_paths(const Index& index) {
    std::vector<std::string> out;
    for (const auto& d : index.documents()) {
        out.push_back(d.path);
    }
    return out;
}

}  // namespace

int cmd_index(const fs::path& manifest_file, const fs::path& out_dir, std::ostream& log) {
    const auto manifest = load_manifest(manifest_file);
    ensure_dir(out_dir);

    std::map<std::string, const BugDescriptor*> first_by_app;
    std::map<std::string, std::vector<std::string>> errors;
    for (const auto& bug : manifest.bugs) {
        auto [it, inserted] = first_by_app.emplace(bug.app_id, &bug);
        if (!inserted && fs::weakly_canonical(it->second->corpus_root) !=
                             fs::weakly_canonical(bug.corpus_root)) {
            errors[bug.app_id].push_back("bug " + bug.bug_id + ": corpus_root differs from bug " +
                                         it->second->bug_id);
        }
    }

    json report = {{"indexed", json::array()}, {"errors", json::array()}};
    for (const auto& [app_id, bug] : first_by_app) {
        try {
            const auto corpus = load_corpus(bug->corpus_root, manifest.include_globs, app_id);
            const auto index = Index::build(corpus);
            const auto file = index_file_for(out_dir, app_id);
            write_index(index, file);
            json warnings = json::array();
            for (const auto& w : corpus.warnings()) {
                warnings.push_back({{"path", w.path}, {"message", w.message}});
            }
            report["indexed"].push_back({{"app_id", app_id},
                                         {"file", file.filename().string()},
                                         {"documents", index.doc_count()},
                                         {"excluded_empty", index.excluded()},
                                         {"warnings", std::move(warnings)}});
            log << "indexed " << app_id << ": " << index.doc_count() << " documents\n";
        } catch (const Error& e) {
            errors[app_id].push_back(e.what());
        }
    }
    for (const auto& [app_id, messages] : errors) {
        for (const auto& m : messages) {
            log << "index error for " << app_id << ": " << m << '\n';
            report["errors"].push_back({{"app_id", app_id}, {"message", m}});
        }
    }
    write_file(out_dir / "index_report.json", report.dump(2) + "\n");
    return errors.empty() ? kExitOk : kExitRuntime;
}

RunReport execute_run(const RunOptions& options, std::ostream& log) {
    const auto techniques = normalize_techniques(options.techniques);
    const auto configs = resolve_configs(options.configs);
    const auto manifest = load_manifest(options.manifest);
    const bool want_embed = std::find(techniques.begin(), techniques.end(), "embed") != techniques.end();

    if (want_embed) {
        std::vector<std::string> lacking;
        for (const auto& bug : manifest.bugs) {
            if (!bug.embedding_store_path) {
                lacking.push_back(bug.bug_id);
            }
        }
        if (!lacking.empty()) {
            std::string list;
            for (const auto& id : lacking) {
                list += (list.empty() ? "" : ", ") + id;
            }
            throw ValidationError("technique 'embed' needs embedding stores; missing for: " + list);
        }
    }

    auto data = detail::load_dataset(manifest, options.index_dir, want_embed, log);

    if (want_embed) {
        std::vector<detail::LoadedBug> usable;
        for (auto& loaded : data.bugs) {
            std::string problem;
            for (const auto& path : indexed_paths(loaded.app->index)) {
                if (!loaded.store->has_document(path)) {
                    problem = "embedding store lacks document " + path;
                    break;
                }
            }
            if (problem.empty()) {
                for (const auto& id : needed_query_ids(loaded.bug, configs)) {
                    if (!loaded.store->has_query(id)) {
                        problem = "embedding store lacks query " + std::string(kQueryPrefix) + id;
                        break;
                    }
                }
            }
            if (problem.empty()) {
                usable.push_back(std::move(loaded));
            } else {
                log << "excluding " << loaded.bug.bug_id << ": " << problem << '\n';
                data.excluded.push_back({loaded.bug.bug_id, problem});
            }
        }
        data.bugs = std::move(usable);
    }
    if (data.bugs.empty()) {
        throw Error("no bug in the manifest could be evaluated");
    }

    RunReport report;
    report.generated = detail::utc_timestamp();
    report.techniques = techniques;
    report.excluded = data.excluded;
    for (const auto& loaded : data.bugs) {
        report.bugs[loaded.bug.bug_id] = {loaded.app->app_id, loaded.app->index.doc_count()};
    }

    const auto n_bugs = data.bugs.size();
    for (const auto& technique : techniques) {
        // per bug: baseline rank, then one rank per config
        std::vector<std::vector<std::optional<std::size_t>>> ranks(n_bugs);
        std::vector<std::vector<char>> skipped(n_bugs);
        parallel_for(n_bugs, options.threads, [&](std::size_t b) {
            const auto& loaded = data.bugs[b];
            std::unique_ptr<Ranker> ranker;
            if (technique == "rvsm") {
                ranker = std::make_unique<RvsmRanker>(loaded.app->index);
            } else if (technique == "tfidf") {
                ranker = std::make_unique<TfidfRanker>(loaded.app->index);
            } else {
                ranker = std::make_unique<EmbeddingRanker>(*loaded.store,
                                                           indexed_paths(loaded.app->index));
            }
            BugEvaluator evaluator(*ranker, *loaded.app->mapper, loaded.bug);
            ranks[b].push_back(first_rank(evaluator.baseline(), loaded.bug.truth));
            skipped[b].push_back(0);
            for (const auto& cfg : configs) {
                const auto outcome = evaluator.evaluate(cfg);
                ranks[b].push_back(first_rank(outcome.ranking, loaded.bug.truth));
                skipped[b].push_back(outcome.filter_skipped ? 1 : 0);
            }
        });

        for (std::size_t c = 0; c <= configs.size(); ++c) {
            RunRecord run;
            run.technique = technique;
            run.config = c == 0 ? kBaselineConfig : configs[c - 1].to_string();
            for (std::size_t b = 0; b < n_bugs; ++b) {
                const auto& id = data.bugs[b].bug.bug_id;
                run.first_ranks[id] = ranks[b][c];
                if (skipped[b][c]) {
                    run.filter_skipped.push_back(id);
                }
            }
            std::sort(run.filter_skipped.begin(), run.filter_skipped.end());
            report.runs.push_back(std::move(run));
        }
        log << "evaluated " << technique << ": " << n_bugs << " bugs x " << configs.size() + 1
            << " runs\n";
    }
    return report;
}

int cmd_run(const RunOptions& options, std::ostream& log) {
    const auto report = execute_run(options, log);
    ensure_dir(options.out_dir);
    write_file(options.out_dir / "report.csv", render_csv(report));
    write_file(options.out_dir / "report.json", to_json(report).dump(1) + "\n");
    log << "wrote " << (options.out_dir / "report.csv").string() << " and report.json\n";
    return kExitOk;
}

int cmd_queries(const fs::path& manifest_file, const fs::path& out_file, std::ostream& log) {
    const auto manifest = load_manifest(manifest_file);
    const auto data = detail::load_dataset(manifest, std::nullopt, false, log);
    std::string out;
    for (const auto& loaded : data.bugs) {
        for (const auto& [id, tokens] : grid_queries(loaded.bug)) {
            std::string text;
            for (const auto& t : tokens) {
                text += (text.empty() ? "" : " ") + t;
            }
            out += json{{"path", std::string(kQueryPrefix) + id},
                        {"bug_id", loaded.bug.bug_id},
                        {"text", text}}
                       .dump() +
                   "\n";
        }
    }
    if (out_file.has_parent_path()) {
        ensure_dir(out_file.parent_path());
    }
    write_file(out_file, out);
    log << "wrote queries for " << data.bugs.size() << " bugs to " << out_file.string() << '\n';
    return kExitOk;
}

}  // namespace guibl::app
