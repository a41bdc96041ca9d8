#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <sstream>

#include "guibl/embeddings.hpp"
#include "guibl/error.hpp"
#include "test_support.hpp"

using namespace guibl;

namespace {

EmbeddingStore::Vector unit(std::vector<double> v) {
    double n = 0;
    for (double x : v) {
        n += x * x;
    }
    n = std::sqrt(n);
    for (double& x : v) {
        x /= n;
    }
    return v;
}

// Unit vector at the given cosine to e0 in the (e0, e1) plane.
EmbeddingStore::Vector at_cosine(double c) { return {c, std::sqrt(1 - c * c), 0.0}; }

}  // namespace

TEST(Embeddings, IdenticalSegmentScoresOne) {
    EmbeddingStore store(3);
    store.add("query:b1", 0, {1, 0, 0});
    store.add("A.java", 0, {1, 0, 0});
    store.add("B.java", 0, {0, 1, 0});
    const auto ranked = rank_embeddings(store, "b1");
    EXPECT_EQ(ranked.entries[0].path, "A.java");
    EXPECT_DOUBLE_EQ(ranked.entries[0].score, 1.0);
}

TEST(Embeddings, MaxOverSegments) {
    EmbeddingStore store(3);
    store.add("query:b1", 0, {1, 0, 0});
    store.add("A.java", 0, at_cosine(0.2));
    store.add("A.java", 1, at_cosine(0.9));
    store.add("A.java", 2, at_cosine(0.4));
    const auto ranked = rank_embeddings(store, "b1");
    EXPECT_NEAR(ranked.entries[0].score, 0.9, 1e-12);
}

TEST(Embeddings, RandomStoreMatchesPairwiseMaxOracle) {
    std::mt19937 rng(17);
    std::normal_distribution<double> gauss;
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t dim = 2 + rng() % 6;
        EmbeddingStore store(dim);
        auto random_unit = [&] {
            std::vector<double> v(dim);
            for (auto& x : v) {
                x = gauss(rng);
            }
            return unit(v);
        };
        std::vector<std::vector<double>> q;
        for (std::size_t s = 0, n = 1 + rng() % 3; s < n; ++s) {
            q.push_back(random_unit());
            store.add("query:b", s, q.back());
        }
        std::vector<std::pair<double, std::string>> expected;
        for (int d = 0; d < 5; ++d) {
            const auto path = "D" + std::to_string(d) + ".java";
            double best = -2;
            for (std::size_t s = 0, n = 1 + rng() % 3; s < n; ++s) {
                auto v = random_unit();
                for (const auto& qv : q) {
                    double dot = 0;
                    for (std::size_t i = 0; i < dim; ++i) {
                        dot += qv[i] * v[i];
                    }
                    best = std::max(best, dot);
                }
                store.add(path, s, v);
            }
            expected.emplace_back(-best, path);
        }
        std::sort(expected.begin(), expected.end());
        const auto ranked = rank_embeddings(store, "b");
        ASSERT_EQ(ranked.entries.size(), 5u);
        for (std::size_t i = 0; i < 5; ++i) {
            EXPECT_EQ(ranked.entries[i].path, expected[i].second);
            EXPECT_NEAR(ranked.entries[i].score, -expected[i].first, 1e-9);
        }
    }
}

TEST(Embeddings, ValidationOnAdd) {
    EmbeddingStore store(2);
    EXPECT_THROW(store.add("A.java", 0, {1, 0, 0}), ValidationError);
    EXPECT_THROW(store.add("A.java", 0, {1, 1}), ValidationError);
    store.add("A.java", 0, {1, 0});
    EXPECT_THROW(store.add("A.java", 0, {0, 1}), ValidationError);
    store.add("B.java", 1, {0, 1});
    EXPECT_THROW(store.document_segments("B.java"), ValidationError);  // gap at 0
}

TEST(Embeddings, DocumentMissingFromStoreIsAnError) {
    EmbeddingStore store(2);
    store.add("query:b", 0, {1, 0});
    store.add("A.java", 0, {1, 0});
    EXPECT_THROW(rank_embeddings(store, "b", {"A.java", "B.java"}), ValidationError);
    EXPECT_THROW(rank_embeddings(store, "missing"), ValidationError);
}

TEST(Embeddings, RankerRestrictsToListedDocuments) {
    EmbeddingStore store(2);
    store.add("query:b", 0, {1, 0});
    store.add("A.java", 0, {1, 0});
    store.add("B.java", 0, {0, 1});
    EmbeddingRanker ranker(store, {"B.java"});
    const auto ranked = ranker.rank({"b", {}});
    ASSERT_EQ(ranked.entries.size(), 1u);
    EXPECT_EQ(ranked.entries[0].path, "B.java");
}

TEST(EmbeddingFormat, RoundTrip) {
    EmbeddingStore store(3);
    store.add("query:b1", 0, unit({1, 2, 3}));
    store.add("A.java", 0, unit({0.1, 0.2, -0.3}));
    store.add("A.java", 1, unit({1, 0, 0}));
    std::stringstream buf;
    store.write(buf);
    const auto back = EmbeddingStore::read(buf);
    EXPECT_EQ(back.dim(), 3u);
    EXPECT_EQ(back.document_paths(), (std::vector<std::string>{"A.java"}));
    EXPECT_EQ(back.query_ids(), (std::vector<std::string>{"b1"}));
    EXPECT_EQ(back.document_segments("A.java"), store.document_segments("A.java"));
    EXPECT_EQ(back.query_segments("b1"), store.query_segments("b1"));
}

TEST(EmbeddingFormat, HandWrittenFile) {
    std::istringstream in(
        "{\"dim\": 2}\n"
        "{\"path\": \"A.java\", \"segment_index\": 1, \"vector\": [0.6, 0.8]}\n"
        "\n"
        "{\"path\": \"A.java\", \"segment_index\": 0, \"vector\": [1.0, 0.0]}\n"
        "{\"path\": \"query:bug-1\", \"segment_index\": 0, \"vector\": [0.0, 1.0]}\n");
    const auto store = EmbeddingStore::read(in);
    ASSERT_EQ(store.document_segments("A.java").size(), 2u);
    const auto ranked = rank_embeddings(store, "bug-1");
    EXPECT_NEAR(ranked.entries[0].score, 0.8, 1e-12);
}

TEST(EmbeddingFormat, MalformedInputs) {
    auto parse = [](const std::string& text) {
        std::istringstream in(text);
        return EmbeddingStore::read(in);
    };
    EXPECT_THROW(parse(""), ValidationError);
    EXPECT_THROW(parse("{\"dim\": 0}\n"), ValidationError);
    EXPECT_THROW(parse("not json\n"), ValidationError);
    EXPECT_THROW(parse("{\"dim\": 2}\n{\"path\": \"A\", \"vector\": [1, 0]}\n"), ValidationError);
    EXPECT_THROW(parse("{\"dim\": 2}\n{\"path\": \"A\", \"segment_index\": 0, \"vector\": [1]}\n"),
                 ValidationError);
    EXPECT_THROW(
        parse("{\"dim\": 2}\n{\"path\": \"A\", \"segment_index\": 0, \"vector\": [0.5, 0.5]}\n"),
        ValidationError);
}

TEST(EmbeddingFormat, FixtureStoreLoads) {
    const auto store =
        EmbeddingStore::load(guibl::testing::fixture_dir() / "embeddings/notes.jsonl");
    EXPECT_EQ(store.dim(), 8u);
    EXPECT_TRUE(store.has_query("notes-1"));
    EXPECT_TRUE(store.has_query("notes-2@replace:GS_SC:s4"));
    for (const auto& path : store.document_paths()) {
        for (const auto& v : store.document_segments(path)) {
            double n = 0;
            for (double x : v) {
                n += x * x;
            }
            EXPECT_NEAR(std::sqrt(n), 1.0, EmbeddingStore::kUnitNormTolerance);
        }
    }
}
