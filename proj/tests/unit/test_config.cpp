#include <gtest/gtest.h>

#include <map>
#include <set>

#include "guibl/config.hpp"
#include "guibl/error.hpp"

using namespace guibl;
using G = GuiInfoType;

namespace {

Configuration make(std::size_t n, Rerank r, std::optional<G> f, std::optional<G> b, Reform m,
                   std::optional<G> mi) {
    Configuration c;
    c.n_screens = n;
    c.rerank = r;
    c.filter_info = f;
    c.boost_info = b;
    c.reform = m;
    c.reform_info = mi;
    return c;
}

}  // namespace

TEST(Grid, TotalAndFamilySubtotals) {
    const auto grid = enumerate_configs();
    EXPECT_EQ(grid.size(), 657u);
    std::map<std::pair<ConfigFamily, Reform>, int> counts;
    for (const auto& c : grid) {
        ++counts[{family_of(c), c.reform}];
    }
    EXPECT_EQ((counts[{ConfigFamily::filtering, Reform::none}]), 15);
    EXPECT_EQ((counts[{ConfigFamily::filtering, Reform::expand}]), 75);
    EXPECT_EQ((counts[{ConfigFamily::filtering, Reform::replace}]), 75);
    EXPECT_EQ((counts[{ConfigFamily::boosting, Reform::none}]), 15);
    EXPECT_EQ((counts[{ConfigFamily::boosting, Reform::expand}]), 75);
    EXPECT_EQ((counts[{ConfigFamily::boosting, Reform::replace}]), 75);
    EXPECT_EQ((counts[{ConfigFamily::filter_boost, Reform::none}]), 27);
    EXPECT_EQ((counts[{ConfigFamily::filter_boost, Reform::expand}]), 135);
    EXPECT_EQ((counts[{ConfigFamily::filter_boost, Reform::replace}]), 135);
    EXPECT_EQ((counts[{ConfigFamily::reformulation, Reform::none}]), 0);
    EXPECT_EQ((counts[{ConfigFamily::reformulation, Reform::expand}]), 15);
    EXPECT_EQ((counts[{ConfigFamily::reformulation, Reform::replace}]), 15);
}

TEST(Grid, DuplicateFreeValidAndDeterministic) {
    const auto grid = enumerate_configs();
    std::set<std::string> seen;
    for (const auto& c : grid) {
        EXPECT_TRUE(c.is_valid()) << c.to_string();
        EXPECT_TRUE(seen.insert(c.to_string()).second) << c.to_string();
        EXPECT_EQ(Configuration::parse(c.to_string()), c);
    }
    EXPECT_EQ(grid, enumerate_configs());
}

TEST(Feasibility, NineCellsOfTwentyFive) {
    const std::set<std::pair<G, G>> allowed{
        {G::GS_EGC, G::GS}, {G::GS_EGC, G::EGC}, {G::SC, G::GS},       {G::SC, G::EGC},
        {G::SC, G::GS_EGC}, {G::GS_SC, G::GS},   {G::GS_SC, G::EGC},   {G::GS_SC, G::GS_EGC},
        {G::GS_SC, G::SC}};
    int feasible = 0, rejected = 0;
    for (auto f : kAllGuiInfoTypes) {
        for (auto b : kAllGuiInfoTypes) {
            const bool expect = allowed.count({f, b}) != 0;
            EXPECT_EQ(is_feasible_filter_boost(f, b), expect);
            const auto cfg = make(2, Rerank::filter_boost, f, b, Reform::none, std::nullopt);
            EXPECT_EQ(cfg.is_valid(), expect) << cfg.to_string();
            (expect ? feasible : rejected) += 1;
        }
    }
    EXPECT_EQ(feasible, 9);
    EXPECT_EQ(rejected, 16);
}

TEST(Configuration, CanonicalStrings) {
    EXPECT_EQ(make(4, Rerank::filter_boost, G::SC, G::GS, Reform::none, std::nullopt).to_string(),
              "s4/fb:SC+GS/none");
    EXPECT_EQ(make(2, Rerank::filter, G::GS_SC, std::nullopt, Reform::expand, G::EGC).to_string(),
              "s2/f:GS_SC/expand:EGC");
    EXPECT_EQ(make(3, Rerank::boost, std::nullopt, G::GS, Reform::none, std::nullopt).to_string(),
              "s3/b+GS/none");
    EXPECT_EQ(make(2, Rerank::none, std::nullopt, std::nullopt, Reform::replace, G::SC).to_string(),
              "s2/none/replace:SC");
}

TEST(Configuration, ParseRejectsInvalid) {
    for (const char* bad : {"s4/none/none", "s1/f:GS/none", "s5/f:GS/none", "s4/fb:GS+SC/none",
                            "s4/f/none", "s4/b:GS/none", "s4/f:GS+GS/none", "s4/f:XX/none",
                            "s4/f:GS/expand", "s4/f:GS/none:GS", "s4/f:GS", "4/f:GS/none",
                            "s4/x:GS/none", "s04/f:GS/none", "s4/f:GS/none/", "", "s+4/f:GS/none"}) {
        EXPECT_THROW(Configuration::parse(bad), ValidationError) << bad;
    }
}

TEST(Configuration, ValidateRules) {
    EXPECT_THROW(make(2, Rerank::none, std::nullopt, std::nullopt, Reform::none, std::nullopt).validate(),
                 ValidationError);
    EXPECT_THROW(make(2, Rerank::none, G::GS, std::nullopt, Reform::expand, G::GS).validate(),
                 ValidationError);
    EXPECT_NO_THROW(make(4, Rerank::filter_boost, G::GS_SC, G::SC, Reform::replace, G::GS).validate());
}
