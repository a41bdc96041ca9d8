#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "guibl/scenario.hpp"

namespace guibl {

enum class Rerank { none, filter, boost, filter_boost };
enum class Reform { none, expand, replace };

std::string_view to_string(Rerank r) noexcept;
std::string_view to_string(Reform r) noexcept;

inline constexpr std::size_t kMinScreens = 2;
inline constexpr std::size_t kMaxScreens = 4;

// Filtering with one GUI information type followed by boosting with
// another is only meaningful when the boost type is the narrower one.
bool is_feasible_filter_boost(GuiInfoType filter, GuiInfoType boost) noexcept;

// One point of the augmentation grid.
//
// Canonical text form: s<k>/<rerank>[:<filter>][+<boost>]/<reform>[:<info>]
// with rerank in {none, f, b, fb} and reform in {none, expand, replace}, e.g.
//   s4/fb:SC+GS/none    s2/f:GS_SC/expand:EGC    s3/b+GS/none    s2/none/replace:SC
struct Configuration {
    std::size_t n_screens = kMinScreens;
    Rerank rerank = Rerank::none;
    std::optional<GuiInfoType> filter_info;
    std::optional<GuiInfoType> boost_info;
    Reform reform = Reform::none;
    std::optional<GuiInfoType> reform_info;

    // Throws ValidationError describing the first violated rule.
    void validate() const;
    bool is_valid() const noexcept;

    std::string to_string() const;

    // Parses and validates the canonical form.
    static Configuration parse(std::string_view text);

    auto operator<=>(const Configuration&) const = default;
};

enum class ConfigFamily { filtering, boosting, filter_boost, reformulation };

std::string_view to_string(ConfigFamily f) noexcept;
ConfigFamily family_of(const Configuration& cfg) noexcept;

// The full grid: 165 filtering, 165 boosting, 297 filter+boost and 30
// reformulation-only configurations (657 total), in a fixed order.
std::vector<Configuration> enumerate_configs();

}  // namespace guibl
