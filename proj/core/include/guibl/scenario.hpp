#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace guibl {

struct Bounds {
    int left = 0;
    int top = 0;
    int right = 0;
    int bottom = 0;

    auto operator<=>(const Bounds&) const = default;
};

struct ComponentMeta {
    std::optional<std::string> resource_id;  // package prefix stripped
    std::string class_name;
    bool interactive = false;  // clickable, long-clickable or scrollable
    Bounds bounds;
};

enum class ActionKind { tap, long_touch, swipe, type_text, back };

std::string_view to_string(ActionKind kind) noexcept;
std::optional<ActionKind> parse_action_kind(std::string_view text) noexcept;

struct ExercisedAction {
    ActionKind action = ActionKind::tap;
    std::optional<std::string> resource_id;  // never set for back
};

struct ScreenObservation {
    std::size_t step_index = 0;
    std::string activity;
    std::vector<std::string> windows;  // empty when no window was recorded
    std::vector<ComponentMeta> components;
    std::optional<ExercisedAction> exercised;
};

// Ordered screens of a reproduction; the last one shows the bug.
struct ReproductionScenario {
    std::string bug_id;
    std::vector<ScreenObservation> screens;
};

// The five GUI information combinations, ordered by how many files they
// tend to map to.
enum class GuiInfoType { GS, EGC, GS_EGC, SC, GS_SC };

inline constexpr GuiInfoType kAllGuiInfoTypes[] = {GuiInfoType::GS, GuiInfoType::EGC,
                                                   GuiInfoType::GS_EGC, GuiInfoType::SC,
                                                   GuiInfoType::GS_SC};

std::string_view to_string(GuiInfoType info) noexcept;
std::optional<GuiInfoType> parse_gui_info_type(std::string_view text) noexcept;

bool uses_screens(GuiInfoType info) noexcept;
bool uses_exercised_components(GuiInfoType info) noexcept;
bool uses_screen_components(GuiInfoType info) noexcept;

struct GuiTermSet {
    std::set<std::string> screen_terms;   // Activity / Window class names
    std::set<std::string> component_ids;  // resource ids

    bool operator==(const GuiTermSet&) const = default;
};

// "com.app:id/fab" -> "fab". Returns nullopt for empty ids.
std::optional<std::string> normalize_resource_id(std::string_view raw);

// "com.app/com.app.ui.MainActivity" -> "MainActivity"; "$" suffixes kept.
std::string simple_class_name(std::string_view raw);

// Parses one uiautomator hierarchy dump. Components are flattened in
// document order and de-duplicated on (resource_id, bounds).
std::vector<ComponentMeta> parse_hierarchy(std::string_view xml);

// Reads step_<i>.xml / step_<i>.meta / actions.log from dir. Throws
// ValidationError naming the offending step or line on malformed input.
ReproductionScenario parse_scenario(const std::filesystem::path& dir, std::string bug_id = {});

// The last min(n, size) screens. Requires n >= 2.
std::vector<ScreenObservation> select_screens(const ReproductionScenario& scenario,
                                              std::size_t n);

GuiTermSet extract_terms(const std::vector<ScreenObservation>& screens, GuiInfoType info);

}  // namespace guibl
