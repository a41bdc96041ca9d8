#include "guibl/scenario.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <regex>
#include <sstream>

#include <boost/property_tree/ptree.hpp>
#include <boost/property_tree/xml_parser.hpp>

#include "guibl/error.hpp"

namespace guibl {

namespace fs = std::filesystem;
namespace pt = boost::property_tree;

std::string_view to_string(ActionKind kind) noexcept {
    switch (kind) {
        case ActionKind::tap: return "tap";
        case ActionKind::long_touch: return "long_touch";
        case ActionKind::swipe: return "swipe";
        case ActionKind::type_text: return "type_text";
        case ActionKind::back: return "back";
    }
    return "tap";
}

std::optional<ActionKind> parse_action_kind(std::string_view text) noexcept {
    for (auto kind : {ActionKind::tap, ActionKind::long_touch, ActionKind::swipe,
                      ActionKind::type_text, ActionKind::back}) {
        if (to_string(kind) == text) {
            return kind;
        }
    }
    return std::nullopt;
}

std::string_view to_string(GuiInfoType info) noexcept {
    switch (info) {
        case GuiInfoType::GS: return "GS";
        case GuiInfoType::EGC: return "EGC";
        case GuiInfoType::GS_EGC: return "GS_EGC";
        case GuiInfoType::SC: return "SC";
        case GuiInfoType::GS_SC: return "GS_SC";
    }
    return "GS";
}

std::optional<GuiInfoType> parse_gui_info_type(std::string_view text) noexcept {
    for (auto info : kAllGuiInfoTypes) {
        if (to_string(info) == text) {
            return info;
        }
    }
    return std::nullopt;
}

bool uses_screens(GuiInfoType info) noexcept {
    return info == GuiInfoType::GS || info == GuiInfoType::GS_EGC || info == GuiInfoType::GS_SC;
}

bool uses_exercised_components(GuiInfoType info) noexcept {
    return info == GuiInfoType::EGC || info == GuiInfoType::GS_EGC;
}

bool uses_screen_components(GuiInfoType info) noexcept {
    return info == GuiInfoType::SC || info == GuiInfoType::GS_SC;
}

std::optional<std::string> normalize_resource_id(std::string_view raw) {
    if (const auto pos = raw.find(":id/"); pos != std::string_view::npos) {
        raw = raw.substr(pos + 4);
    } else if (raw.substr(0, 3) == "id/") {
        raw = raw.substr(3);
    }
    if (raw.empty()) {
        return std::nullopt;
    }
    return std::string(raw);
}

std::string simple_class_name(std::string_view raw) {
    if (const auto slash = raw.rfind('/'); slash != std::string_view::npos) {
        raw = raw.substr(slash + 1);
    }
    if (const auto dot = raw.rfind('.'); dot != std::string_view::npos) {
        raw = raw.substr(dot + 1);
    }
    return std::string(raw);
}

namespace {

std::string trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string_view::npos) {
        return {};
    }
    const auto e = s.find_last_not_of(" \t\r\n");
    return std::string(s.substr(b, e - b + 1));
}

Bounds parse_bounds(const std::string& text) {
    static const std::regex kBounds(R"(\[(-?\d+),(-?\d+)\]\[(-?\d+),(-?\d+)\])");
    std::smatch m;
    if (!std::regex_match(text, m, kBounds)) {
        throw ValidationError("malformed bounds attribute '" + text + "'");
    }
    return {std::stoi(m[1]), std::stoi(m[2]), std::stoi(m[3]), std::stoi(m[4])};
}

void collect_nodes(const pt::ptree& tree, std::vector<ComponentMeta>& out) {
    for (const auto& [name, child] : tree) {
        if (name != "node") {
            continue;
        }
        ComponentMeta meta;
        if (auto attrs = child.get_child_optional("<xmlattr>")) {
            meta.resource_id = normalize_resource_id(attrs->get<std::string>("resource-id", ""));
            meta.class_name = attrs->get<std::string>("class", "");
            meta.interactive = attrs->get<std::string>("clickable", "false") == "true" ||
                               attrs->get<std::string>("long-clickable", "false") == "true" ||
                               attrs->get<std::string>("scrollable", "false") == "true";
            meta.bounds = parse_bounds(attrs->get<std::string>("bounds", "[0,0][0,0]"));
        }
        out.push_back(std::move(meta));
        collect_nodes(child, out);
    }
}

std::string read_file(const fs::path& file, const std::string& what) {
    std::ifstream in(file, std::ios::binary);
    if (!in) {
        throw ValidationError("missing " + what + ": " + file.string());
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::optional<std::size_t> parse_index(std::string_view text) {
    std::size_t value = 0;
    const auto* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc{} || ptr != end || text.empty()) {
        return std::nullopt;
    }
    return value;
}

}  // namespace

std::vector<ComponentMeta> parse_hierarchy(std::string_view xml) {
    pt::ptree tree;
    std::istringstream in{std::string(xml)};
    try {
        pt::read_xml(in, tree);
    } catch (const pt::xml_parser_error& e) {
        throw ValidationError(std::string("malformed uiautomator dump: ") + e.what());
    }
    std::vector<ComponentMeta> raw;
    for (const auto& [name, root] : tree) {
        if (name == "hierarchy" || name == "node") {
            if (name == "node") {
                pt::ptree wrapper;
                wrapper.add_child("node", root);
                collect_nodes(wrapper, raw);
            } else {
                collect_nodes(root, raw);
            }
        }
    }
    std::vector<ComponentMeta> out;
    for (auto& c : raw) {
        const bool seen = std::any_of(out.begin(), out.end(), [&](const ComponentMeta& o) {
            return o.resource_id == c.resource_id && o.bounds == c.bounds;
        });
        if (!seen) {
            out.push_back(std::move(c));
        }
    }
    return out;
}

ReproductionScenario parse_scenario(const fs::path& dir, std::string bug_id) {
    if (!fs::is_directory(dir)) {
        throw ValidationError("scenario directory not found: " + dir.string());
    }
    static const std::regex kStepFile(R"(step_(\d+)\.xml)");
    std::vector<std::size_t> steps;
    for (const auto& entry : fs::directory_iterator(dir)) {
        std::smatch m;
        const auto name = entry.path().filename().string();
        if (entry.is_regular_file() && std::regex_match(name, m, kStepFile)) {
            steps.push_back(*parse_index(m[1].str()));
        }
    }
    if (steps.empty()) {
        throw ValidationError("scenario has no step_<i>.xml files: " + dir.string());
    }
    std::sort(steps.begin(), steps.end());
    if (std::adjacent_find(steps.begin(), steps.end()) != steps.end()) {
        throw ValidationError("scenario has duplicate step numbers: " + dir.string());
    }

    ReproductionScenario scenario;
    scenario.bug_id = std::move(bug_id);
    std::map<std::size_t, std::size_t> position;  // step index -> screens slot
    for (auto step : steps) {
        const auto label = "step " + std::to_string(step);
        const auto stem = "step_" + std::to_string(step);
        ScreenObservation screen;
        screen.step_index = step;
        try {
            screen.components = parse_hierarchy(read_file(dir / (stem + ".xml"), label + " dump"));
        } catch (const ValidationError& e) {
            throw ValidationError(label + ": " + e.what());
        }
        std::istringstream meta(read_file(dir / (stem + ".meta"), label + " meta record"));
        std::string activity_line;
        std::string window_line;
        std::getline(meta, activity_line);
        std::getline(meta, window_line);
        activity_line = trim(activity_line);
        window_line = trim(window_line);
        if (activity_line.empty()) {
            throw ValidationError(label + ": meta record has no activity name");
        }
        screen.activity = simple_class_name(activity_line);
        if (!window_line.empty() && window_line != "-") {
            std::istringstream names(window_line);
            std::string name;
            while (std::getline(names, name, ',')) {
                name = trim(name);
                if (!name.empty() && name != "-") {
                    screen.windows.push_back(simple_class_name(name));
                }
            }
        }
        position[step] = scenario.screens.size();
        scenario.screens.push_back(std::move(screen));
    }

    std::istringstream log(read_file(dir / "actions.log", "action log"));
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(log, line)) {
        ++line_no;
        line = trim(line);
        if (line.empty() || line[0] == '#') {
            continue;
        }
        const auto where = "actions.log line " + std::to_string(line_no);
        std::istringstream fields(line);
        std::string step_text, action_text, id_text, extra;
        if (!(fields >> step_text >> action_text >> id_text) || (fields >> extra)) {
            throw ValidationError(where + ": expected '<step> <action> <resource_id|->'");
        }
        const auto step = parse_index(step_text);
        if (!step || position.count(*step) == 0) {
            throw ValidationError(where + ": unknown step '" + step_text + "'");
        }
        const auto action = parse_action_kind(action_text);
        if (!action) {
            throw ValidationError(where + ": unknown action '" + action_text + "'");
        }
        auto& screen = scenario.screens[position[*step]];
        if (screen.exercised) {
            throw ValidationError(where + ": step " + step_text + " already has an action");
        }
        ExercisedAction exercised{*action, std::nullopt};
        if (id_text != "-") {
            if (*action == ActionKind::back) {
                throw ValidationError(where + ": back action cannot carry a resource id");
            }
            exercised.resource_id = normalize_resource_id(id_text);
            const bool on_screen =
                std::any_of(screen.components.begin(), screen.components.end(),
                            [&](const ComponentMeta& c) { return c.resource_id == exercised.resource_id; });
            if (!on_screen) {
                throw ValidationError(where + ": resource id '" + id_text +
                                      "' is not on the screen of step " + step_text);
            }
        }
        screen.exercised = std::move(exercised);
    }
    return scenario;
}

std::vector<ScreenObservation> select_screens(const ReproductionScenario& scenario,
                                              std::size_t n) {
    if (n < 2) {
        throw std::invalid_argument("select_screens: n must be at least 2");
    }
    const auto k = std::min(n, scenario.screens.size());
    return {scenario.screens.end() - static_cast<std::ptrdiff_t>(k), scenario.screens.end()};
}

GuiTermSet extract_terms(const std::vector<ScreenObservation>& screens, GuiInfoType info) {
    GuiTermSet terms;
    for (const auto& screen : screens) {
        if (uses_screens(info)) {
            if (!screen.activity.empty()) {
                terms.screen_terms.insert(screen.activity);
            }
            terms.screen_terms.insert(screen.windows.begin(), screen.windows.end());
        }
        const bool exercised_id = screen.exercised && screen.exercised->action != ActionKind::back &&
                                  screen.exercised->resource_id.has_value();
        if (uses_exercised_components(info) && exercised_id) {
            terms.component_ids.insert(*screen.exercised->resource_id);
        }
        if (uses_screen_components(info)) {
            for (const auto& c : screen.components) {
                if (c.interactive && c.resource_id) {
                    terms.component_ids.insert(*c.resource_id);
                }
            }
            // An exercised component supports interaction even when its node
            // carries no interaction flag (e.g. a click handled by a parent).
            if (exercised_id) {
                terms.component_ids.insert(*screen.exercised->resource_id);
            }
        }
    }
    return terms;
}

}  // namespace guibl
