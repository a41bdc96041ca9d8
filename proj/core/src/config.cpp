#include "guibl/config.hpp"

#include <charconv>

#include "guibl/error.hpp"

namespace guibl {

std::string_view to_string(Rerank r) noexcept {
    switch (r) {
        case Rerank::none: return "none";
        case Rerank::filter: return "f";
        case Rerank::boost: return "b";
        case Rerank::filter_boost: return "fb";
    }
    return "none";
}

std::string_view to_string(Reform r) noexcept {
    switch (r) {
        case Reform::none: return "none";
        case Reform::expand: return "expand";
        case Reform::replace: return "replace";
    }
    return "none";
}

std::string_view to_string(ConfigFamily f) noexcept {
    switch (f) {
        case ConfigFamily::filtering: return "filtering";
        case ConfigFamily::boosting: return "boosting";
        case ConfigFamily::filter_boost: return "filter_boost";
        case ConfigFamily::reformulation: return "reformulation";
    }
    return "filtering";
}

bool is_feasible_filter_boost(GuiInfoType filter, GuiInfoType boost) noexcept {
    using G = GuiInfoType;
    switch (filter) {
        case G::GS_EGC: return boost == G::GS || boost == G::EGC;
        case G::SC: return boost == G::GS || boost == G::EGC || boost == G::GS_EGC;
        case G::GS_SC: return boost == G::GS || boost == G::EGC || boost == G::GS_EGC || boost == G::SC;
        case G::GS:
        case G::EGC: return false;
    }
    return false;
}

void Configuration::validate() const {
    if (n_screens < kMinScreens || n_screens > kMaxScreens) {
        throw ValidationError("screen count must be in [2,4], got " + std::to_string(n_screens));
    }
    switch (rerank) {
        case Rerank::none:
            if (filter_info || boost_info) {
                throw ValidationError("rerank=none must not carry filter/boost information");
            }
            break;
        case Rerank::filter:
            if (!filter_info || boost_info) {
                throw ValidationError("filtering requires exactly a filter information type");
            }
            break;
        case Rerank::boost:
            if (!boost_info || filter_info) {
                throw ValidationError("boosting requires exactly a boost information type");
            }
            break;
        case Rerank::filter_boost:
            if (!filter_info || !boost_info) {
                throw ValidationError("filtering+boosting requires both information types");
            }
            if (!is_feasible_filter_boost(*filter_info, *boost_info)) {
                throw ValidationError("infeasible filter/boost combination " +
                                      std::string(guibl::to_string(*filter_info)) + "+" +
                                      std::string(guibl::to_string(*boost_info)));
            }
            break;
    }
    if (reform == Reform::none && reform_info) {
        throw ValidationError("reform=none must not carry an information type");
    }
    if (reform != Reform::none && !reform_info) {
        throw ValidationError("query reformulation requires an information type");
    }
    if (rerank == Rerank::none && reform == Reform::none) {
        throw ValidationError("no augmentation selected (that is the baseline)");
    }
}

bool Configuration::is_valid() const noexcept {
    try {
        validate();
        return true;
    } catch (const ValidationError&) {
        return false;
    }
}

std::string Configuration::to_string() const {
    std::string out = "s" + std::to_string(n_screens) + "/";
    out += guibl::to_string(rerank);
    if (filter_info) {
        out += ":";
        out += guibl::to_string(*filter_info);
    }
    if (boost_info) {
        out += "+";
        out += guibl::to_string(*boost_info);
    }
    out += "/";
    out += guibl::to_string(reform);
    if (reform_info) {
        out += ":";
        out += guibl::to_string(*reform_info);
    }
    return out;
}

namespace {

GuiInfoType info_or_throw(std::string_view text, std::string_view whole) {
    if (auto info = parse_gui_info_type(text)) {
        return *info;
    }
    throw ValidationError("unknown GUI information type '" + std::string(text) +
                          "' in configuration '" + std::string(whole) + "'");
}

}  // namespace

Configuration Configuration::parse(std::string_view text) {
    auto bad = [&](const std::string& why) {
        return ValidationError("malformed configuration '" + std::string(text) + "': " + why);
    };
    const auto first = text.find('/');
    const auto second = first == std::string_view::npos ? first : text.find('/', first + 1);
    if (second == std::string_view::npos || text.find('/', second + 1) != std::string_view::npos) {
        throw bad("expected three '/'-separated fields");
    }
    const auto screens = text.substr(0, first);
    auto rerank = text.substr(first + 1, second - first - 1);
    auto reform = text.substr(second + 1);

    Configuration cfg;
    if (screens.size() < 2 || screens[0] != 's') {
        throw bad("screen field must look like s<k>");
    }
    const auto digits = screens.substr(1);
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), cfg.n_screens);
    if (ec != std::errc{} || ptr != digits.data() + digits.size()) {
        throw bad("screen field must look like s<k>");
    }

    std::string_view boost;
    if (const auto plus = rerank.find('+'); plus != std::string_view::npos) {
        boost = rerank.substr(plus + 1);
        rerank = rerank.substr(0, plus);
        cfg.boost_info = info_or_throw(boost, text);
    }
    std::string_view filter;
    if (const auto colon = rerank.find(':'); colon != std::string_view::npos) {
        filter = rerank.substr(colon + 1);
        rerank = rerank.substr(0, colon);
        cfg.filter_info = info_or_throw(filter, text);
    }
    if (rerank == "none") {
        cfg.rerank = Rerank::none;
    } else if (rerank == "f") {
        cfg.rerank = Rerank::filter;
    } else if (rerank == "b") {
        cfg.rerank = Rerank::boost;
    } else if (rerank == "fb") {
        cfg.rerank = Rerank::filter_boost;
    } else {
        throw bad("unknown re-ranking method '" + std::string(rerank) + "'");
    }

    std::string_view reform_method = reform;
    if (const auto colon = reform.find(':'); colon != std::string_view::npos) {
        reform_method = reform.substr(0, colon);
        cfg.reform_info = info_or_throw(reform.substr(colon + 1), text);
    }
    if (reform_method == "none") {
        cfg.reform = Reform::none;
    } else if (reform_method == "expand") {
        cfg.reform = Reform::expand;
    } else if (reform_method == "replace") {
        cfg.reform = Reform::replace;
    } else {
        throw bad("unknown reformulation method '" + std::string(reform_method) + "'");
    }

    try {
        cfg.validate();
    } catch (const ValidationError& e) {
        throw bad(e.what());
    }
    if (cfg.to_string() != text) {
        throw bad("not in canonical form (expected '" + cfg.to_string() + "')");
    }
    return cfg;
}

ConfigFamily family_of(const Configuration& cfg) noexcept {
    switch (cfg.rerank) {
        case Rerank::filter: return ConfigFamily::filtering;
        case Rerank::boost: return ConfigFamily::boosting;
        case Rerank::filter_boost: return ConfigFamily::filter_boost;
        case Rerank::none: return ConfigFamily::reformulation;
    }
    return ConfigFamily::reformulation;
}

std::vector<Configuration> enumerate_configs() {
    struct ReformChoice {
        Reform method;
        std::optional<GuiInfoType> info;
    };
    std::vector<ReformChoice> reforms{{Reform::none, std::nullopt}};
    for (auto method : {Reform::expand, Reform::replace}) {
        for (auto info : kAllGuiInfoTypes) {
            reforms.push_back({method, info});
        }
    }

    struct RerankChoice {
        Rerank method;
        std::optional<GuiInfoType> filter;
        std::optional<GuiInfoType> boost;
    };
    std::vector<std::vector<RerankChoice>> families(4);
    for (auto info : kAllGuiInfoTypes) {
        families[0].push_back({Rerank::filter, info, std::nullopt});
        families[1].push_back({Rerank::boost, std::nullopt, info});
    }
    for (auto f : kAllGuiInfoTypes) {
        for (auto b : kAllGuiInfoTypes) {
            if (is_feasible_filter_boost(f, b)) {
                families[2].push_back({Rerank::filter_boost, f, b});
            }
        }
    }
    families[3].push_back({Rerank::none, std::nullopt, std::nullopt});

    std::vector<Configuration> out;
    for (const auto& family : families) {
        for (const auto& reform : reforms) {
            if (family.front().method == Rerank::none && reform.method == Reform::none) {
                continue;
            }
            for (const auto& rr : family) {
                for (std::size_t n = kMinScreens; n <= kMaxScreens; ++n) {
                    Configuration cfg;
                    cfg.n_screens = n;
                    cfg.rerank = rr.method;
                    cfg.filter_info = rr.filter;
                    cfg.boost_info = rr.boost;
                    cfg.reform = reform.method;
                    cfg.reform_info = reform.info;
                    out.push_back(cfg);
                }
            }
        }
    }
    return out;
}

}  // namespace guibl
