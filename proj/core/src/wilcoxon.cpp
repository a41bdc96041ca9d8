#include "guibl/wilcoxon.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "guibl/error.hpp"

namespace guibl {
namespace {

struct SignedRanks {
    std::vector<double> ranks;  // average ranks of |d|
    std::vector<bool> positive;
    double tie_term = 0.0;  // sum of t^3 - t over tie groups
};

SignedRanks rank_differences(const std::vector<double>& diffs) {
    std::vector<std::size_t> order(diffs.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return std::abs(diffs[a]) < std::abs(diffs[b]);
    });
    SignedRanks out;
    out.ranks.resize(diffs.size());
    out.positive.resize(diffs.size());
    std::size_t i = 0;
    while (i < order.size()) {
        std::size_t j = i;
        while (j + 1 < order.size() && std::abs(diffs[order[j + 1]]) == std::abs(diffs[order[i]])) {
            ++j;
        }
        const double avg = (static_cast<double>(i + 1) + static_cast<double>(j + 1)) / 2.0;
        for (std::size_t k = i; k <= j; ++k) {
            out.ranks[order[k]] = avg;
        }
        const auto t = static_cast<double>(j - i + 1);
        out.tie_term += t * t * t - t;
        i = j + 1;
    }
    for (std::size_t k = 0; k < diffs.size(); ++k) {
        out.positive[k] = diffs[k] > 0;
    }
    return out;
}

// Number of sign assignments for each attainable 2*W+ value.
std::vector<double> exact_null_counts(const std::vector<double>& ranks) {
    std::vector<long> doubled;
    long total = 0;
    for (double r : ranks) {
        doubled.push_back(std::lround(2.0 * r));
        total += doubled.back();
    }
    std::vector<double> counts(static_cast<std::size_t>(total) + 1, 0.0);
    counts[0] = 1.0;
    long reach = 0;
    for (long r : doubled) {
        for (long s = reach; s >= 0; --s) {
            counts[static_cast<std::size_t>(s + r)] += counts[static_cast<std::size_t>(s)];
        }
        reach += r;
    }
    return counts;
}

double normal_upper_tail(double z) { return 0.5 * std::erfc(z / std::sqrt(2.0)); }

}  // namespace

WilcoxonResult wilcoxon_signed_rank(std::span<const double> base, std::span<const double> aug,
                                    Alternative alternative, std::size_t exact_limit) {
    if (base.size() != aug.size()) {
        throw ValidationError("wilcoxon_signed_rank: samples differ in length");
    }
    if (base.empty()) {
        throw ValidationError("wilcoxon_signed_rank: samples are empty");
    }
    std::vector<double> diffs;
    for (std::size_t i = 0; i < base.size(); ++i) {
        const double d = base[i] - aug[i];
        if (d != 0.0) {
            diffs.push_back(d);
        }
    }
    WilcoxonResult result;
    result.n_used = diffs.size();
    if (diffs.empty()) {
        return result;
    }

    const auto signed_ranks = rank_differences(diffs);
    for (std::size_t i = 0; i < diffs.size(); ++i) {
        (signed_ranks.positive[i] ? result.w_plus : result.w_minus) += signed_ranks.ranks[i];
    }
    result.statistic = alternative == Alternative::two_sided ? std::min(result.w_plus, result.w_minus)
                                                             : result.w_plus;

    const auto n = static_cast<double>(diffs.size());
    if (diffs.size() <= exact_limit) {
        result.exact = true;
        const auto counts = exact_null_counts(signed_ranks.ranks);
        const double all = std::ldexp(1.0, static_cast<int>(diffs.size()));
        const auto observed = static_cast<std::size_t>(std::lround(2.0 * result.w_plus));
        double lower = 0.0;
        double upper = 0.0;
        for (std::size_t s = 0; s < counts.size(); ++s) {
            if (s <= observed) lower += counts[s];
            if (s >= observed) upper += counts[s];
        }
        lower /= all;
        upper /= all;
        switch (alternative) {
            case Alternative::two_sided: result.p_value = std::min(1.0, 2.0 * std::min(lower, upper)); break;
            case Alternative::greater: result.p_value = upper; break;
            case Alternative::less: result.p_value = lower; break;
        }
        return result;
    }

    result.exact = false;
    const double mean = n * (n + 1.0) / 4.0;
    const double var = n * (n + 1.0) * (2.0 * n + 1.0) / 24.0 - signed_ranks.tie_term / 48.0;
    if (var <= 0.0) {
        result.p_value = 1.0;
        return result;
    }
    const double sd = std::sqrt(var);
    const double delta = result.w_plus - mean;
    switch (alternative) {
        case Alternative::two_sided: {
            const double z = std::max(0.0, std::abs(delta) - 0.5) / sd;
            result.p_value = std::min(1.0, 2.0 * normal_upper_tail(z));
            break;
        }
        case Alternative::greater: result.p_value = normal_upper_tail((delta - 0.5) / sd); break;
        case Alternative::less: result.p_value = normal_upper_tail(-(delta + 0.5) / sd); break;
    }
    return result;
}

std::vector<double> ranks_with_sentinel(const FirstRanks& ranks,
                                        const std::map<std::string, std::size_t>& corpus_sizes) {
    std::vector<double> out;
    out.reserve(ranks.size());
    for (const auto& [bug, rank] : ranks) {
        auto it = corpus_sizes.find(bug);
        if (it == corpus_sizes.end()) {
            throw ValidationError("no corpus size recorded for bug '" + bug + "'");
        }
        out.push_back(static_cast<double>(rank.value_or(it->second + 1)));
    }
    return out;
}

}  // namespace guibl
