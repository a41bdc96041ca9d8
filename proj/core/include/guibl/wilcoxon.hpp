#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "guibl/metrics.hpp"

namespace guibl {

enum class Alternative {
    two_sided,
    greater,  // base - aug tends to be positive (augmented ranks are better)
    less,
};

struct WilcoxonResult {
    double w_plus = 0.0;     // rank sum of positive differences (base - aug)
    double w_minus = 0.0;    // rank sum of negative differences
    double statistic = 0.0;  // min(W+, W-) for two-sided, W+ otherwise
    double p_value = 1.0;
    std::size_t n_used = 0;  // non-zero differences
    bool exact = true;
};

// Paired Wilcoxon signed-rank test on base[i] - aug[i]. Zero differences are
// dropped and tied magnitudes share their average rank. The null
// distribution is enumerated exactly for n_used <= exact_limit; above it a
// normal approximation with tie and continuity correction is used. All-zero
// differences give W = 0, p = 1.
WilcoxonResult wilcoxon_signed_rank(std::span<const double> base, std::span<const double> aug,
                                    Alternative alternative = Alternative::two_sided,
                                    std::size_t exact_limit = 25);

// First ranks as numbers with "not ranked" mapped to corpus_size + 1, in
// bug-id order. Throws ValidationError when a bug lacks a corpus size.
std::vector<double> ranks_with_sentinel(const FirstRanks& ranks,
                                        const std::map<std::string, std::size_t>& corpus_sizes);

}  // namespace guibl
