#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include "facediv/errors.hpp"

namespace facediv {

/// Binned distribution of one feature dimension.
struct Histogram {
    std::vector<double> edges;          // B+1 ascending boundaries
    std::vector<std::uint64_t> counts;  // B bins
    std::vector<double> probabilities;  // counts / total

    std::size_t bins() const { return counts.size(); }
    std::uint64_t total() const;
};

/// Equal-width bins over [min, max] of the data, top edge inclusive.
/// Constant input collapses to a single occupied bin out of `bins`.
struct EqualWidth {
    int bins = 6;
};

/// Explicit ascending edges (e.g. the seven age groups); values are
/// clamped into the end bins.
struct FixedEdges {
    std::vector<double> edges;
};

using BinPolicy = std::variant<EqualWidth, FixedEdges>;

/// Bins finite values under the policy. Throws EmptyInput when no finite
/// value is given.
Histogram bin_values(const std::vector<double>& values, const BinPolicy& policy);

struct DiversityScores {
    double shannon_h = 0.0;  // -sum p ln p
    double shannon_e = 0.0;  // H / ln S
    double simpson_d = 0.0;  // 1 / sum p^2
    double simpson_e = 0.0;  // D / S
    double mean = 0.0;       // of the raw values
    double variance = 0.0;   // population variance of the raw values
};

struct ScoreOptions {
    /// S = total bin count by default; set to count only occupied bins.
    bool occupied_bins_as_classes = false;
};

/// Diversity and evenness of a histogram plus mean/variance of the raw
/// values behind it. Zero-probability bins contribute nothing to either
/// sum (0 ln 0 := 0). S = 1 yields both evenness values 1.
DiversityScores diversity_scores(const Histogram& h, const std::vector<double>& raw_values,
                                 const ScoreOptions& opts = {});

}  // namespace facediv
