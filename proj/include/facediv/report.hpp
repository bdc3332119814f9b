#pragma once

#include <map>
#include <optional>
#include <string>

#include "facediv/diversity.hpp"
#include "facediv/features.hpp"

namespace facediv {

/// Binning configuration for the report. Built-in defaults: the seven age
/// groups for age dimensions, two classes for the gender label, three for
/// the signed pose, equal-width bins elsewhere.
struct BinConfig {
    int default_bins = 6;
    ScoreOptions score_options;
    std::map<std::string, BinPolicy> overrides;  // keyed by dimension id

    BinPolicy policy_for(Dim d) const;
    static BinConfig defaults();
};

struct ReportRow {
    Dim dim;
    std::optional<DiversityScores> scores;  // absent when no valid values
    Histogram histogram;                    // empty when no valid values
    std::size_t n_values = 0;
    std::size_t n_excluded = 0;
    std::string note;  // reason when scores are absent
};

struct DiversityReport {
    std::array<ReportRow, kDimCount> rows;
    std::size_t table_rows = 0;
};

/// One row per canonical dimension, invalid cells excluded per dimension.
/// Row order is fixed by the canonical dimension list. Throws EmptyTable
/// on an empty feature table.
DiversityReport build_report(const FeatureTable& table, const BinConfig& config = BinConfig::defaults());

/// CSV in the shape of the summary table: one row per dimension with
/// simpson_d, simpson_e, shannon_h, shannon_e, mean, variance columns.
std::string report_csv(const DiversityReport& report);

/// JSON form carrying full-precision scores, per-dimension histograms and
/// the provenance metadata blob passed in (may be empty).
std::string report_json(const DiversityReport& report, const std::string& config_json);

/// Bin edges + probabilities per dimension, for plotting.
std::string histograms_json(const DiversityReport& report);

}  // namespace facediv
