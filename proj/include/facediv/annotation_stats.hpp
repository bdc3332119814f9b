#pragma once

#include <optional>
#include <string>
#include <vector>

#include "facediv/errors.hpp"

namespace facediv {

enum class GenderLabel : int { male = 0, female = 1 };

/// The seven age groups used for subjective labeling, in order:
/// [0-3], [4-12], [13-19], [20-30], [31-45], [46-60], [61-].
inline constexpr int kAgeGroupCount = 7;

/// Lower edges of the seven age groups; group i covers
/// [kAgeGroupLower[i], kAgeGroupLower[i+1]).
inline constexpr double kAgeGroupLower[kAgeGroupCount + 1] = {0, 4, 13, 20, 31, 46, 61, 200};

/// Age group index for a continuous age in years.
int age_group_of(double years);

struct Vote {
    std::string annotator_id;
    GenderLabel gender = GenderLabel::male;
    int age_group = 0;       // 0..6
    double age_value = 0.0;  // years
    double weight = 1.0;     // [0,1], calibrated upstream
};

/// Per-face inputs produced outside this library and ingested via the
/// manifest: model softmax outputs and crowd votes.
struct AuxAnnotations {
    std::optional<std::vector<double>> age_softmax;  // 101 probabilities, years 0..100
    std::optional<double> gender_score;              // [0,1]
    std::optional<std::vector<Vote>> votes;
};

struct AggregatedAnnotations {
    std::optional<double> age_pred;      // expected age from softmax
    std::optional<double> gender_pred;   // passthrough score
    std::optional<double> age_years;     // weighted mean of annotator ages
    std::optional<int> age_group;        // weighted-vote winner, 0..6
    std::optional<GenderLabel> gender_label;
    bool gender_tie = false;
    bool age_group_tie = false;
};

/// Softmax expectation over years 0..100. Requires a 101-vector of
/// non-negative probabilities summing to 1 within 1e-3; throws
/// InvalidDistribution otherwise.
double expected_age(const std::vector<double>& softmax);

struct VoteResult {
    GenderLabel gender = GenderLabel::male;
    int age_group = 0;
    double age_years = 0.0;
    bool gender_tie = false;
    bool age_group_tie = false;
};

/// Weighted-vote aggregation. Winner per label = argmax of summed weights;
/// ties break toward the first label in declaration order (male first,
/// lowest age group first) and are flagged. Age years = weight-weighted
/// mean of annotator age values (plain mean when all weights are zero).
/// Throws NoVotes on an empty list.
VoteResult weighted_vote(const std::vector<Vote>& votes);

/// Full reduction of the optional annotation inputs; absent inputs stay
/// absent in the output rather than raising.
AggregatedAnnotations aggregate_annotations(const AuxAnnotations& aux);

}  // namespace facediv
