#include "facediv/annotation_stats.hpp"

#include <array>
#include <cmath>

namespace facediv {

int age_group_of(double years) {
    for (int g = kAgeGroupCount - 1; g >= 1; --g) {
        if (years >= kAgeGroupLower[g]) return g;
    }
    return 0;
}

double expected_age(const std::vector<double>& softmax) {
    if (softmax.size() != 101) {
        throw InvalidDistribution("age softmax must have 101 entries, got " +
                                  std::to_string(softmax.size()));
    }
    double sum = 0.0;
    double expectation = 0.0;
    for (std::size_t i = 0; i < softmax.size(); ++i) {
        const double p = softmax[i];
        if (!(p >= 0.0) || !std::isfinite(p)) {
            throw InvalidDistribution("age softmax has a negative or non-finite entry");
        }
        sum += p;
        expectation += p * static_cast<double>(i);
    }
    if (std::abs(sum - 1.0) > 1e-3) {
        throw InvalidDistribution("age softmax sums to " + std::to_string(sum));
    }
    return expectation;
}

VoteResult weighted_vote(const std::vector<Vote>& votes) {
    if (votes.empty()) {
        throw NoVotes("no votes to aggregate");
    }

    std::array<double, 2> gender_w{0.0, 0.0};
    std::array<double, kAgeGroupCount> group_w{};
    double weight_sum = 0.0;
    double weighted_age = 0.0;
    for (const auto& v : votes) {
        gender_w[static_cast<int>(v.gender)] += v.weight;
        if (v.age_group >= 0 && v.age_group < kAgeGroupCount) {
            group_w[v.age_group] += v.weight;
        }
        weight_sum += v.weight;
        weighted_age += v.weight * v.age_value;
    }

    VoteResult r;
    // Fixed tie order: male before female, lower age group first.
    r.gender = gender_w[0] >= gender_w[1] ? GenderLabel::male : GenderLabel::female;
    r.gender_tie = gender_w[0] == gender_w[1];
    int best = 0;
    for (int g = 1; g < kAgeGroupCount; ++g) {
        if (group_w[g] > group_w[best]) best = g;
    }
    r.age_group = best;
    for (int g = 0; g < kAgeGroupCount; ++g) {
        if (g != best && group_w[g] == group_w[best]) {
            r.age_group_tie = true;
            break;
        }
    }
    if (weight_sum > 0.0) {
        r.age_years = weighted_age / weight_sum;
    } else {
        double plain = 0.0;
        for (const auto& v : votes) plain += v.age_value;
        r.age_years = plain / static_cast<double>(votes.size());
    }
    return r;
}

AggregatedAnnotations aggregate_annotations(const AuxAnnotations& aux) {
    AggregatedAnnotations out;
    if (aux.age_softmax) {
        out.age_pred = expected_age(*aux.age_softmax);
    }
    if (aux.gender_score) {
        out.gender_pred = *aux.gender_score;
    }
    if (aux.votes && !aux.votes->empty()) {
        const VoteResult v = weighted_vote(*aux.votes);
        out.age_years = v.age_years;
        out.age_group = v.age_group;
        out.gender_label = v.gender;
        out.gender_tie = v.gender_tie;
        out.age_group_tie = v.age_group_tie;
    }
    return out;
}

}  // namespace facediv
