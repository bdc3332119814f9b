#include "facediv/diversity.hpp"

#include <algorithm>
#include <cmath>

namespace facediv {

std::uint64_t Histogram::total() const {
    std::uint64_t t = 0;
    for (auto c : counts) t += c;
    return t;
}

namespace {

std::vector<double> finite_only(const std::vector<double>& values) {
    std::vector<double> out;
    out.reserve(values.size());
    for (double v : values) {
        if (std::isfinite(v)) out.push_back(v);
    }
    return out;
}

Histogram bin_equal_width(const std::vector<double>& values, int bins) {
    Histogram h;
    h.counts.assign(bins, 0);
    auto [lo_it, hi_it] = std::minmax_element(values.begin(), values.end());
    const double lo = *lo_it;
    const double hi = *hi_it;

    h.edges.resize(bins + 1);
    if (hi > lo) {
        for (int i = 0; i <= bins; ++i) {
            h.edges[i] = lo + (hi - lo) * static_cast<double>(i) / bins;
        }
        h.edges[bins] = hi;  // guard against rounding drift
        const double width = (hi - lo) / bins;
        for (double v : values) {
            int idx = v >= hi ? bins - 1 : static_cast<int>(std::floor((v - lo) / width));
            idx = std::clamp(idx, 0, bins - 1);
            h.counts[idx] += 1;
        }
    } else {
        // Constant input: all mass in one bin, S stays the nominal count.
        for (int i = 0; i <= bins; ++i) {
            h.edges[i] = lo - 0.5 + static_cast<double>(i) / bins;
        }
        const int mid = bins / 2;
        h.counts[mid] = values.size();
    }
    return h;
}

Histogram bin_fixed(const std::vector<double>& values, const std::vector<double>& edges) {
    if (edges.size() < 2) {
        throw EmptyInput("fixed bin policy needs at least two edges");
    }
    for (std::size_t i = 1; i < edges.size(); ++i) {
        if (!(edges[i] > edges[i - 1])) {
            throw EmptyInput("fixed bin edges must be strictly ascending");
        }
    }
    Histogram h;
    h.edges = edges;
    const int bins = static_cast<int>(edges.size()) - 1;
    h.counts.assign(bins, 0);
    for (double v : values) {
        int idx = static_cast<int>(std::upper_bound(edges.begin(), edges.end(), v) -
                                   edges.begin()) - 1;
        idx = std::clamp(idx, 0, bins - 1);  // out-of-range values go to the end bins
        h.counts[idx] += 1;
    }
    return h;
}

}  // namespace

Histogram bin_values(const std::vector<double>& values, const BinPolicy& policy) {
    const std::vector<double> finite = finite_only(values);
    if (finite.empty()) {
        throw EmptyInput("no finite values to bin");
    }
    Histogram h = std::visit(
        [&](const auto& p) -> Histogram {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, EqualWidth>) {
                return bin_equal_width(finite, std::max(1, p.bins));
            } else {
                return bin_fixed(finite, p.edges);
            }
        },
        policy);

    const double total = static_cast<double>(finite.size());
    h.probabilities.resize(h.counts.size());
    for (std::size_t i = 0; i < h.counts.size(); ++i) {
        h.probabilities[i] = static_cast<double>(h.counts[i]) / total;
    }
    return h;
}

DiversityScores diversity_scores(const Histogram& h, const std::vector<double>& raw_values,
                                 const ScoreOptions& opts) {
    DiversityScores s;

    double entropy = 0.0;
    double p2 = 0.0;
    std::size_t occupied = 0;
    for (double p : h.probabilities) {
        if (p <= 0.0) continue;  // 0 ln 0 := 0; zero bins skipped in both sums
        entropy -= p * std::log(p);
        p2 += p * p;
        ++occupied;
    }
    s.shannon_h = entropy;
    s.simpson_d = p2 > 0.0 ? 1.0 / p2 : 0.0;

    const double classes =
        static_cast<double>(opts.occupied_bins_as_classes ? occupied : h.bins());
    if (classes > 1.0) {
        s.shannon_e = s.shannon_h / std::log(classes);
        s.simpson_e = s.simpson_d / classes;
    } else {
        s.shannon_e = 1.0;  // a single class is trivially even
        s.simpson_e = classes > 0.0 ? s.simpson_d / classes : 0.0;
    }

    const std::vector<double> finite = finite_only(raw_values);
    if (!finite.empty()) {
        double mean = 0.0;
        for (double v : finite) mean += v;
        mean /= static_cast<double>(finite.size());
        double var = 0.0;
        for (double v : finite) var += (v - mean) * (v - mean);
        var /= static_cast<double>(finite.size());
        s.mean = mean;
        s.variance = var;
    }
    return s;
}

}  // namespace facediv
