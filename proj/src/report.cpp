#include "facediv/report.hpp"

#include <json.hpp>

#include "facediv/annotation_stats.hpp"

namespace facediv {

namespace {

std::vector<double> age_group_edges() {
    return std::vector<double>(kAgeGroupLower, kAgeGroupLower + kAgeGroupCount + 1);
}

}  // namespace

BinConfig BinConfig::defaults() { return BinConfig{}; }

BinPolicy BinConfig::policy_for(Dim d) const {
    const auto it = overrides.find(dim_meta(d).id);
    if (it != overrides.end()) return it->second;

    switch (d) {
        case Dim::age_pred:
        case Dim::age_label:
            return FixedEdges{age_group_edges()};
        case Dim::gender_label:
            return FixedEdges{{-0.5, 0.5, 1.5}};
        case Dim::pose_signed:
            return FixedEdges{{-1.5, -0.5, 0.5, 1.5}};
        default:
            return EqualWidth{default_bins};
    }
}

DiversityReport build_report(const FeatureTable& table, const BinConfig& config) {
    if (table.rows.empty()) {
        throw EmptyTable("feature table has no rows");
    }

    DiversityReport report;
    report.table_rows = table.rows.size();
    for (int i = 0; i < kDimCount; ++i) {
        const Dim d = static_cast<Dim>(i);
        ReportRow& row = report.rows[i];
        row.dim = d;

        std::vector<double> values;
        values.reserve(table.rows.size());
        for (const auto& r : table.rows) {
            if (r.values[i]) values.push_back(*r.values[i]);
        }
        row.n_values = values.size();
        row.n_excluded = table.rows.size() - values.size();
        if (values.empty()) {
            row.note = "no_valid_values";
            continue;
        }
        row.histogram = bin_values(values, config.policy_for(d));
        row.scores = diversity_scores(row.histogram, values, config.score_options);
    }
    return report;
}

std::string report_csv(const DiversityReport& report) {
    std::string out =
        "coding_scheme,measurement,simpson_d,simpson_e,shannon_h,shannon_e,mean,variance,"
        "n_values,n_excluded\n";
    for (const auto& row : report.rows) {
        const DimMeta& meta = dim_meta(row.dim);
        out += meta.scheme;
        out += ',';
        out += meta.id;
        if (row.scores) {
            const DiversityScores& s = *row.scores;
            for (double v : {s.simpson_d, s.simpson_e, s.shannon_h, s.shannon_e, s.mean,
                             s.variance}) {
                out += ',';
                out += format_sig6(v);
            }
        } else {
            out += ",,,,,,";
        }
        out += ',' + std::to_string(row.n_values);
        out += ',' + std::to_string(row.n_excluded);
        out += '\n';
    }
    return out;
}

namespace {

nlohmann::json histogram_json(const Histogram& h) {
    nlohmann::json j;
    j["edges"] = h.edges;
    j["counts"] = h.counts;
    j["probabilities"] = h.probabilities;
    return j;
}

}  // namespace

std::string report_json(const DiversityReport& report, const std::string& config_json) {
    nlohmann::json doc;
    doc["table_rows"] = report.table_rows;
    if (!config_json.empty()) {
        doc["config"] = nlohmann::json::parse(config_json);
    }
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : report.rows) {
        const DimMeta& meta = dim_meta(row.dim);
        nlohmann::json r;
        r["coding_scheme"] = meta.scheme;
        r["measurement"] = meta.id;
        r["n_values"] = row.n_values;
        r["n_excluded"] = row.n_excluded;
        if (row.scores) {
            r["simpson_d"] = row.scores->simpson_d;
            r["simpson_e"] = row.scores->simpson_e;
            r["shannon_h"] = row.scores->shannon_h;
            r["shannon_e"] = row.scores->shannon_e;
            r["mean"] = row.scores->mean;
            r["variance"] = row.scores->variance;
            r["histogram"] = histogram_json(row.histogram);
        } else {
            r["note"] = row.note;
        }
        rows.push_back(std::move(r));
    }
    doc["rows"] = std::move(rows);
    return doc.dump(2) + "\n";
}

std::string histograms_json(const DiversityReport& report) {
    nlohmann::json doc;
    for (const auto& row : report.rows) {
        if (!row.scores) continue;
        doc[dim_meta(row.dim).id] = histogram_json(row.histogram);
    }
    return doc.dump(2) + "\n";
}

}  // namespace facediv
