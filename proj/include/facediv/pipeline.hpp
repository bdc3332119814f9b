#pragma once

#include <optional>
#include <string>
#include <vector>

#include "facediv/contrast.hpp"
#include "facediv/manifest.hpp"
#include "facediv/preprocess.hpp"
#include "facediv/report.hpp"
#include "facediv/skin_color.hpp"
#include "facediv/symmetry.hpp"

namespace facediv {

/// Every tunable the extractors depend on, recorded in output metadata so
/// results stay attributable to one configuration.
struct ExtractConfig {
    std::string version = "facediv-config-1";
    QualityPolicy policy;
    RectifyAnchors anchors;
    SymmetryOptions symmetry;
    ContrastOptions contrast;
    ItaOptions ita;
    double context_expansion = 0.5;
    int workers = 1;

    std::string to_json() const;
};

struct Rejection {
    std::string face_id;
    std::string reason;  // size | iod | pose | image_read
};

struct ExtractResult {
    FeatureTable table;
    std::vector<Rejection> rejections;
};

/// Runs the quality gate, rectification and every extractor over each
/// manifest record. Rejected records are logged, per-extractor failures
/// invalidate cells only, and output row order follows the manifest
/// regardless of the worker count.
ExtractResult run_extract(const Manifest& manifest, const ExtractConfig& config);

/// Extraction for one already-loaded record; exposed for tests.
FeatureRow extract_features(const ManifestRecord& rec, const ImageU8& image,
                            const ExtractConfig& config);

struct ReportFiles {
    std::string report_csv;
    std::string report_json;
    std::string histograms_json;
};

ReportFiles run_report(const FeatureTable& table, const BinConfig& bins,
                       const std::string& config_json);

/// Writes features.csv / features.json / rejections.csv under out_dir.
void write_extract_outputs(const ExtractResult& result, const ExtractConfig& config,
                           const std::string& out_dir);

/// Writes report.csv / report.json / histograms.json under out_dir.
void write_report_outputs(const ReportFiles& files, const std::string& out_dir);

QualityPolicy load_policy(const std::string& path);
BinConfig load_bin_config(const std::string& path);

}  // namespace facediv
