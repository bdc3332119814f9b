#include "facediv/pipeline.hpp"

#include <atomic>
#include <filesystem>
#include <fstream>
#include <thread>

#include <json.hpp>

#include "facediv/craniofacial.hpp"
#include "facediv/image_io.hpp"
#include "facediv/pose_resolution.hpp"

namespace facediv {

namespace fs = std::filesystem;
using nlohmann::json;

std::string ExtractConfig::to_json() const {
    json j;
    j["version"] = version;
    j["landmark_map"] = landmark_map::kVersion;
    j["policy"] = {{"min_face_side", policy.min_face_side},
                   {"min_iod", policy.min_iod},
                   {"allowed_poses", std::vector<int>(policy.allowed_poses.begin(),
                                                      policy.allowed_poses.end())}};
    j["anchors"] = {{"left", {anchors.left.x, anchors.left.y}},
                    {"right", {anchors.right.x, anchors.right.y}},
                    {"out_width", anchors.out_width},
                    {"out_height", anchors.out_height}};
    j["symmetry"] = {{"edge_threshold", symmetry.edge_threshold},
                     {"doubled_angle", symmetry.doubled_angle}};
    j["contrast"] = {{"use_sums", contrast.use_sums},
                     {"min_polygon_area", contrast.min_polygon_area}};
    j["ita"] = {{"smooth_window", ita.smooth_window},
                {"peak_bin_degrees", ita.peak_bin_degrees},
                {"min_region_pixels", ita.min_region_pixels}};
    j["context_expansion"] = context_expansion;
    return j.dump();
}

namespace {

void set_cells(FeatureRow& row, const CranioDistances& d) {
    row.cell(Dim::n_sto) = d.n_sto;
    row.cell(Dim::ps_pi) = d.ps_pi;
    row.cell(Dim::or_pi) = d.or_pi;
    row.cell(Dim::sn_cprime) = d.sn_cprime;
    row.cell(Dim::sn_sto) = d.sn_sto;
    row.cell(Dim::sto_li) = d.sto_li;
    row.cell(Dim::cph_cph) = d.cph_cph;
    row.cell(Dim::sbal_ls) = d.sbal_ls;
}

void set_cells(FeatureRow& row, const CranioAreas& a) {
    row.cell(Dim::tn_n) = a.tn_n;
    row.cell(Dim::tn_gn) = a.tn_gn;
    row.cell(Dim::n_gn) = a.n_gn;
    row.cell(Dim::sn_gn) = a.sn_gn;
    row.cell(Dim::zy_zy) = a.zy_zy;
    row.cell(Dim::go_go) = a.go_go;
    row.cell(Dim::en_en) = a.en_en;
    row.cell(Dim::en_ex) = a.en_ex;
    row.cell(Dim::ex_ex) = a.ex_ex;
    row.cell(Dim::n_sn) = a.n_sn;
    row.cell(Dim::al_al) = a.al_al;
    row.cell(Dim::ch_ch) = a.ch_ch;
}

void set_cells(FeatureRow& row, const CranioRatios& r) {
    row.cell(Dim::facial_index) = r.facial_index;
    row.cell(Dim::mandibular_index) = r.mandibular_index;
    row.cell(Dim::intercanthal_index) = r.intercanthal_index;
    row.cell(Dim::orbital_width_index) = r.orbital_width_index;
    row.cell(Dim::eye_fissure_index) = r.eye_fissure_index;
    row.cell(Dim::nasal_index) = r.nasal_index;
    row.cell(Dim::vermilion_height_index) = r.vermilion_height_index;
    row.cell(Dim::mouth_face_width_index) = r.mouth_face_width_index;
}

void set_cells(FeatureRow& row, const ContrastVector& c) {
    row.cell(Dim::contrast_lips_l) = c.lips_l;
    row.cell(Dim::contrast_lips_a) = c.lips_a;
    row.cell(Dim::contrast_lips_b) = c.lips_b;
    row.cell(Dim::contrast_eyes_l) = c.eyes_l;
    row.cell(Dim::contrast_eyes_a) = c.eyes_a;
    row.cell(Dim::contrast_eyes_b) = c.eyes_b;
    row.cell(Dim::contrast_eyebrows_l) = c.eyebrows_l;
    row.cell(Dim::contrast_eyebrows_a) = c.eyebrows_a;
    row.cell(Dim::contrast_eyebrows_b) = c.eyebrows_b;
}

}  // namespace

FeatureRow extract_features(const ManifestRecord& rec, const ImageU8& image,
                            const ExtractConfig& config) {
    FeatureRow row;
    row.face_id = rec.face.face_id;

    const RectifiedFace rect = rectify(image, rec.face.keypoints, config.anchors);
    KeypointSet68 rect_kp;
    for (std::size_t i = 0; i < 68; ++i) {
        rect_kp[i] = rect.transform.apply(rec.face.keypoints[i]);
    }

    // Coding schemes 1-3 share the landmark mapping in the rectified frame.
    try {
        const AnatomicalLandmarks lm = map_keypoints(rect_kp, 0.0);
        set_cells(row, distances(lm));
        set_cells(row, areas(lm));
        set_cells(row, ratios(lm));
    } catch (const Error&) {
        row.flags.push_back("craniofacial_failed");
    }

    // Coding scheme 4 rectifies independently from the original frame.
    try {
        const ImageF64 sym = rectify_for_symmetry(image, rec.face.keypoints);
        row.cell(Dim::density_difference) = density_difference(sym);
        try {
            row.cell(Dim::edge_orientation_similarity) =
                edge_orientation_similarity(sym, config.symmetry);
        } catch (const NoEdges&) {
            row.flags.push_back("symmetry_no_edges");
        }
    } catch (const Error&) {
        row.flags.push_back("symmetry_failed");
    }

    // Coding scheme 5 on the rectified color face.
    set_cells(row, contrast_vector(rect.image, rect_kp, config.contrast));

    // Coding scheme 6, with the optional ingested mask carried through the
    // same rectification (nearest by >= 0.5 after bilinear).
    try {
        SkinMask warped_mask;
        const SkinMask* mask_ptr = nullptr;
        if (!rec.mask_path.empty()) {
            const ImageF64 raw = load_mask(rec.mask_path);
            if (raw.width != image.width || raw.height != image.height) {
                throw ImageRead("mask dimensions do not match the image");
            }
            warped_mask = warp_affine(raw, rect.transform, config.anchors.out_width,
                                      config.anchors.out_height);
            mask_ptr = &warped_mask;
        }
        const ItaResult ita = face_ita(rect.image, rect_kp, mask_ptr, config.ita);
        row.cell(Dim::ita) = ita.face_ita;
        if (!ita.face_ita) row.flags.push_back("ita_all_regions_empty");
    } catch (const Error&) {
        row.flags.push_back("ita_failed");
    }

    // Coding schemes 7-9.
    if (rec.face.aux) {
        try {
            const AggregatedAnnotations agg = aggregate_annotations(*rec.face.aux);
            row.cell(Dim::age_pred) = agg.age_pred;
            row.cell(Dim::gender_pred) = agg.gender_pred;
            row.cell(Dim::age_label) = agg.age_years;
            if (agg.gender_label) {
                row.cell(Dim::gender_label) = static_cast<double>(*agg.gender_label);
            }
            if (agg.gender_tie) row.flags.push_back("gender_vote_tie");
            if (agg.age_group_tie) row.flags.push_back("age_group_vote_tie");
        } catch (const Error&) {
            row.flags.push_back("annotations_failed");
        }
    }

    // Coding scheme 10 in the original frame.
    try {
        const PoseResolution pr = resolve_pose(rec.face);
        row.cell(Dim::pose_signed) = static_cast<double>(pr.pose_signed);
        row.cell(Dim::iod) = pr.iod;
        row.cell(Dim::box_size) = pr.box_size;
    } catch (const Error&) {
        row.flags.push_back("pose_failed");
    }

    return row;
}

ExtractResult run_extract(const Manifest& manifest, const ExtractConfig& config) {
    struct Slot {
        std::optional<FeatureRow> row;
        std::optional<Rejection> rejection;
    };
    const std::size_t n = manifest.records.size();
    std::vector<Slot> slots(n);

    auto process = [&](std::size_t i) {
        const ManifestRecord& rec = manifest.records[i];
        const FilterDecision fd = quality_filter(rec.face, config.policy);
        if (!fd.accepted) {
            slots[i].rejection = Rejection{rec.face.face_id, to_string(fd.reason)};
            return;
        }
        ImageU8 image;
        try {
            image = load_image(rec.face.image_path);
        } catch (const ImageRead&) {
            slots[i].rejection = Rejection{rec.face.face_id, "image_read"};
            return;
        }
        slots[i].row = extract_features(rec, image, config);
    };

    const int workers = std::max(1, config.workers);
    if (workers == 1 || n <= 1) {
        for (std::size_t i = 0; i < n; ++i) process(i);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        const int count = std::min<std::size_t>(workers, n);
        pool.reserve(count);
        for (int t = 0; t < count; ++t) {
            pool.emplace_back([&] {
                for (;;) {
                    const std::size_t i = next.fetch_add(1);
                    if (i >= n) break;
                    process(i);
                }
            });
        }
        for (auto& t : pool) t.join();
    }

    // Single-writer assembly in manifest order.
    ExtractResult result;
    for (std::size_t i = 0; i < n; ++i) {
        if (slots[i].row) {
            result.table.rows.push_back(std::move(*slots[i].row));
        } else if (slots[i].rejection) {
            result.rejections.push_back(std::move(*slots[i].rejection));
        }
    }
    return result;
}

ReportFiles run_report(const FeatureTable& table, const BinConfig& bins,
                       const std::string& config_json) {
    const DiversityReport report = build_report(table, bins);
    ReportFiles files;
    files.report_csv = report_csv(report);
    files.report_json = report_json(report, config_json);
    files.histograms_json = histograms_json(report);
    return files;
}

namespace {

void write_file(const fs::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    out << content;
}

}  // namespace

void write_extract_outputs(const ExtractResult& result, const ExtractConfig& config,
                           const std::string& out_dir) {
    fs::create_directories(out_dir);
    const fs::path dir(out_dir);
    write_file(dir / "features.csv", feature_table_csv(result.table));
    write_file(dir / "features.json", feature_table_json(result.table, config.to_json()));
    std::string log = "face_id,reason\n";
    for (const auto& r : result.rejections) {
        log += r.face_id + ',' + r.reason + '\n';
    }
    write_file(dir / "rejections.csv", log);
}

void write_report_outputs(const ReportFiles& files, const std::string& out_dir) {
    fs::create_directories(out_dir);
    const fs::path dir(out_dir);
    write_file(dir / "report.csv", files.report_csv);
    write_file(dir / "report.json", files.report_json);
    write_file(dir / "histograms.json", files.histograms_json);
}

QualityPolicy load_policy(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw Error("cannot open policy file: " + path);
    }
    json j = json::parse(in);
    QualityPolicy p;
    p.min_face_side = j.value("min_face_side", p.min_face_side);
    p.min_iod = j.value("min_iod", p.min_iod);
    if (j.contains("allowed_poses")) {
        p.allowed_poses.clear();
        for (int v : j["allowed_poses"].get<std::vector<int>>()) p.allowed_poses.insert(v);
    }
    return p;
}

BinConfig load_bin_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw Error("cannot open bins file: " + path);
    }
    json j = json::parse(in);
    BinConfig c;
    c.default_bins = j.value("default_bins", c.default_bins);
    c.score_options.occupied_bins_as_classes =
        j.value("occupied_bins_as_classes", c.score_options.occupied_bins_as_classes);
    if (j.contains("overrides")) {
        for (const auto& [key, spec] : j["overrides"].items()) {
            if (!dim_from_id(key)) {
                throw Error("bins override names unknown dimension '" + key + "'");
            }
            if (spec.contains("edges")) {
                c.overrides[key] = FixedEdges{spec["edges"].get<std::vector<double>>()};
            } else if (spec.contains("bins")) {
                c.overrides[key] = EqualWidth{spec["bins"].get<int>()};
            } else {
                throw Error("bins override '" + key + "' needs 'edges' or 'bins'");
            }
        }
    }
    return c;
}

}  // namespace facediv
