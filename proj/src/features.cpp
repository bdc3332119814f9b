#include "facediv/features.hpp"

#include <charconv>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace facediv {

namespace {

constexpr const char* kDistance = "Craniofacial Distance";
constexpr const char* kArea = "Craniofacial Area";
constexpr const char* kRatio = "Craniofacial Ratio";
constexpr const char* kSymmetry = "Facial Symmetry";
constexpr const char* kContrast = "Facial Contrast";

const std::array<DimMeta, kDimCount> kDims = {{
    {"n_sto", kDistance},
    {"ps_pi", kDistance},
    {"or_pi", kDistance},
    {"sn_cprime", kDistance},
    {"sn_sto", kDistance},
    {"sto_li", kDistance},
    {"cph_cph", kDistance},
    {"sbal_ls", kDistance},
    {"tn_n", kArea},
    {"tn_gn", kArea},
    {"n_gn", kArea},
    {"sn_gn", kArea},
    {"zy_zy", kArea},
    {"go_go", kArea},
    {"en_en", kArea},
    {"en_ex", kArea},
    {"ex_ex", kArea},
    {"n_sn", kArea},
    {"al_al", kArea},
    {"ch_ch", kArea},
    {"facial_index", kRatio},
    {"mandibular_index", kRatio},
    {"intercanthal_index", kRatio},
    {"orbital_width_index", kRatio},
    {"eye_fissure_index", kRatio},
    {"nasal_index", kRatio},
    {"vermilion_height_index", kRatio},
    {"mouth_face_width_index", kRatio},
    {"density_difference", kSymmetry},
    {"edge_orientation_similarity", kSymmetry},
    {"contrast_lips_l", kContrast},
    {"contrast_lips_a", kContrast},
    {"contrast_lips_b", kContrast},
    {"contrast_eyes_l", kContrast},
    {"contrast_eyes_a", kContrast},
    {"contrast_eyes_b", kContrast},
    {"contrast_eyebrows_l", kContrast},
    {"contrast_eyebrows_a", kContrast},
    {"contrast_eyebrows_b", kContrast},
    {"ita", "Skin Color"},
    {"age_pred", "Age"},
    {"gender_pred", "Gender"},
    {"age_label", "Subjective Annotation"},
    {"gender_label", "Subjective Annotation"},
    {"pose_signed", "Pose & Resolution"},
    {"iod", "Pose & Resolution"},
    {"box_size", "Pose & Resolution"},
}};

}  // namespace

const std::array<DimMeta, kDimCount>& dimensions() { return kDims; }

const DimMeta& dim_meta(Dim d) { return kDims[static_cast<int>(d)]; }

std::optional<Dim> dim_from_id(std::string_view id) {
    for (int i = 0; i < kDimCount; ++i) {
        if (id == kDims[i].id) return static_cast<Dim>(i);
    }
    return std::nullopt;
}

std::string format_sig6(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 6);
    return std::string(buf, res.ptr);
}

std::string feature_table_csv(const FeatureTable& table) {
    std::string out = "face_id";
    for (const auto& d : kDims) {
        out += ',';
        out += d.id;
    }
    out += '\n';
    for (const auto& row : table.rows) {
        out += row.face_id;
        for (const auto& cell : row.values) {
            out += ',';
            if (cell) out += format_sig6(*cell);
        }
        out += '\n';
    }
    return out;
}

std::string feature_table_json(const FeatureTable& table, const std::string& config_json) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : table.rows) {
        nlohmann::json r;
        r["face_id"] = row.face_id;
        nlohmann::json vals;
        for (int i = 0; i < kDimCount; ++i) {
            if (row.values[i]) {
                vals[kDims[i].id] = *row.values[i];
            } else {
                vals[kDims[i].id] = nullptr;
            }
        }
        r["values"] = std::move(vals);
        if (!row.flags.empty()) r["flags"] = row.flags;
        rows.push_back(std::move(r));
    }
    nlohmann::json doc;
    if (!config_json.empty()) {
        doc["config"] = nlohmann::json::parse(config_json);
    }
    doc["rows"] = std::move(rows);
    return doc.dump(2) + "\n";
}

FeatureTable parse_feature_table_csv(const std::string& csv_text) {
    std::istringstream in(csv_text);
    std::string line;
    if (!std::getline(in, line)) {
        throw std::runtime_error("feature table CSV is empty");
    }

    auto split = [](const std::string& s) {
        std::vector<std::string> cells;
        std::string cur;
        for (char c : s) {
            if (c == ',') {
                cells.push_back(cur);
                cur.clear();
            } else if (c != '\r') {
                cur += c;
            }
        }
        cells.push_back(cur);
        return cells;
    };

    const auto header = split(line);
    if (header.size() != kDimCount + 1 || header[0] != "face_id") {
        throw std::runtime_error("feature table CSV has an unexpected header");
    }
    for (int i = 0; i < kDimCount; ++i) {
        if (header[i + 1] != kDims[i].id) {
            throw std::runtime_error("feature table CSV column " + std::to_string(i + 1) +
                                     " is '" + header[i + 1] + "', expected '" + kDims[i].id + "'");
        }
    }

    FeatureTable table;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto cells = split(line);
        if (cells.size() != kDimCount + 1) {
            throw std::runtime_error("feature table CSV row has " + std::to_string(cells.size()) +
                                     " cells");
        }
        FeatureRow row;
        row.face_id = cells[0];
        for (int i = 0; i < kDimCount; ++i) {
            const std::string& cell = cells[i + 1];
            if (cell.empty()) continue;
            row.values[i] = std::strtod(cell.c_str(), nullptr);
        }
        table.rows.push_back(std::move(row));
    }
    return table;
}

}  // namespace facediv
