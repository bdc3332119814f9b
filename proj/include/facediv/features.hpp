#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace facediv {

/// The 47 feature dimensions, in canonical output order.
enum class Dim : int {
    // coding scheme 1: distances
    n_sto, ps_pi, or_pi, sn_cprime, sn_sto, sto_li, cph_cph, sbal_ls,
    // coding scheme 2: areas
    tn_n, tn_gn, n_gn, sn_gn, zy_zy, go_go, en_en, en_ex, ex_ex, n_sn, al_al, ch_ch,
    // coding scheme 3: ratios
    facial_index, mandibular_index, intercanthal_index, orbital_width_index,
    eye_fissure_index, nasal_index, vermilion_height_index, mouth_face_width_index,
    // coding scheme 4: symmetry
    density_difference, edge_orientation_similarity,
    // coding scheme 5: contrast
    contrast_lips_l, contrast_lips_a, contrast_lips_b,
    contrast_eyes_l, contrast_eyes_a, contrast_eyes_b,
    contrast_eyebrows_l, contrast_eyebrows_a, contrast_eyebrows_b,
    // coding scheme 6: skin color
    ita,
    // coding schemes 7-9: model predictions and subjective labels
    age_pred, gender_pred, age_label, gender_label,
    // coding scheme 10: pose and resolution
    pose_signed, iod, box_size,
};

inline constexpr int kDimCount = 47;

struct DimMeta {
    const char* id;      // stable column / row identifier
    const char* scheme;  // coding scheme display name
};

const std::array<DimMeta, kDimCount>& dimensions();
const DimMeta& dim_meta(Dim d);
std::optional<Dim> dim_from_id(std::string_view id);

/// One feature-table row. Cells are empty where an extractor failed or an
/// input was absent; gender_label is encoded male=0, female=1.
struct FeatureRow {
    std::string face_id;
    std::array<std::optional<double>, kDimCount> values{};
    std::vector<std::string> flags;  // e.g. vote ties, per-cell failures

    std::optional<double>& cell(Dim d) { return values[static_cast<int>(d)]; }
    const std::optional<double>& cell(Dim d) const { return values[static_cast<int>(d)]; }
};

struct FeatureTable {
    std::vector<FeatureRow> rows;
};

/// CSV with the fixed 48-column header (face_id + 47 dimensions), values
/// at 6 significant digits, empty cells for invalid values.
std::string feature_table_csv(const FeatureTable& table);

/// Lossless JSON mirror (binary64 round-trip), including per-row flags
/// and the provenance config blob when given.
std::string feature_table_json(const FeatureTable& table, const std::string& config_json = "");

/// Parses the CSV form back into a table (used by the report stage).
FeatureTable parse_feature_table_csv(const std::string& csv_text);

/// Shortest decimal form at 6 significant digits (CSV cell format).
std::string format_sig6(double v);

}  // namespace facediv
