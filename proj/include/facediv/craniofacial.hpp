#pragma once

#include <optional>

#include "facediv/geometry.hpp"

namespace facediv {

/// The eight distance measures. Bilateral measures (ps-pi, or-pi, sbal-ls)
/// are the mean of the left and right distances. Units: rectified-frame
/// pixels.
struct CranioDistances {
    double n_sto = 0.0;
    double ps_pi = 0.0;
    double or_pi = 0.0;
    double sn_cprime = 0.0;
    double sn_sto = 0.0;
    double sto_li = 0.0;
    double cph_cph = 0.0;
    double sbal_ls = 0.0;
};

/// The twelve area-family measures (landmark-pair extents; en-ex is the
/// mean of the left and right eye fissure lengths).
struct CranioAreas {
    double tn_n = 0.0;
    double tn_gn = 0.0;
    double n_gn = 0.0;
    double sn_gn = 0.0;
    double zy_zy = 0.0;
    double go_go = 0.0;
    double en_en = 0.0;
    double en_ex = 0.0;
    double ex_ex = 0.0;
    double n_sn = 0.0;
    double al_al = 0.0;
    double ch_ch = 0.0;
};

/// The eight ratio measures. A field is empty when its denominator
/// distance is below 1e-6 px; the remaining fields are still produced.
struct CranioRatios {
    std::optional<double> facial_index;            // (n-gn)/(zy-zy)
    std::optional<double> mandibular_index;        // (sto-gn)/(go-go)
    std::optional<double> intercanthal_index;      // (en-en)/(ex-ex)
    std::optional<double> orbital_width_index;     // (ex-en)/(en-en), L/R mean
    std::optional<double> eye_fissure_index;       // (ps-pi)/(ex-en), L/R mean
    std::optional<double> nasal_index;             // (al-al)/(n-sn)
    std::optional<double> vermilion_height_index;  // (ls-sto)/(sto-li)
    std::optional<double> mouth_face_width_index;  // (ch-ch)/(zy-zy)
};

CranioDistances distances(const AnatomicalLandmarks& lm);
CranioAreas areas(const AnatomicalLandmarks& lm);
CranioRatios ratios(const AnatomicalLandmarks& lm);

}  // namespace facediv
