#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "facediv/diversity.hpp"
#include "facediv/image.hpp"

namespace facediv {

struct LabPixel {
    double l = 0.0;  // [0,100]
    double a = 0.0;
    double b = 0.0;
};

/// sRGB 8-bit -> CIE-Lab, D65 white point (IEC 61966-2-1 primaries).
LabPixel rgb_to_lab(std::uint8_t r, std::uint8_t g, std::uint8_t b);

/// Whole-image conversion.
LabImage rgb_to_lab(const ImageU8& rgb);

/// Individual Typology Angle in degrees: arctan((L-50)/b) * 180/pi.
/// b = 0 resolves to +90 for L > 50 and -90 for L < 50; the undefined
/// case (b = 0, L = 50) yields an empty optional and is excluded from any
/// aggregate.
std::optional<double> ita_pixel(const LabPixel& p);

enum class ItaRegion : int { chin = 0, cheek_l = 1, cheek_r = 2, forehead = 3 };

struct ItaOptions {
    /// Mean-filter window side for per-region smoothing.
    int smooth_window = 5;
    /// Histogram bin width in degrees used to locate the per-region peak.
    double peak_bin_degrees = 1.0;
    /// Regions with fewer masked pixels than this are skipped.
    std::size_t min_region_pixels = 25;
};

struct ItaResult {
    std::array<std::optional<double>, 4> region_peaks;  // indexed by ItaRegion
    std::optional<double> face_ita;                     // mean of present peaks
    Histogram histogram;                                // masked-pixel ITA, 1-degree bins
};

/// Skin mask aligned to the face image (non-zero = skin).
using SkinMask = ImageF64;

/// Landmark-polygon fallback regions: chin, cheeks and forehead polygons
/// built from the keypoints (forehead capped by the image top).
std::vector<Point2> ita_region_polygon(const KeypointSet68& k, ItaRegion region,
                                       int image_width, int image_height);

/// Peak of a sample of smoothed ITA values: the mean of the values in the
/// modal 1-degree bin. Empty input yields an empty optional.
std::optional<double> ita_peak(const std::vector<double>& values, double bin_degrees = 1.0);

/// The five-step face score: mask (provided or landmark fallback), region
/// intersection, per-region smoothing, per-region peak, mean of peaks.
/// face_ita is empty only when all four regions are empty.
ItaResult face_ita(const ImageU8& rgb, const KeypointSet68& k,
                   const SkinMask* mask = nullptr, const ItaOptions& opts = {});

}  // namespace facediv
