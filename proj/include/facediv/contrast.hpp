#pragma once

#include <optional>
#include <vector>

#include "facediv/image.hpp"

namespace facediv {

enum class FacePart { lips, eyes, eyebrows };
enum class LabChannel { L, a, b };

/// Inner keypoint ring of a facial part and the same ring scaled 1.5x
/// about its vertex centroid. The contrast region is the annulus between
/// them.
struct RegionRings {
    std::vector<Point2> inner;
    std::vector<Point2> outer;
};

/// Nine contrasts: {L,a,b} x {lips, eyes, eyebrows}. Eyes and eyebrows are
/// the mean of the left and right region contrasts. Fields are empty when
/// a region is degenerate or its denominator vanishes.
struct ContrastVector {
    std::optional<double> lips_l, lips_a, lips_b;
    std::optional<double> eyes_l, eyes_a, eyes_b;
    std::optional<double> eyebrows_l, eyebrows_a, eyebrows_b;
};

struct ContrastOptions {
    /// Compare summed channel intensity instead of means. The mean form is
    /// the default; it is independent of the region pixel counts.
    bool use_sums = false;
    /// Minimum inner-polygon area in px^2 below which the ring is
    /// degenerate.
    double min_polygon_area = 4.0;
};

/// Rings for one part: one entry for lips, left+right entries for eyes and
/// eyebrows. Throws DegenerateGeometry when an inner polygon area falls
/// below the option threshold.
std::vector<RegionRings> region_rings(const KeypointSet68& k, FacePart part,
                                      const ContrastOptions& opts = {});

/// Encoded channel plane used by the contrast formula: L scaled from
/// [0,100] to [0,255], a and b shifted by +128. Keeps all intensities
/// non-negative so the ratio stays in [-1,1].
ImageF64 encoded_channel(const LabImage& lab, LabChannel channel);

/// (outer - inner) / (outer + inner) of the encoded channel intensity,
/// where outer is the annulus between the two rings. Throws EmptyRegion if
/// either region rasterizes to zero pixels and NumericDegenerate if the
/// denominator vanishes.
double region_contrast(const LabImage& lab, const RegionRings& rings, LabChannel channel,
                       const ContrastOptions& opts = {});

/// All nine measures from an RGB image and its keypoints; per-field
/// failures leave that field empty.
ContrastVector contrast_vector(const ImageU8& rgb, const KeypointSet68& k,
                               const ContrastOptions& opts = {});

}  // namespace facediv
