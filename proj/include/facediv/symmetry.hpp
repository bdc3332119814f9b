#pragma once

#include "facediv/image.hpp"

namespace facediv {

/// Fixed reference locations of the symmetry frame: inner canthi at c1, c2
/// and philtrum at c3 in a 128x128 image, mid-line at x = 64.
struct SymmetryAnchors {
    Point2 c1 = {40.0, 48.0};
    Point2 c2 = {88.0, 48.0};
    Point2 c3 = {64.0, 84.0};
};

inline constexpr int kSymmetrySize = 128;

struct SymmetryScores {
    double density_difference = 0.0;           // mean |I - I'|, >= 0
    double edge_orientation_similarity = 0.0;  // mean cosine, in [-1, 1]
};

struct SymmetryOptions {
    /// Gradient magnitudes below this (in normalized intensity units) are
    /// treated as orientation-free and skipped.
    double edge_threshold = 1.0 / 255.0;
    /// When set, orientations are compared as undirected lines
    /// (cosine of the doubled angle).
    bool doubled_angle = false;
};

/// Full affine determined by the three point pairs (inner canthi and
/// philtrum keypoints onto the anchors); grayscale conversion and 128x128
/// crop. Throws DegenerateGeometry if the source points are collinear.
ImageF64 rectify_for_symmetry(const ImageU8& image, const KeypointSet68& k,
                              const SymmetryAnchors& anchors = {});

/// The affine alone.
Affine2 symmetry_transform(const KeypointSet68& k, const SymmetryAnchors& anchors = {});

/// Mean absolute intensity difference between each left-half pixel and its
/// horizontal mirror. Image must be 128x128 with intensities in [0,1].
double density_difference(const ImageF64& img);

/// Mean cosine between the Sobel gradient orientation at each left-half
/// pixel and the mirrored-frame orientation at its horizontal mirror.
/// Computed over interior pixels; throws NoEdges when every candidate
/// pixel is below the threshold.
double edge_orientation_similarity(const ImageF64& img, const SymmetryOptions& opts = {});

SymmetryScores symmetry_scores(const ImageF64& rectified, const SymmetryOptions& opts = {});

}  // namespace facediv
