#pragma once

#include <set>
#include <string>
#include <utility>

#include "facediv/image.hpp"
#include "facediv/record.hpp"

namespace facediv {

/// Quality gate thresholds. Defaults follow the pipeline this library
/// reproduces: 50x50 minimum face box, 30 px minimum inter-ocular
/// distance, frontal or slightly tilted poses only.
struct QualityPolicy {
    double min_face_side = 50.0;
    double min_iod = 30.0;
    std::set<int> allowed_poses = {0, 3, 4};
};

enum class RejectReason { none, size, iod, pose };

const char* to_string(RejectReason r);

/// Accept/reject decision; rejection is a value, not an error. `reason`
/// names the first failing rule in the order size, iod, pose.
struct FilterDecision {
    bool accepted = true;
    RejectReason reason = RejectReason::none;
};

FilterDecision quality_filter(const FaceRecord& r, const QualityPolicy& p);

/// Eye centers as the centroid of the six contour keypoints of each eye;
/// first = image-left. Throws DegenerateGeometry if the centers coincide.
std::pair<Point2, Point2> eye_centers(const KeypointSet68& k);

/// Distance between the two eye centers; the single source of truth used
/// by both the quality gate and the resolution features.
double inter_ocular_distance(const KeypointSet68& k);

/// Rectification anchors: eye centers in a 128x128 output frame.
struct RectifyAnchors {
    Point2 left = {40.0, 48.0};
    Point2 right = {88.0, 48.0};
    int out_width = 128;
    int out_height = 128;
};

struct RectifiedFace {
    ImageU8 image;                             // color, out_width x out_height
    Affine2 transform;                         // source -> rectified coordinates
    std::pair<Point2, Point2> eye_centers_after;
};

/// Similarity transform (rotation + uniform scale + translation) mapping
/// the eye centers onto the anchors, applied with bilinear resampling and
/// black fill. Throws DegenerateGeometry on coincident eye centers.
RectifiedFace rectify(const ImageU8& image, const KeypointSet68& k,
                      const RectifyAnchors& anchors = {});

/// The similarity transform alone (no resampling).
Affine2 similarity_from_eye_centers(const KeypointSet68& k, const RectifyAnchors& anchors);

/// Crop of `bbox` expanded by `expansion` of its width and height about its
/// center (0.5 = 50% additional context), clipped to the image and
/// zero-padded back to the un-clipped size.
ImageU8 context_crop(const ImageU8& image, const BBox& bbox, double expansion = 0.5);

}  // namespace facediv
