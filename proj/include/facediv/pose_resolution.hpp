#pragma once

#include "facediv/record.hpp"

namespace facediv {

/// Pose and resolution features, all in original-frame pixels.
struct PoseResolution {
    int pose_class = 0;
    int pose_signed = 0;    // 0 -> 0, 3 -> -1, 4 -> +1
    double iod = 0.0;       // inter-ocular distance
    double box_size = 0.0;  // geometric mean of bbox width and height
};

/// Throws InvalidPose for rotated poses (classes 1 and 2), which the
/// quality gate is expected to have removed.
PoseResolution resolve_pose(const FaceRecord& r);

}  // namespace facediv
