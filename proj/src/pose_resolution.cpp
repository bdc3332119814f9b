#include "facediv/pose_resolution.hpp"

#include <cmath>

#include "facediv/preprocess.hpp"

namespace facediv {

PoseResolution resolve_pose(const FaceRecord& r) {
    PoseResolution out;
    switch (r.pose_class) {
        case 0: out.pose_signed = 0; break;
        case 3: out.pose_signed = -1; break;
        case 4: out.pose_signed = +1; break;
        default:
            throw InvalidPose("rotated pose class " + std::to_string(r.pose_class) +
                              " has no signed encoding");
    }
    out.pose_class = r.pose_class;
    out.iod = inter_ocular_distance(r.keypoints);
    out.box_size = std::sqrt(r.bbox.width * r.bbox.height);
    return out;
}

}  // namespace facediv
