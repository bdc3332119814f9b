#pragma once

#include <optional>
#include <string>

#include "facediv/annotation_stats.hpp"
#include "facediv/geometry.hpp"

namespace facediv {

struct BBox {
    double x = 0.0;
    double y = 0.0;
    double width = 0.0;
    double height = 0.0;
};

/// One detected face as ingested from the manifest.
struct FaceRecord {
    std::string face_id;
    std::string image_path;
    BBox bbox;
    KeypointSet68 keypoints;
    int pose_class = 0;  // 0 frontal, 1 rotated left, 2 rotated right,
                         // 3 frontal tilted left, 4 frontal tilted right
    std::optional<AuxAnnotations> aux;
};

}  // namespace facediv
