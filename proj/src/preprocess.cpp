#include "facediv/preprocess.hpp"

#include <algorithm>
#include <cmath>

namespace facediv {

const char* to_string(RejectReason r) {
    switch (r) {
        case RejectReason::none: return "none";
        case RejectReason::size: return "size";
        case RejectReason::iod: return "iod";
        case RejectReason::pose: return "pose";
    }
    return "none";
}

FilterDecision quality_filter(const FaceRecord& r, const QualityPolicy& p) {
    if (r.bbox.width < p.min_face_side || r.bbox.height < p.min_face_side) {
        return {false, RejectReason::size};
    }
    if (inter_ocular_distance(r.keypoints) < p.min_iod) {
        return {false, RejectReason::iod};
    }
    if (!p.allowed_poses.contains(r.pose_class)) {
        return {false, RejectReason::pose};
    }
    return {true, RejectReason::none};
}

std::pair<Point2, Point2> eye_centers(const KeypointSet68& k) {
    auto centroid = [&](int first) {
        Point2 c{0.0, 0.0};
        for (int i = first; i < first + 6; ++i) {
            c.x += k[i].x;
            c.y += k[i].y;
        }
        return Point2{c.x / 6.0, c.y / 6.0};
    };
    Point2 left = centroid(36);
    Point2 right = centroid(42);
    if (left.x > right.x) std::swap(left, right);
    if (distance(left, right) < 1e-9) {
        throw DegenerateGeometry("eye centers coincide");
    }
    return {left, right};
}

double inter_ocular_distance(const KeypointSet68& k) {
    const auto [l, r] = eye_centers(k);
    return distance(l, r);
}

Affine2 similarity_from_eye_centers(const KeypointSet68& k, const RectifyAnchors& anchors) {
    const auto [src_l, src_r] = eye_centers(k);
    // Complex ratio (dst_r - dst_l) / (src_r - src_l) gives rotation+scale.
    const double sx = src_r.x - src_l.x, sy = src_r.y - src_l.y;
    const double dx = anchors.right.x - anchors.left.x, dy = anchors.right.y - anchors.left.y;
    const double denom = sx * sx + sy * sy;
    const double ra = (dx * sx + dy * sy) / denom;
    const double rb = (dy * sx - dx * sy) / denom;

    Affine2 t;
    t.a = ra;
    t.b = -rb;
    t.c = rb;
    t.d = ra;
    t.tx = anchors.left.x - (t.a * src_l.x + t.b * src_l.y);
    t.ty = anchors.left.y - (t.c * src_l.x + t.d * src_l.y);
    return t;
}

RectifiedFace rectify(const ImageU8& image, const KeypointSet68& k, const RectifyAnchors& anchors) {
    const Affine2 t = similarity_from_eye_centers(k, anchors);
    RectifiedFace out;
    out.transform = t;
    out.image = warp_affine(image, t, anchors.out_width, anchors.out_height);
    const auto [src_l, src_r] = eye_centers(k);
    out.eye_centers_after = {t.apply(src_l), t.apply(src_r)};
    return out;
}

ImageU8 context_crop(const ImageU8& image, const BBox& bbox, double expansion) {
    const double cx = bbox.x + bbox.width / 2.0;
    const double cy = bbox.y + bbox.height / 2.0;
    const double w = (1.0 + expansion) * bbox.width;
    const double h = (1.0 + expansion) * bbox.height;

    const int out_w = std::max(1, static_cast<int>(std::lround(w)));
    const int out_h = std::max(1, static_cast<int>(std::lround(h)));
    const int x0 = static_cast<int>(std::lround(cx - w / 2.0));
    const int y0 = static_cast<int>(std::lround(cy - h / 2.0));

    ImageU8 out(out_w, out_h, image.channels);
    for (int y = 0; y < out_h; ++y) {
        const int sy = y0 + y;
        if (sy < 0 || sy >= image.height) continue;
        for (int x = 0; x < out_w; ++x) {
            const int sx = x0 + x;
            if (sx < 0 || sx >= image.width) continue;
            for (int c = 0; c < image.channels; ++c) {
                out.at(x, y, c) = image.at(sx, sy, c);
            }
        }
    }
    return out;
}

}  // namespace facediv
