#include "facediv/symmetry.hpp"

#include <algorithm>
#include <cmath>

namespace facediv {

namespace {

// Affine from three point pairs: two 3x3 solves sharing one matrix.
Affine2 affine_from_three(const Point2 src[3], const Point2 dst[3]) {
    const double m[3][3] = {{src[0].x, src[0].y, 1.0},
                            {src[1].x, src[1].y, 1.0},
                            {src[2].x, src[2].y, 1.0}};
    const double det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                       m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                       m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    // det is twice the source triangle area; scale the tolerance with the
    // extent of the points so the test is unit-free.
    double extent = 0.0;
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) extent = std::max(extent, distance(src[i], src[j]));
    if (std::abs(det) <= 1e-9 * std::max(1.0, extent * extent)) {
        throw DegenerateGeometry("symmetry anchor points are collinear");
    }

    auto solve = [&](double b0, double b1, double b2, double out[3]) {
        // Cramer's rule.
        const double d0 = b0 * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                          m[0][1] * (b1 * m[2][2] - m[1][2] * b2) +
                          m[0][2] * (b1 * m[2][1] - m[1][1] * b2);
        const double d1 = m[0][0] * (b1 * m[2][2] - m[1][2] * b2) -
                          b0 * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                          m[0][2] * (m[1][0] * b2 - b1 * m[2][0]);
        const double d2 = m[0][0] * (m[1][1] * b2 - b1 * m[2][1]) -
                          m[0][1] * (m[1][0] * b2 - b1 * m[2][0]) +
                          b0 * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
        out[0] = d0 / det;
        out[1] = d1 / det;
        out[2] = d2 / det;
    };

    double row_x[3], row_y[3];
    solve(dst[0].x, dst[1].x, dst[2].x, row_x);
    solve(dst[0].y, dst[1].y, dst[2].y, row_y);

    Affine2 t;
    t.a = row_x[0];
    t.b = row_x[1];
    t.tx = row_x[2];
    t.c = row_y[0];
    t.d = row_y[1];
    t.ty = row_y[2];
    return t;
}

}  // namespace

Affine2 symmetry_transform(const KeypointSet68& k, const SymmetryAnchors& anchors) {
    const Point2 src[3] = {k[landmark_map::kEndocanthionL], k[landmark_map::kEndocanthionR],
                           k[landmark_map::kPhiltrum]};
    const Point2 dst[3] = {anchors.c1, anchors.c2, anchors.c3};
    return affine_from_three(src, dst);
}

ImageF64 rectify_for_symmetry(const ImageU8& image, const KeypointSet68& k,
                              const SymmetryAnchors& anchors) {
    const Affine2 t = symmetry_transform(k, anchors);
    const ImageF64 gray = to_grayscale(image);
    return warp_affine(gray, t, kSymmetrySize, kSymmetrySize);
}

double density_difference(const ImageF64& img) {
    const int w = img.width;
    const int h = img.height;
    double sum = 0.0;
    std::size_t count = 0;
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w / 2; ++x) {
            sum += std::abs(img.at(x, y) - img.at(w - 1 - x, y));
            ++count;
        }
    }
    return count ? sum / static_cast<double>(count) : 0.0;
}

namespace {

struct Gradient {
    double gx;
    double gy;
};

// 3x3 Sobel at an interior pixel.
Gradient sobel_at(const ImageF64& img, int x, int y) {
    const double tl = img.at(x - 1, y - 1), tc = img.at(x, y - 1), tr = img.at(x + 1, y - 1);
    const double ml = img.at(x - 1, y), mr = img.at(x + 1, y);
    const double bl = img.at(x - 1, y + 1), bc = img.at(x, y + 1), br = img.at(x + 1, y + 1);
    return {(tr + 2.0 * mr + br) - (tl + 2.0 * ml + bl),
            (bl + 2.0 * bc + br) - (tl + 2.0 * tc + tr)};
}

}  // namespace

double edge_orientation_similarity(const ImageF64& img, const SymmetryOptions& opts) {
    const int w = img.width;
    const int h = img.height;
    const double tau = opts.edge_threshold;

    double sum = 0.0;
    std::size_t count = 0;
    for (int y = 1; y < h - 1; ++y) {
        for (int x = 1; x < w / 2; ++x) {
            const Gradient g = sobel_at(img, x, y);
            const Gradient gr = sobel_at(img, w - 1 - x, y);
            // Gradient of the mirrored image at (x, y): x-component flips.
            const Gradient gm = {-gr.gx, gr.gy};

            const double mag = std::hypot(g.gx, g.gy);
            const double mag_m = std::hypot(gm.gx, gm.gy);
            if (mag < tau || mag_m < tau) continue;

            double c = (g.gx * gm.gx + g.gy * gm.gy) / (mag * mag_m);
            c = std::clamp(c, -1.0, 1.0);
            if (opts.doubled_angle) c = 2.0 * c * c - 1.0;
            sum += c;
            ++count;
        }
    }
    if (count == 0) {
        throw NoEdges("no gradient magnitude above the edge threshold");
    }
    return sum / static_cast<double>(count);
}

SymmetryScores symmetry_scores(const ImageF64& rectified, const SymmetryOptions& opts) {
    return {density_difference(rectified), edge_orientation_similarity(rectified, opts)};
}

}  // namespace facediv
