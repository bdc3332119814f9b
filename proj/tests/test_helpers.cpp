#include "test_helpers.hpp"

#include <numbers>

namespace facediv::test {

namespace {

// Index permutation of the 68-point convention under a horizontal flip.
constexpr int kMirrorIndex[68] = {
    // jawline reverses
    16, 15, 14, 13, 12, 11, 10, 9, 8, 7, 6, 5, 4, 3, 2, 1, 0,
    // brows swap sides and reverse
    26, 25, 24, 23, 22, 21, 20, 19, 18, 17,
    // nose bridge keeps order, nostril base reverses
    27, 28, 29, 30, 35, 34, 33, 32, 31,
    // eyes swap: 36..41 <-> 45,44,43,42,47,46
    45, 44, 43, 42, 47, 46, 39, 38, 37, 36, 41, 40,
    // outer mouth
    54, 53, 52, 51, 50, 49, 48, 59, 58, 57, 56, 55,
    // inner mouth
    64, 63, 62, 61, 60, 67, 66, 65,
};

}  // namespace

KeypointSet68 mirror_keypoints(const KeypointSet68& k, double axis) {
    KeypointSet68 out;
    for (int i = 0; i < 68; ++i) {
        const Point2 p = k[kMirrorIndex[i]];
        out[i] = {2.0 * axis - p.x, p.y};
    }
    return out;
}

Affine2 random_similarity(std::mt19937& rng, double min_scale, double max_scale,
                          double max_shift) {
    std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
    std::uniform_real_distribution<double> scale(min_scale, max_scale);
    std::uniform_real_distribution<double> shift(0.0, max_shift);
    const double a = angle(rng);
    const double s = scale(rng);
    Affine2 t;
    t.a = s * std::cos(a);
    t.b = -s * std::sin(a);
    t.c = s * std::sin(a);
    t.d = s * std::cos(a);
    t.tx = shift(rng);
    t.ty = shift(rng);
    return t;
}

}  // namespace facediv::test
