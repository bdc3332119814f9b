#pragma once

#include <random>

#include "facediv/geometry.hpp"
#include "facediv/synthetic.hpp"

namespace facediv::test {

/// Mirrors a keypoint set about the vertical axis x = axis, applying the
/// standard left/right index permutation so the result is again a valid
/// 68-point face.
KeypointSet68 mirror_keypoints(const KeypointSet68& k, double axis);

/// Uniform similarity perturbation for property tests.
Affine2 random_similarity(std::mt19937& rng, double min_scale = 0.5, double max_scale = 2.0,
                          double max_shift = 200.0);

}  // namespace facediv::test
