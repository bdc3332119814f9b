#pragma once

#include <cstdint>
#include <string>

#include "facediv/image.hpp"
#include "facediv/manifest.hpp"

namespace facediv::synth {

/// Hand-placed 68-point face in a 128x128 frame, mirror-symmetric about
/// x = 64 with integer coordinates. Eye centers land at (44,48) and
/// (84,48); inner canthi at (52,48) and (76,48).
KeypointSet68 canonical_keypoints();

/// The canonical keypoints mapped through an affine transform.
KeypointSet68 transform_keypoints(const KeypointSet68& k, const Affine2& t);

/// Similarity placing the canonical face into a larger frame.
Affine2 face_placement(Point2 center, double scale, double angle_radians);

struct FaceStyle {
    std::uint8_t skin_r = 200, skin_g = 150, skin_b = 120;
    std::uint8_t hair_r = 60, hair_g = 40, hair_b = 30;
    std::uint8_t lip_r = 170, lip_g = 90, lip_b = 90;
    std::uint32_t noise_seed = 1;
    int noise_amplitude = 6;  // per-channel, deterministic texture
};

/// Renders a synthetic face into an image frame: skin ellipse, brows,
/// eyes, nose shading and lips placed from the transformed keypoints,
/// plus seeded per-pixel noise.
ImageU8 render_face(int width, int height, const KeypointSet68& k, const FaceStyle& style);

/// Writes the bundled deterministic corpus: `faces` PNG images, two skin
/// masks and manifest.jsonl (with softmax, gender score and vote
/// annotations) under `dir`. Returns the manifest path.
std::string write_corpus(const std::string& dir, int faces = 12);

}  // namespace facediv::synth
