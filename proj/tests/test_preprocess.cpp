#include <doctest.h>

#include <random>

#include "facediv/preprocess.hpp"
#include "facediv/synthetic.hpp"
#include "test_helpers.hpp"

using namespace facediv;

namespace {

FaceRecord make_record(double bw, double bh, double iod_target, int pose) {
    // Scale the canonical face so its IOD (40 in canonical units) matches.
    FaceRecord r;
    r.face_id = "t";
    r.bbox = {0, 0, bw, bh};
    r.pose_class = pose;
    const double s = iod_target / 40.0;
    const Affine2 t = synth::face_placement({160, 160}, s, 0.0);
    r.keypoints = synth::transform_keypoints(synth::canonical_keypoints(), t);
    return r;
}

}  // namespace

TEST_CASE("quality_filter names the first failing rule") {
    const QualityPolicy p;
    SUBCASE("undersized box") {
        const auto d = quality_filter(make_record(49, 60, 40, 0), p);
        CHECK_FALSE(d.accepted);
        CHECK(d.reason == RejectReason::size);
    }
    SUBCASE("low iod") {
        const auto d = quality_filter(make_record(80, 80, 29.9, 0), p);
        CHECK_FALSE(d.accepted);
        CHECK(d.reason == RejectReason::iod);
    }
    SUBCASE("rotated pose") {
        const auto d = quality_filter(make_record(80, 80, 30, 1), p);
        CHECK_FALSE(d.accepted);
        CHECK(d.reason == RejectReason::pose);
    }
    SUBCASE("boundary values pass") {
        const auto d = quality_filter(make_record(50, 50, 30, 0), p);
        CHECK(d.accepted);
    }
}

TEST_CASE("quality_filter is monotone in the policy thresholds") {
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> side(20, 120);
    std::uniform_real_distribution<double> iod(10, 60);
    std::uniform_int_distribution<int> pose(0, 4);
    std::uniform_real_distribution<double> thr_side(20, 100);
    std::uniform_real_distribution<double> thr_iod(10, 50);

    for (int trial = 0; trial < 200; ++trial) {
        const FaceRecord r = make_record(side(rng), side(rng), iod(rng), pose(rng));
        QualityPolicy strict;
        strict.min_face_side = thr_side(rng);
        strict.min_iod = thr_iod(rng);

        QualityPolicy loose = strict;
        loose.min_face_side -= 5.0;
        loose.min_iod -= 5.0;
        loose.allowed_poses = {0, 1, 2, 3, 4};

        if (quality_filter(r, strict).accepted) {
            CHECK(quality_filter(r, loose).accepted);
        }
    }
}

TEST_CASE("eye_centers is the centroid of the eye rings") {
    SUBCASE("regular hexagon centered at (52,48)") {
        KeypointSet68 k = synth::canonical_keypoints();
        const Point2 c{52, 48};
        for (int i = 0; i < 6; ++i) {
            const double a = 2.0 * 3.14159265358979323846 * i / 6.0;
            k[36 + i] = {c.x + 5.0 * std::cos(a), c.y + 5.0 * std::sin(a)};
        }
        const auto [l, r] = eye_centers(k);
        CHECK(l.x == doctest::Approx(52).epsilon(1e-12));
        CHECK(l.y == doctest::Approx(48).epsilon(1e-12));
        (void)r;
    }
    SUBCASE("bundled face centroids") {
        const auto [l, r] = eye_centers(synth::canonical_keypoints());
        // Hand arithmetic over the six ring points of each eye.
        CHECK(l == Point2{44, 48});
        CHECK(r == Point2{84, 48});
        CHECK(inter_ocular_distance(synth::canonical_keypoints()) == doctest::Approx(40.0));
    }
    SUBCASE("mirrored face swaps and mirrors the centers") {
        const KeypointSet68 k = synth::canonical_keypoints();
        const auto [l, r] = eye_centers(k);
        const auto [lm, rm] = eye_centers(test::mirror_keypoints(k, 64.0));
        CHECK(lm.x == 2.0 * 64.0 - r.x);
        CHECK(rm.x == 2.0 * 64.0 - l.x);
        CHECK(lm.y == r.y);
    }
    SUBCASE("coincident centers are degenerate") {
        KeypointSet68 k = synth::canonical_keypoints();
        for (int i = 42; i < 48; ++i) k[i] = k[i - 6];  // right eye onto left
        CHECK_THROWS_AS(eye_centers(k), DegenerateGeometry);
    }
}

TEST_CASE("rectify maps the eye centers onto the anchors") {
    const RectifyAnchors anchors;
    const KeypointSet68 base = synth::canonical_keypoints();

    SUBCASE("eyes already at anchors give the identity") {
        const KeypointSet68 k =
            synth::transform_keypoints(base, similarity_from_eye_centers(base, anchors));
        const Affine2 t = similarity_from_eye_centers(k, anchors);
        CHECK(t.a == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(t.b == doctest::Approx(0.0).epsilon(1e-12));
        CHECK(t.tx == doctest::Approx(0.0).epsilon(1e-9));
        CHECK(t.ty == doctest::Approx(0.0).epsilon(1e-9));
    }

    SUBCASE("pre-rotated input still hits the anchors") {
        std::mt19937 rng(23);
        for (int trial = 0; trial < 100; ++trial) {
            const Affine2 perturb = test::random_similarity(rng);
            const KeypointSet68 k = synth::transform_keypoints(base, perturb);
            const Affine2 t = similarity_from_eye_centers(k, anchors);
            const auto [l, r] = eye_centers(k);
            const Point2 tl = t.apply(l);
            const Point2 tr = t.apply(r);
            const Point2 want_l = tl.x <= tr.x ? anchors.left : anchors.right;
            const Point2 want_r = tl.x <= tr.x ? anchors.right : anchors.left;
            CHECK(distance(tl, want_l) < 0.5);
            CHECK(distance(tr, want_r) < 0.5);
        }
    }

    SUBCASE("warped image carries the transform and the centers") {
        const ImageU8 img = synth::render_face(128, 128, base, {});
        const RectifiedFace rf = rectify(img, base, anchors);
        CHECK(rf.image.width == 128);
        CHECK(rf.image.height == 128);
        CHECK(distance(rf.eye_centers_after.first, anchors.left) < 0.5);
        CHECK(distance(rf.eye_centers_after.second, anchors.right) < 0.5);
    }
}

TEST_CASE("context_crop expands about the bbox center") {
    ImageU8 img(400, 400, 3);
    for (int y = 0; y < 400; ++y)
        for (int x = 0; x < 400; ++x)
            for (int c = 0; c < 3; ++c) img.at(x, y, c) = static_cast<std::uint8_t>((x + y + c) % 256);

    SUBCASE("50 percent expansion arithmetic") {
        const ImageU8 crop = context_crop(img, {100, 100, 100, 100}, 0.5);
        CHECK(crop.width == 150);
        CHECK(crop.height == 150);
        // Top-left of the crop samples source pixel (75,75).
        CHECK(crop.at(0, 0, 0) == img.at(75, 75, 0));
        CHECK(crop.at(149, 149, 2) == img.at(224, 224, 2));
    }
    SUBCASE("zero expansion is the plain bbox crop") {
        const ImageU8 crop = context_crop(img, {100, 100, 100, 100}, 0.0);
        CHECK(crop.width == 100);
        CHECK(crop.height == 100);
        CHECK(crop.at(0, 0, 0) == img.at(100, 100, 0));
    }
    SUBCASE("corner bbox pads with black") {
        const ImageU8 crop = context_crop(img, {0, 0, 100, 100}, 0.5);
        CHECK(crop.width == 150);
        CHECK(crop.at(0, 0, 0) == 0);   // outside the source
        CHECK(crop.at(0, 0, 1) == 0);
        CHECK(crop.at(149, 149, 0) == img.at(124, 124, 0));
    }
}
