#include <doctest.h>

#include <random>

#include "facediv/geometry.hpp"
#include "test_helpers.hpp"

using namespace facediv;

TEST_CASE("derive_sto is the midpoint of ls and li") {
    CHECK(derive_sto({64, 90}, {64, 100}) == Point2{64, 95});
    CHECK(derive_sto({62, 90}, {66, 98}) == Point2{64, 94});
    CHECK(derive_sto({64, 95}, {64, 95}) == Point2{64, 95});
    CHECK_THROWS_AS(derive_sto({64, 100}, {64, 90}), DegenerateGeometry);
}

TEST_CASE("derive_tn projects the nasion onto the region top") {
    CHECK(derive_tn({64, 48}, 0.0) == Point2{64, 0});
    CHECK(derive_tn({60, 50}, 4.0) == Point2{60, 4});
}

TEST_CASE("map_keypoints places the named landmarks from the index table") {
    const KeypointSet68 k = synth::canonical_keypoints();
    const AnatomicalLandmarks lm = map_keypoints(k, 0.0);

    CHECK(lm.en_l == Point2{52, 48});
    CHECK(lm.ex_l == Point2{36, 48});
    CHECK(lm.en_r == Point2{76, 48});
    CHECK(lm.ex_r == Point2{92, 48});
    CHECK(lm.n == Point2{64, 48});
    CHECK(lm.cprime == Point2{64, 72});
    CHECK(lm.sn == Point2{64, 80});
    CHECK(lm.gn == Point2{64, 111});
    CHECK(lm.ch_l == Point2{48, 92});
    CHECK(lm.ch_r == Point2{80, 92});
    CHECK(lm.al_l == Point2{56, 78});
    CHECK(lm.al_r == Point2{72, 78});
    CHECK(lm.zy_l == Point2{25, 58});
    CHECK(lm.zy_r == Point2{103, 58});
    CHECK(lm.go_l == Point2{34, 88});
    CHECK(lm.go_r == Point2{94, 88});
    CHECK(lm.or_l == Point2{44, 36});
    CHECK(lm.or_r == Point2{84, 36});
    // Eyelid points are lid midpoints.
    CHECK(lm.ps_l == Point2{44, 45});
    CHECK(lm.pi_l == Point2{44, 51});

    // Derived points.
    CHECK(lm.tn == Point2{64, 0});
    CHECK(lm.sto == Point2{64, 93});
    CHECK(lm.sto.y == (lm.ls.y + lm.li.y) / 2.0);
}

TEST_CASE("map_keypoints rejects a left/right inverted face") {
    KeypointSet68 k = synth::canonical_keypoints();
    std::swap(k[39], k[42]);  // swap the inner canthi without re-indexing
    CHECK_THROWS_AS(map_keypoints(k), DegenerateGeometry);
}

TEST_CASE("map_keypoints is mirror-equivariant in exact arithmetic") {
    const KeypointSet68 k = synth::canonical_keypoints();
    const double axis = 64.0;
    const AnatomicalLandmarks lm = map_keypoints(k, 0.0);
    const AnatomicalLandmarks lm_m = map_keypoints(test::mirror_keypoints(k, axis), 0.0);

    auto mirrors = [&](Point2 orig, Point2 mirrored) {
        CHECK(mirrored.x == 2.0 * axis - orig.x);
        CHECK(mirrored.y == orig.y);
    };
    // L/R pairs swap and mirror; midline points just mirror.
    mirrors(lm.en_r, lm_m.en_l);
    mirrors(lm.en_l, lm_m.en_r);
    mirrors(lm.ex_r, lm_m.ex_l);
    mirrors(lm.ch_r, lm_m.ch_l);
    mirrors(lm.zy_r, lm_m.zy_l);
    mirrors(lm.go_r, lm_m.go_l);
    mirrors(lm.ps_r, lm_m.ps_l);
    mirrors(lm.pi_r, lm_m.pi_l);
    mirrors(lm.or_r, lm_m.or_l);
    mirrors(lm.sbal_r, lm_m.sbal_l);
    mirrors(lm.al_r, lm_m.al_l);
    mirrors(lm.cph_r, lm_m.cph_l);
    mirrors(lm.n, lm_m.n);
    mirrors(lm.sto, lm_m.sto);
    mirrors(lm.gn, lm_m.gn);
    mirrors(lm.tn, lm_m.tn);
}

TEST_CASE("map_keypoints is deterministic") {
    std::mt19937 rng(7);
    const KeypointSet68 base = synth::canonical_keypoints();
    for (int trial = 0; trial < 20; ++trial) {
        const Affine2 t = test::random_similarity(rng);
        const KeypointSet68 k = synth::transform_keypoints(base, t);
        if (!(t.apply(base[39]).x < t.apply(base[42]).x)) continue;  // flipped by rotation
        const AnatomicalLandmarks a = map_keypoints(k, 0.0);
        const AnatomicalLandmarks b = map_keypoints(k, 0.0);
        CHECK(a.sto == b.sto);
        CHECK(a.en_l == b.en_l);
        CHECK(a.gn == b.gn);
    }
}

TEST_CASE("affine inverse and composition round-trip") {
    Affine2 t;
    t.a = 1.2;
    t.b = -0.3;
    t.c = 0.3;
    t.d = 1.2;
    t.tx = 17.0;
    t.ty = -4.0;
    const Affine2 inv = t.inverse();
    const Point2 p{12.5, -3.25};
    const Point2 back = inv.apply(t.apply(p));
    CHECK(back.x == doctest::Approx(p.x).epsilon(1e-12));
    CHECK(back.y == doctest::Approx(p.y).epsilon(1e-12));

    const Affine2 id = t.compose(inv);
    CHECK(id.apply(p).x == doctest::Approx(p.x).epsilon(1e-9));
    CHECK(id.apply(p).y == doctest::Approx(p.y).epsilon(1e-9));
}
