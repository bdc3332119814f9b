#include <doctest.h>

#include <cmath>
#include <random>

#include "facediv/craniofacial.hpp"
#include "facediv/synthetic.hpp"
#include "test_helpers.hpp"

using namespace facediv;

namespace {

AnatomicalLandmarks bundled_landmarks() {
    return map_keypoints(synth::canonical_keypoints(), 0.0);
}

AnatomicalLandmarks transformed(const AnatomicalLandmarks& lm, const Affine2& t) {
    AnatomicalLandmarks out = lm;
    for (Point2* p : {&out.n, &out.tn, &out.cprime, &out.sn, &out.sbal_l, &out.sbal_r, &out.al_l,
                      &out.al_r, &out.cph_l, &out.cph_r, &out.ls, &out.sto, &out.li, &out.ch_l,
                      &out.ch_r, &out.gn, &out.go_l, &out.go_r, &out.zy_l, &out.zy_r, &out.en_l,
                      &out.en_r, &out.ex_l, &out.ex_r, &out.ps_l, &out.ps_r, &out.pi_l, &out.pi_r,
                      &out.or_l, &out.or_r}) {
        *p = t.apply(*p);
    }
    return out;
}

AnatomicalLandmarks mirrored_landmarks(double axis) {
    return map_keypoints(test::mirror_keypoints(synth::canonical_keypoints(), axis), 0.0);
}

std::vector<double> all_measures(const AnatomicalLandmarks& lm) {
    const CranioDistances d = distances(lm);
    const CranioAreas a = areas(lm);
    const CranioRatios r = ratios(lm);
    std::vector<double> v = {d.n_sto,  d.ps_pi, d.or_pi, d.sn_cprime, d.sn_sto, d.sto_li,
                             d.cph_cph, d.sbal_ls, a.tn_n, a.tn_gn, a.n_gn, a.sn_gn,
                             a.zy_zy,  a.go_go, a.en_en, a.en_ex, a.ex_ex, a.n_sn,
                             a.al_al,  a.ch_ch};
    for (const auto& opt : {r.facial_index, r.mandibular_index, r.intercanthal_index,
                            r.orbital_width_index, r.eye_fissure_index, r.nasal_index,
                            r.vermilion_height_index, r.mouth_face_width_index}) {
        v.push_back(opt.value());
    }
    return v;
}

}  // namespace

TEST_CASE("distances on hand-placed landmarks") {
    AnatomicalLandmarks lm{};
    SUBCASE("vertical segment") {
        lm.n = {64, 40};
        lm.sto = {64, 95};
        CHECK(distances(lm).n_sto == doctest::Approx(55.0).epsilon(1e-12));
    }
    SUBCASE("horizontal segment") {
        lm.cph_l = {60, 88};
        lm.cph_r = {68, 88};
        CHECK(distances(lm).cph_cph == doctest::Approx(8.0).epsilon(1e-12));
    }
    SUBCASE("bilateral mean") {
        lm.ps_l = {50, 46};
        lm.pi_l = {50, 50};
        lm.ps_r = {78, 46};
        lm.pi_r = {78, 51};
        CHECK(distances(lm).ps_pi == doctest::Approx(4.5).epsilon(1e-12));
    }
}

TEST_CASE("areas on hand-placed landmarks") {
    AnatomicalLandmarks lm{};
    lm.en_l = {52, 48};
    lm.en_r = {76, 48};
    lm.ex_l = {36, 48};
    lm.ex_r = {92, 48};
    lm.tn = {64, 0};
    lm.gn = {64, 120};
    const CranioAreas a = areas(lm);
    CHECK(a.en_en == doctest::Approx(24.0).epsilon(1e-12));
    CHECK(a.ex_ex == doctest::Approx(56.0).epsilon(1e-12));
    CHECK(a.ex_ex >= a.en_en);
    CHECK(a.tn_gn == doctest::Approx(120.0).epsilon(1e-12));
}

TEST_CASE("ratios follow the quotient definitions and degrade per-field") {
    SUBCASE("quotients") {
        AnatomicalLandmarks lm = bundled_landmarks();
        const CranioRatios r = ratios(lm);
        CHECK(r.facial_index.value() ==
              doctest::Approx(distance(lm.n, lm.gn) / distance(lm.zy_l, lm.zy_r)).epsilon(1e-12));
        CHECK(r.intercanthal_index.value() == doctest::Approx(24.0 / 56.0).epsilon(1e-12));
    }
    SUBCASE("constructed half ratio") {
        AnatomicalLandmarks lm = bundled_landmarks();
        lm.en_l = {40, 48};
        lm.en_r = {68, 48};  // en_en = 28 = ex_ex/2
        lm.ex_l = {36, 48};
        lm.ex_r = {92, 48};
        CHECK(ratios(lm).intercanthal_index.value() == doctest::Approx(0.5).epsilon(1e-12));
    }
    SUBCASE("zero face width invalidates only the dependent ratios") {
        AnatomicalLandmarks lm = bundled_landmarks();
        lm.zy_l = lm.zy_r = {64, 58};
        const CranioRatios r = ratios(lm);
        CHECK_FALSE(r.facial_index.has_value());
        CHECK_FALSE(r.mouth_face_width_index.has_value());
        CHECK(r.nasal_index.has_value());
        CHECK(r.intercanthal_index.has_value());
    }
}

TEST_CASE("bundled synthetic face measures match hand-computed values") {
    const AnatomicalLandmarks lm = bundled_landmarks();
    const CranioDistances d = distances(lm);
    const CranioAreas a = areas(lm);
    const CranioRatios r = ratios(lm);

    CHECK(d.n_sto == doctest::Approx(45.0).epsilon(1e-9));
    CHECK(d.ps_pi == doctest::Approx(6.0).epsilon(1e-9));
    CHECK(d.or_pi == doctest::Approx(15.0).epsilon(1e-9));
    CHECK(d.sn_cprime == doctest::Approx(8.0).epsilon(1e-9));
    CHECK(d.sn_sto == doctest::Approx(13.0).epsilon(1e-9));
    CHECK(d.sto_li == doctest::Approx(5.0).epsilon(1e-9));
    CHECK(d.cph_cph == doctest::Approx(12.0).epsilon(1e-9));
    CHECK(d.sbal_ls == doctest::Approx(std::sqrt(97.0)).epsilon(1e-9));

    CHECK(a.tn_n == doctest::Approx(48.0).epsilon(1e-9));
    CHECK(a.tn_gn == doctest::Approx(111.0).epsilon(1e-9));
    CHECK(a.n_gn == doctest::Approx(63.0).epsilon(1e-9));
    CHECK(a.sn_gn == doctest::Approx(31.0).epsilon(1e-9));
    CHECK(a.zy_zy == doctest::Approx(78.0).epsilon(1e-9));
    CHECK(a.go_go == doctest::Approx(60.0).epsilon(1e-9));
    CHECK(a.en_en == doctest::Approx(24.0).epsilon(1e-9));
    CHECK(a.en_ex == doctest::Approx(16.0).epsilon(1e-9));
    CHECK(a.ex_ex == doctest::Approx(56.0).epsilon(1e-9));
    CHECK(a.n_sn == doctest::Approx(32.0).epsilon(1e-9));
    CHECK(a.al_al == doctest::Approx(16.0).epsilon(1e-9));
    CHECK(a.ch_ch == doctest::Approx(32.0).epsilon(1e-9));

    CHECK(r.facial_index.value() == doctest::Approx(63.0 / 78.0).epsilon(1e-9));
    CHECK(r.mandibular_index.value() == doctest::Approx(18.0 / 60.0).epsilon(1e-9));
    CHECK(r.intercanthal_index.value() == doctest::Approx(24.0 / 56.0).epsilon(1e-9));
    CHECK(r.orbital_width_index.value() == doctest::Approx(16.0 / 24.0).epsilon(1e-9));
    CHECK(r.eye_fissure_index.value() == doctest::Approx(6.0 / 16.0).epsilon(1e-9));
    CHECK(r.nasal_index.value() == doctest::Approx(16.0 / 32.0).epsilon(1e-9));
    CHECK(r.vermilion_height_index.value() == doctest::Approx(5.0 / 5.0).epsilon(1e-9));
    CHECK(r.mouth_face_width_index.value() == doctest::Approx(32.0 / 78.0).epsilon(1e-9));
}

TEST_CASE("translation leaves every measure unchanged exactly") {
    const AnatomicalLandmarks lm = bundled_landmarks();
    Affine2 shift;
    shift.tx = 37.0;
    shift.ty = -12.0;
    const auto before = all_measures(lm);
    const auto after = all_measures(transformed(lm, shift));
    REQUIRE(before.size() == after.size());
    for (std::size_t i = 0; i < before.size(); ++i) {
        CHECK(before[i] == after[i]);
    }
}

TEST_CASE("rotation preserves distances; scale multiplies them and fixes ratios") {
    const AnatomicalLandmarks lm = bundled_landmarks();
    std::mt19937 rng(5);
    std::uniform_real_distribution<double> angle(-3.0, 3.0);
    std::uniform_real_distribution<double> scale(0.25, 4.0);

    for (int trial = 0; trial < 25; ++trial) {
        Affine2 rot;
        const double th = angle(rng);
        rot.a = std::cos(th);
        rot.b = -std::sin(th);
        rot.c = std::sin(th);
        rot.d = std::cos(th);
        const auto base = all_measures(lm);
        const auto rotated = all_measures(transformed(lm, rot));
        for (std::size_t i = 0; i < base.size(); ++i) {
            CHECK(rotated[i] == doctest::Approx(base[i]).epsilon(1e-9));
        }

        const double s = scale(rng);
        Affine2 sc;
        sc.a = sc.d = s;
        const auto scaled = all_measures(transformed(lm, sc));
        for (std::size_t i = 0; i < 20; ++i) {  // distances and areas scale
            CHECK(scaled[i] == doctest::Approx(s * base[i]).epsilon(1e-9));
        }
        for (std::size_t i = 20; i < base.size(); ++i) {  // ratios do not
            CHECK(scaled[i] == doctest::Approx(base[i]).epsilon(1e-9));
        }
    }
}

TEST_CASE("mirroring leaves every averaged bilateral measure unchanged") {
    const AnatomicalLandmarks lm = bundled_landmarks();
    const AnatomicalLandmarks lm_m = mirrored_landmarks(200.0);
    const auto a = all_measures(lm);
    const auto b = all_measures(lm_m);
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i] == doctest::Approx(b[i]).epsilon(1e-12));
    }
}
