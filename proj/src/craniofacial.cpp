#include "facediv/craniofacial.hpp"

namespace facediv {

namespace {

constexpr double kDenomEpsilon = 1e-6;  // px

double bilateral(double left, double right) { return (left + right) / 2.0; }

std::optional<double> safe_ratio(double num, double den) {
    if (den < kDenomEpsilon) return std::nullopt;
    return num / den;
}

}  // namespace

CranioDistances distances(const AnatomicalLandmarks& lm) {
    CranioDistances d;
    d.n_sto = distance(lm.n, lm.sto);
    d.ps_pi = bilateral(distance(lm.ps_l, lm.pi_l), distance(lm.ps_r, lm.pi_r));
    d.or_pi = bilateral(distance(lm.or_l, lm.pi_l), distance(lm.or_r, lm.pi_r));
    d.sn_cprime = distance(lm.sn, lm.cprime);
    d.sn_sto = distance(lm.sn, lm.sto);
    d.sto_li = distance(lm.sto, lm.li);
    d.cph_cph = distance(lm.cph_l, lm.cph_r);
    d.sbal_ls = bilateral(distance(lm.sbal_l, lm.ls), distance(lm.sbal_r, lm.ls));
    return d;
}

CranioAreas areas(const AnatomicalLandmarks& lm) {
    CranioAreas a;
    a.tn_n = distance(lm.tn, lm.n);
    a.tn_gn = distance(lm.tn, lm.gn);
    a.n_gn = distance(lm.n, lm.gn);
    a.sn_gn = distance(lm.sn, lm.gn);
    a.zy_zy = distance(lm.zy_l, lm.zy_r);
    a.go_go = distance(lm.go_l, lm.go_r);
    a.en_en = distance(lm.en_l, lm.en_r);
    a.en_ex = bilateral(distance(lm.en_l, lm.ex_l), distance(lm.en_r, lm.ex_r));
    a.ex_ex = distance(lm.ex_l, lm.ex_r);
    a.n_sn = distance(lm.n, lm.sn);
    a.al_al = distance(lm.al_l, lm.al_r);
    a.ch_ch = distance(lm.ch_l, lm.ch_r);
    return a;
}

CranioRatios ratios(const AnatomicalLandmarks& lm) {
    CranioRatios r;
    const double zy_zy = distance(lm.zy_l, lm.zy_r);
    const double go_go = distance(lm.go_l, lm.go_r);
    const double en_en = distance(lm.en_l, lm.en_r);
    const double ex_ex = distance(lm.ex_l, lm.ex_r);
    const double n_sn = distance(lm.n, lm.sn);
    const double sto_li = distance(lm.sto, lm.li);

    r.facial_index = safe_ratio(distance(lm.n, lm.gn), zy_zy);
    r.mandibular_index = safe_ratio(distance(lm.sto, lm.gn), go_go);
    r.intercanthal_index = safe_ratio(en_en, ex_ex);

    const auto owl = safe_ratio(distance(lm.ex_l, lm.en_l), en_en);
    const auto owr = safe_ratio(distance(lm.ex_r, lm.en_r), en_en);
    if (owl && owr) r.orbital_width_index = bilateral(*owl, *owr);

    const auto efl = safe_ratio(distance(lm.ps_l, lm.pi_l), distance(lm.ex_l, lm.en_l));
    const auto efr = safe_ratio(distance(lm.ps_r, lm.pi_r), distance(lm.ex_r, lm.en_r));
    if (efl && efr) r.eye_fissure_index = bilateral(*efl, *efr);

    r.nasal_index = safe_ratio(distance(lm.al_l, lm.al_r), n_sn);
    r.vermilion_height_index = safe_ratio(distance(lm.ls, lm.sto), sto_li);
    r.mouth_face_width_index = safe_ratio(distance(lm.ch_l, lm.ch_r), zy_zy);
    return r;
}

}  // namespace facediv
