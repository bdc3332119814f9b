#include "facediv/geometry.hpp"

#include <cmath>

namespace facediv {

Affine2 Affine2::inverse() const {
    const double det = a * d - b * c;
    if (std::abs(det) < 1e-300) {
        throw DegenerateGeometry("affine transform is singular");
    }
    Affine2 inv;
    inv.a = d / det;
    inv.b = -b / det;
    inv.c = -c / det;
    inv.d = a / det;
    inv.tx = -(inv.a * tx + inv.b * ty);
    inv.ty = -(inv.c * tx + inv.d * ty);
    return inv;
}

Affine2 Affine2::compose(const Affine2& o) const {
    Affine2 r;
    r.a = a * o.a + b * o.c;
    r.b = a * o.b + b * o.d;
    r.c = c * o.a + d * o.c;
    r.d = c * o.b + d * o.d;
    r.tx = a * o.tx + b * o.ty + tx;
    r.ty = c * o.tx + d * o.ty + ty;
    return r;
}

bool KeypointSet68::all_finite() const {
    for (const auto& p : points) {
        if (!std::isfinite(p.x) || !std::isfinite(p.y)) return false;
    }
    return true;
}

Point2 derive_tn(Point2 n, double region_top_y) {
    return {n.x, region_top_y};
}

Point2 derive_sto(Point2 ls, Point2 li) {
    if (ls.y > li.y) {
        throw DegenerateGeometry("labiale superius lies below labiale inferius");
    }
    return midpoint(ls, li);
}

AnatomicalLandmarks map_keypoints(const KeypointSet68& k, double region_top_y) {
    using namespace landmark_map;
    AnatomicalLandmarks lm;

    lm.n = k[kNasion];
    lm.cprime = k[kPronasale];
    lm.sn = k[kSubnasale];
    lm.sbal_l = k[kSubalareL];
    lm.sbal_r = k[kSubalareR];
    lm.al_l = k[kAlareL];
    lm.al_r = k[kAlareR];
    lm.cph_l = k[kCphL];
    lm.cph_r = k[kCphR];
    lm.ls = k[kLabialeSup];
    lm.li = k[kLabialeInf];
    lm.ch_l = k[kChelionL];
    lm.ch_r = k[kChelionR];
    lm.gn = k[kGnathion];
    lm.go_l = k[kGonionL];
    lm.go_r = k[kGonionR];
    lm.zy_l = k[kZygionL];
    lm.zy_r = k[kZygionR];
    lm.en_l = k[kEndocanthionL];
    lm.en_r = k[kEndocanthionR];
    lm.ex_l = k[kExocanthionL];
    lm.ex_r = k[kExocanthionR];
    lm.ps_l = midpoint(k[kUpperLidL1], k[kUpperLidL2]);
    lm.ps_r = midpoint(k[kUpperLidR1], k[kUpperLidR2]);
    lm.pi_l = midpoint(k[kLowerLidL1], k[kLowerLidL2]);
    lm.pi_r = midpoint(k[kLowerLidR1], k[kLowerLidR2]);
    lm.or_l = k[kOrbitaleL];
    lm.or_r = k[kOrbitaleR];

    lm.tn = derive_tn(lm.n, region_top_y);
    lm.sto = derive_sto(lm.ls, lm.li);

    if (!(lm.en_l.x < lm.en_r.x)) {
        throw DegenerateGeometry("inner eye corners are not left/right oriented");
    }
    return lm;
}

}  // namespace facediv
