#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <optional>
#include <string>

#include "facediv/errors.hpp"

namespace facediv {

/// A point in image coordinates: x grows rightward, y grows downward.
struct Point2 {
    double x = 0.0;
    double y = 0.0;

    friend Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
    friend Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
    friend Point2 operator*(double s, Point2 p) { return {s * p.x, s * p.y}; }
    friend bool operator==(Point2 a, Point2 b) { return a.x == b.x && a.y == b.y; }
};

inline double distance(Point2 a, Point2 b) { return std::hypot(a.x - b.x, a.y - b.y); }
inline Point2 midpoint(Point2 a, Point2 b) { return {(a.x + b.x) / 2.0, (a.y + b.y) / 2.0}; }

/// 2x3 affine transform: p' = [a b; c d] * p + [tx ty].
struct Affine2 {
    double a = 1.0, b = 0.0, tx = 0.0;
    double c = 0.0, d = 1.0, ty = 0.0;

    Point2 apply(Point2 p) const {
        return {a * p.x + b * p.y + tx, c * p.x + d * p.y + ty};
    }

    static Affine2 identity() { return {}; }

    /// Inverse transform. Throws DegenerateGeometry if the matrix is singular.
    Affine2 inverse() const;

    /// Composition: apply `other` first, then this.
    Affine2 compose(const Affine2& other) const;
};

/// The 68 facial keypoints in the standard annotation order:
/// 0-16 jawline, 17-26 brows, 27-35 nose, 36-47 eyes, 48-67 mouth.
struct KeypointSet68 {
    std::array<Point2, 68> points{};

    Point2& operator[](std::size_t i) { return points[i]; }
    const Point2& operator[](std::size_t i) const { return points[i]; }

    bool all_finite() const;
};

/// The 19 named anatomical landmarks plus the two derived points.
/// Left/right is in image coordinates: *_l has the smaller x.
struct AnatomicalLandmarks {
    Point2 n;        // nasion
    Point2 tn;       // derived: topmost point vertically above n
    Point2 cprime;   // pronasale (nose tip)
    Point2 sn;       // subnasale
    Point2 sbal_l, sbal_r;  // subalare
    Point2 al_l, al_r;      // alare
    Point2 cph_l, cph_r;    // crista philtre
    Point2 ls;       // labiale superius
    Point2 sto;      // derived: stomion
    Point2 li;       // labiale inferius
    Point2 ch_l, ch_r;      // chelion (mouth corners)
    Point2 gn;       // gnathion (chin bottom)
    Point2 go_l, go_r;      // gonion (jaw angle)
    Point2 zy_l, zy_r;      // zygion (cheekbone width)
    Point2 en_l, en_r;      // endocanthion (inner eye corner)
    Point2 ex_l, ex_r;      // exocanthion (outer eye corner)
    Point2 ps_l, ps_r;      // palpebrale superius (upper eyelid)
    Point2 pi_l, pi_r;      // palpebrale inferius (lower eyelid)
    Point2 or_l, or_r;      // orbitale proxy (brow point above the eye)
};

/// Auxiliary per-face inputs and one face record are defined in
/// annotation_stats.hpp / record.hpp; geometry stays self-contained.

/// Index mapping from the 68-point convention to the named landmarks.
/// Versioned so emitted tables can be compared across releases.
namespace landmark_map {

inline constexpr const char* kVersion = "facediv-landmarks-1";

inline constexpr int kNasion = 27;
inline constexpr int kPronasale = 30;
inline constexpr int kSubnasale = 33;
inline constexpr int kSubalareL = 32, kSubalareR = 34;
inline constexpr int kAlareL = 31, kAlareR = 35;
inline constexpr int kCphL = 50, kCphR = 52;
inline constexpr int kLabialeSup = 51;
inline constexpr int kLabialeInf = 57;
inline constexpr int kChelionL = 48, kChelionR = 54;
inline constexpr int kGnathion = 8;
inline constexpr int kGonionL = 4, kGonionR = 12;
inline constexpr int kZygionL = 1, kZygionR = 15;
inline constexpr int kEndocanthionL = 39, kEndocanthionR = 42;
inline constexpr int kExocanthionL = 36, kExocanthionR = 45;
// Eyelid points are midpoints of the two lid keypoints per eye.
inline constexpr int kUpperLidL1 = 37, kUpperLidL2 = 38;
inline constexpr int kUpperLidR1 = 43, kUpperLidR2 = 44;
inline constexpr int kLowerLidL1 = 40, kLowerLidL2 = 41;
inline constexpr int kLowerLidR1 = 46, kLowerLidR2 = 47;
// Orbitale proxy: mid-brow point directly above each eye.
inline constexpr int kOrbitaleL = 19, kOrbitaleR = 24;
// Philtrum keypoint used by the symmetry rectification.
inline constexpr int kPhiltrum = 33;

}  // namespace landmark_map

/// tn: vertical projection of the nasion onto the top of the rectified
/// face region.
Point2 derive_tn(Point2 n, double region_top_y);

/// sto: midpoint of labiale superius and inferius.
/// Throws DegenerateGeometry when ls lies below li.
Point2 derive_sto(Point2 ls, Point2 li);

/// Maps 68 keypoints to the named landmark set. `region_top_y` is the top
/// edge of the rectified face region (0 for a full rectified crop).
/// Throws DegenerateGeometry if the result is not left/right consistent.
AnatomicalLandmarks map_keypoints(const KeypointSet68& k, double region_top_y = 0.0);

}  // namespace facediv
