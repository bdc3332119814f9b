#include "facediv/contrast.hpp"

#include <cmath>

#include "facediv/skin_color.hpp"

namespace facediv {

namespace {

constexpr double kDenomEpsilon = 1e-9;

std::vector<Point2> ring_from_indices(const KeypointSet68& k, int first, int count) {
    std::vector<Point2> ring;
    ring.reserve(count);
    for (int i = first; i < first + count; ++i) ring.push_back(k[i]);
    return ring;
}

std::vector<Point2> scale_about_centroid(const std::vector<Point2>& poly, double factor) {
    Point2 c{0.0, 0.0};
    for (const auto& p : poly) {
        c.x += p.x;
        c.y += p.y;
    }
    c.x /= static_cast<double>(poly.size());
    c.y /= static_cast<double>(poly.size());

    std::vector<Point2> out;
    out.reserve(poly.size());
    for (const auto& p : poly) {
        out.push_back({c.x + factor * (p.x - c.x), c.y + factor * (p.y - c.y)});
    }
    return out;
}

RegionRings make_rings(std::vector<Point2> inner, double min_area) {
    if (polygon_area(inner) < min_area) {
        throw DegenerateGeometry("inner region polygon is degenerate");
    }
    RegionRings rings;
    rings.outer = scale_about_centroid(inner, 1.5);
    rings.inner = std::move(inner);
    return rings;
}

}  // namespace

std::vector<RegionRings> region_rings(const KeypointSet68& k, FacePart part,
                                      const ContrastOptions& opts) {
    switch (part) {
        case FacePart::lips:
            return {make_rings(ring_from_indices(k, 48, 12), opts.min_polygon_area)};
        case FacePart::eyes:
            return {make_rings(ring_from_indices(k, 36, 6), opts.min_polygon_area),
                    make_rings(ring_from_indices(k, 42, 6), opts.min_polygon_area)};
        case FacePart::eyebrows:
            return {make_rings(ring_from_indices(k, 17, 5), opts.min_polygon_area),
                    make_rings(ring_from_indices(k, 22, 5), opts.min_polygon_area)};
    }
    throw DegenerateGeometry("unknown face part");
}

ImageF64 encoded_channel(const LabImage& lab, LabChannel channel) {
    ImageF64 out(lab.width, lab.height);
    const std::size_t n = out.data.size();
    switch (channel) {
        case LabChannel::L:
            for (std::size_t i = 0; i < n; ++i) out.data[i] = lab.l[i] * (255.0 / 100.0);
            break;
        case LabChannel::a:
            for (std::size_t i = 0; i < n; ++i) out.data[i] = lab.a[i] + 128.0;
            break;
        case LabChannel::b:
            for (std::size_t i = 0; i < n; ++i) out.data[i] = lab.b[i] + 128.0;
            break;
    }
    return out;
}

double region_contrast(const LabImage& lab, const RegionRings& rings, LabChannel channel,
                       const ContrastOptions& opts) {
    const ImageF64 plane = encoded_channel(lab, channel);

    std::vector<std::uint8_t> inner_mask, outer_mask;
    fill_polygon(rings.inner, lab.width, lab.height, inner_mask);
    fill_polygon(rings.outer, lab.width, lab.height, outer_mask);

    double inner_sum = 0.0, annulus_sum = 0.0;
    std::size_t inner_n = 0, annulus_n = 0;
    for (std::size_t i = 0; i < inner_mask.size(); ++i) {
        if (inner_mask[i]) {
            inner_sum += plane.data[i];
            ++inner_n;
        } else if (outer_mask[i]) {
            annulus_sum += plane.data[i];
            ++annulus_n;
        }
    }
    if (inner_n == 0 || annulus_n == 0) {
        throw EmptyRegion("contrast region rasterized to zero pixels");
    }

    double outer_v = annulus_sum, inner_v = inner_sum;
    if (!opts.use_sums) {
        outer_v /= static_cast<double>(annulus_n);
        inner_v /= static_cast<double>(inner_n);
    }
    const double denom = outer_v + inner_v;
    if (std::abs(denom) < kDenomEpsilon) {
        throw NumericDegenerate("contrast denominator vanishes");
    }
    return (outer_v - inner_v) / denom;
}

namespace {

std::optional<double> part_contrast(const LabImage& lab, const std::vector<RegionRings>& rings,
                                    LabChannel channel, const ContrastOptions& opts) {
    try {
        double sum = 0.0;
        for (const auto& r : rings) sum += region_contrast(lab, r, channel, opts);
        return sum / static_cast<double>(rings.size());
    } catch (const Error&) {
        return std::nullopt;
    }
}

}  // namespace

ContrastVector contrast_vector(const ImageU8& rgb, const KeypointSet68& k,
                               const ContrastOptions& opts) {
    const LabImage lab = rgb_to_lab(rgb);
    ContrastVector out;

    auto compute_part = [&](FacePart part, std::optional<double>& l, std::optional<double>& a,
                            std::optional<double>& b) {
        std::vector<RegionRings> rings;
        try {
            rings = region_rings(k, part, opts);
        } catch (const Error&) {
            return;  // all three channels stay empty
        }
        l = part_contrast(lab, rings, LabChannel::L, opts);
        a = part_contrast(lab, rings, LabChannel::a, opts);
        b = part_contrast(lab, rings, LabChannel::b, opts);
    };

    compute_part(FacePart::lips, out.lips_l, out.lips_a, out.lips_b);
    compute_part(FacePart::eyes, out.eyes_l, out.eyes_a, out.eyes_b);
    compute_part(FacePart::eyebrows, out.eyebrows_l, out.eyebrows_a, out.eyebrows_b);
    return out;
}

}  // namespace facediv
