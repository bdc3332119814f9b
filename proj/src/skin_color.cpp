#include "facediv/skin_color.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace facediv {

namespace {

// IEC 61966-2-1 sRGB primaries, D65 white point.
constexpr double kM[3][3] = {{0.4124564, 0.3575761, 0.1804375},
                             {0.2126729, 0.7151522, 0.0721750},
                             {0.0193339, 0.1191920, 0.9503041}};
constexpr double kXn = 0.95047, kYn = 1.0, kZn = 1.08883;
constexpr double kDelta = 6.0 / 29.0;

double srgb_to_linear(std::uint8_t v8) {
    const double v = v8 / 255.0;
    return v <= 0.04045 ? v / 12.92 : std::pow((v + 0.055) / 1.055, 2.4);
}

double lab_f(double t) {
    return t > kDelta * kDelta * kDelta ? std::cbrt(t)
                                        : t / (3.0 * kDelta * kDelta) + 4.0 / 29.0;
}

}  // namespace

LabPixel rgb_to_lab(std::uint8_t r8, std::uint8_t g8, std::uint8_t b8) {
    const double r = srgb_to_linear(r8);
    const double g = srgb_to_linear(g8);
    const double b = srgb_to_linear(b8);

    const double x = kM[0][0] * r + kM[0][1] * g + kM[0][2] * b;
    const double y = kM[1][0] * r + kM[1][1] * g + kM[1][2] * b;
    const double z = kM[2][0] * r + kM[2][1] * g + kM[2][2] * b;

    const double fx = lab_f(x / kXn);
    const double fy = lab_f(y / kYn);
    const double fz = lab_f(z / kZn);

    return {116.0 * fy - 16.0, 500.0 * (fx - fy), 200.0 * (fy - fz)};
}

LabImage rgb_to_lab(const ImageU8& rgb) {
    LabImage out(rgb.width, rgb.height);
    for (int y = 0; y < rgb.height; ++y) {
        for (int x = 0; x < rgb.width; ++x) {
            const LabPixel p = rgb.channels >= 3
                                   ? rgb_to_lab(rgb.at(x, y, 0), rgb.at(x, y, 1), rgb.at(x, y, 2))
                                   : rgb_to_lab(rgb.at(x, y), rgb.at(x, y), rgb.at(x, y));
            const std::size_t i = out.index(x, y);
            out.l[i] = p.l;
            out.a[i] = p.a;
            out.b[i] = p.b;
        }
    }
    return out;
}

std::optional<double> ita_pixel(const LabPixel& p) {
    if (p.b == 0.0) {
        if (p.l > 50.0) return 90.0;
        if (p.l < 50.0) return -90.0;
        return std::nullopt;  // angle undefined at the origin
    }
    return std::atan((p.l - 50.0) / p.b) * 180.0 / std::numbers::pi;
}

std::vector<Point2> ita_region_polygon(const KeypointSet68& k, ItaRegion region,
                                       int /*image_width*/, int image_height) {
    (void)image_height;
    switch (region) {
        case ItaRegion::forehead: {
            // Brow line as the bottom edge, image top as the cap.
            std::vector<Point2> poly;
            for (int i = 17; i <= 26; ++i) poly.push_back(k[i]);
            poly.push_back({k[26].x, 0.0});
            poly.push_back({k[17].x, 0.0});
            return poly;
        }
        case ItaRegion::cheek_l:
            return {k[36], k[41], k[40], k[39], k[31], k[4], k[3], k[2], k[1]};
        case ItaRegion::cheek_r:
            return {k[45], k[46], k[47], k[42], k[35], k[12], k[13], k[14], k[15]};
        case ItaRegion::chin:
            return {k[5],  k[6],  k[7],  k[8],  k[9],  k[10],
                    k[11], k[55], k[56], k[57], k[58], k[59]};
    }
    return {};
}

std::optional<double> ita_peak(const std::vector<double>& values, double bin_degrees) {
    if (values.empty()) return std::nullopt;
    const int nbins = static_cast<int>(std::ceil(180.0 / bin_degrees));
    std::vector<std::size_t> counts(nbins, 0);
    std::vector<double> sums(nbins, 0.0);
    for (double v : values) {
        int idx = static_cast<int>(std::floor((v + 90.0) / bin_degrees));
        idx = std::clamp(idx, 0, nbins - 1);
        counts[idx] += 1;
        sums[idx] += v;
    }
    // Modal bin, ties toward the lower bin; peak = mean of its members.
    int best = 0;
    for (int i = 1; i < nbins; ++i) {
        if (counts[i] > counts[best]) best = i;
    }
    if (counts[best] == 0) return std::nullopt;
    return sums[best] / static_cast<double>(counts[best]);
}

namespace {

constexpr double kNoIta = std::numeric_limits<double>::quiet_NaN();

std::vector<double> smooth_region(const ImageF64& ita_raster,
                                  const std::vector<std::uint8_t>& region_mask, int width,
                                  int height, int window) {
    const int r = window / 2;
    std::vector<double> smoothed;
    for (int y = 0; y < height; ++y) {
        for (int x = 0; x < width; ++x) {
            const std::size_t i = static_cast<std::size_t>(y) * width + x;
            if (!region_mask[i] || std::isnan(ita_raster.data[i])) continue;
            double sum = 0.0;
            std::size_t n = 0;
            for (int dy = -r; dy <= r; ++dy) {
                const int yy = y + dy;
                if (yy < 0 || yy >= height) continue;
                for (int dx = -r; dx <= r; ++dx) {
                    const int xx = x + dx;
                    if (xx < 0 || xx >= width) continue;
                    const std::size_t j = static_cast<std::size_t>(yy) * width + xx;
                    if (!region_mask[j] || std::isnan(ita_raster.data[j])) continue;
                    sum += ita_raster.data[j];
                    ++n;
                }
            }
            smoothed.push_back(sum / static_cast<double>(n));
        }
    }
    return smoothed;
}

Histogram masked_ita_histogram(const std::vector<double>& values) {
    Histogram h;
    h.edges.resize(181);
    for (int i = 0; i <= 180; ++i) h.edges[i] = -90.0 + i;
    h.counts.assign(180, 0);
    for (double v : values) {
        int idx = static_cast<int>(std::floor(v + 90.0));
        idx = std::clamp(idx, 0, 179);
        h.counts[idx] += 1;
    }
    const double total = static_cast<double>(values.size());
    h.probabilities.assign(180, 0.0);
    if (total > 0) {
        for (int i = 0; i < 180; ++i) h.probabilities[i] = h.counts[i] / total;
    }
    return h;
}

}  // namespace

ItaResult face_ita(const ImageU8& rgb, const KeypointSet68& k, const SkinMask* mask,
                   const ItaOptions& opts) {
    const int w = rgb.width;
    const int h = rgb.height;

    // Per-pixel ITA; NaN marks the undefined (b=0, L=50) case.
    const LabImage lab = rgb_to_lab(rgb);
    ImageF64 ita_raster(w, h, kNoIta);
    for (std::size_t i = 0; i < ita_raster.data.size(); ++i) {
        const auto v = ita_pixel({lab.l[i], lab.a[i], lab.b[i]});
        if (v) ita_raster.data[i] = *v;
    }

    // Skin mask: provided, or the union of the landmark-fallback regions.
    std::vector<std::uint8_t> skin(static_cast<std::size_t>(w) * h, 0);
    std::vector<std::vector<std::uint8_t>> region_masks(4);
    for (int r = 0; r < 4; ++r) {
        const auto poly = ita_region_polygon(k, static_cast<ItaRegion>(r), w, h);
        fill_polygon(poly, w, h, region_masks[r]);
    }
    if (mask != nullptr) {
        for (std::size_t i = 0; i < skin.size() && i < mask->data.size(); ++i) {
            skin[i] = mask->data[i] >= 0.5 ? 1 : 0;
        }
    } else {
        for (int r = 0; r < 4; ++r) {
            for (std::size_t i = 0; i < skin.size(); ++i) {
                if (region_masks[r][i]) skin[i] = 1;
            }
        }
    }

    ItaResult result;
    std::vector<double> masked_values;
    for (std::size_t i = 0; i < skin.size(); ++i) {
        if (skin[i] && !std::isnan(ita_raster.data[i])) {
            masked_values.push_back(ita_raster.data[i]);
        }
    }
    result.histogram = masked_ita_histogram(masked_values);

    double peak_sum = 0.0;
    int peak_n = 0;
    for (int r = 0; r < 4; ++r) {
        auto& rm = region_masks[r];
        std::size_t live = 0;
        for (std::size_t i = 0; i < rm.size(); ++i) {
            rm[i] = rm[i] && skin[i];
            if (rm[i] && !std::isnan(ita_raster.data[i])) ++live;
        }
        if (live < opts.min_region_pixels) continue;  // EmptyRegion for this region
        const auto smoothed = smooth_region(ita_raster, rm, w, h, opts.smooth_window);
        const auto peak = ita_peak(smoothed, opts.peak_bin_degrees);
        if (peak) {
            result.region_peaks[r] = *peak;
            peak_sum += *peak;
            ++peak_n;
        }
    }
    if (peak_n > 0) {
        result.face_ita = peak_sum / static_cast<double>(peak_n);
    }
    return result;
}

}  // namespace facediv
