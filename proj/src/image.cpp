#include "facediv/image.hpp"

#include <algorithm>
#include <cmath>

namespace facediv {

namespace {

// BT.601 luma weights.
constexpr double kLumaR = 0.299;
constexpr double kLumaG = 0.587;
constexpr double kLumaB = 0.114;

}  // namespace

ImageF64 to_grayscale(const ImageU8& rgb) {
    ImageF64 out(rgb.width, rgb.height);
    if (rgb.channels == 1) {
        for (int y = 0; y < rgb.height; ++y)
            for (int x = 0; x < rgb.width; ++x)
                out.at(x, y) = rgb.at(x, y, 0) / 255.0;
        return out;
    }
    for (int y = 0; y < rgb.height; ++y) {
        for (int x = 0; x < rgb.width; ++x) {
            const double v = kLumaR * rgb.at(x, y, 0) + kLumaG * rgb.at(x, y, 1) +
                             kLumaB * rgb.at(x, y, 2);
            out.at(x, y) = v / 255.0;
        }
    }
    return out;
}

namespace {

// Bilinear fetch with black outside the source; integer coordinates are
// pixel centers.
template <typename GetT>
double sample_bilinear(double sx, double sy, int w, int h, GetT get) {
    const double fx = std::floor(sx);
    const double fy = std::floor(sy);
    const int x0 = static_cast<int>(fx);
    const int y0 = static_cast<int>(fy);
    const double ax = sx - fx;
    const double ay = sy - fy;

    auto fetch = [&](int x, int y) -> double {
        if (x < 0 || y < 0 || x >= w || y >= h) return 0.0;
        return get(x, y);
    };

    const double v00 = fetch(x0, y0);
    const double v10 = fetch(x0 + 1, y0);
    const double v01 = fetch(x0, y0 + 1);
    const double v11 = fetch(x0 + 1, y0 + 1);
    return (1.0 - ay) * ((1.0 - ax) * v00 + ax * v10) + ay * ((1.0 - ax) * v01 + ax * v11);
}

}  // namespace

ImageU8 warp_affine(const ImageU8& src, const Affine2& transform, int out_width, int out_height) {
    const Affine2 inv = transform.inverse();
    ImageU8 out(out_width, out_height, src.channels);
    for (int y = 0; y < out_height; ++y) {
        for (int x = 0; x < out_width; ++x) {
            const Point2 s = inv.apply({static_cast<double>(x), static_cast<double>(y)});
            for (int c = 0; c < src.channels; ++c) {
                const double v = sample_bilinear(
                    s.x, s.y, src.width, src.height,
                    [&](int xx, int yy) { return static_cast<double>(src.at(xx, yy, c)); });
                out.at(x, y, c) = static_cast<std::uint8_t>(std::clamp(std::lround(v), 0L, 255L));
            }
        }
    }
    return out;
}

ImageF64 warp_affine(const ImageF64& src, const Affine2& transform, int out_width, int out_height) {
    const Affine2 inv = transform.inverse();
    ImageF64 out(out_width, out_height);
    for (int y = 0; y < out_height; ++y) {
        for (int x = 0; x < out_width; ++x) {
            const Point2 s = inv.apply({static_cast<double>(x), static_cast<double>(y)});
            out.at(x, y) = sample_bilinear(s.x, s.y, src.width, src.height,
                                           [&](int xx, int yy) { return src.at(xx, yy); });
        }
    }
    return out;
}

std::size_t fill_polygon(const std::vector<Point2>& polygon, int width, int height,
                         std::vector<std::uint8_t>& mask) {
    mask.assign(static_cast<std::size_t>(width) * height, 0);
    if (polygon.size() < 3) return 0;

    double min_x = polygon[0].x, max_x = polygon[0].x;
    double min_y = polygon[0].y, max_y = polygon[0].y;
    for (const auto& p : polygon) {
        min_x = std::min(min_x, p.x);
        max_x = std::max(max_x, p.x);
        min_y = std::min(min_y, p.y);
        max_y = std::max(max_y, p.y);
    }
    const int x_lo = std::max(0, static_cast<int>(std::floor(min_x)));
    const int x_hi = std::min(width - 1, static_cast<int>(std::ceil(max_x)));
    const int y_lo = std::max(0, static_cast<int>(std::floor(min_y)));
    const int y_hi = std::min(height - 1, static_cast<int>(std::ceil(max_y)));

    const std::size_t n = polygon.size();
    std::size_t covered = 0;
    for (int y = y_lo; y <= y_hi; ++y) {
        const double py = static_cast<double>(y);
        for (int x = x_lo; x <= x_hi; ++x) {
            const double px = static_cast<double>(x);
            // Even-odd crossing count against the ray x -> +inf, with the
            // half-open edge rule so shared vertices count once.
            bool inside = false;
            for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
                const Point2 a = polygon[j];
                const Point2 b = polygon[i];
                if ((b.y > py) != (a.y > py)) {
                    const double x_cross = b.x + (py - b.y) * (a.x - b.x) / (a.y - b.y);
                    if (px < x_cross) inside = !inside;
                }
            }
            if (inside) {
                mask[static_cast<std::size_t>(y) * width + x] = 1;
                ++covered;
            }
        }
    }
    return covered;
}

double polygon_area(const std::vector<Point2>& polygon) {
    const std::size_t n = polygon.size();
    if (n < 3) return 0.0;
    double twice = 0.0;
    for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
        twice += polygon[j].x * polygon[i].y - polygon[i].x * polygon[j].y;
    }
    return std::abs(twice) / 2.0;
}

}  // namespace facediv
