#pragma once

#include <cstdint>
#include <vector>

#include "facediv/geometry.hpp"

namespace facediv {

/// Interleaved 8-bit raster, RGB channel order (1 or 3 channels).
struct ImageU8 {
    int width = 0;
    int height = 0;
    int channels = 0;
    std::vector<std::uint8_t> data;

    ImageU8() = default;
    ImageU8(int w, int h, int c) : width(w), height(h), channels(c),
        data(static_cast<std::size_t>(w) * h * c, 0) {}

    std::uint8_t& at(int x, int y, int c = 0) {
        return data[(static_cast<std::size_t>(y) * width + x) * channels + c];
    }
    std::uint8_t at(int x, int y, int c = 0) const {
        return data[(static_cast<std::size_t>(y) * width + x) * channels + c];
    }
    bool empty() const { return data.empty(); }
};

/// Single-channel double raster.
struct ImageF64 {
    int width = 0;
    int height = 0;
    std::vector<double> data;

    ImageF64() = default;
    ImageF64(int w, int h, double fill = 0.0)
        : width(w), height(h), data(static_cast<std::size_t>(w) * h, fill) {}

    double& at(int x, int y) { return data[static_cast<std::size_t>(y) * width + x]; }
    double at(int x, int y) const { return data[static_cast<std::size_t>(y) * width + x]; }
    bool empty() const { return data.empty(); }
};

/// CIE-Lab planes with raw values: L in [0,100], a and b signed.
struct LabImage {
    int width = 0;
    int height = 0;
    std::vector<double> l, a, b;

    LabImage() = default;
    LabImage(int w, int h)
        : width(w), height(h),
          l(static_cast<std::size_t>(w) * h, 0.0),
          a(static_cast<std::size_t>(w) * h, 0.0),
          b(static_cast<std::size_t>(w) * h, 0.0) {}

    std::size_t index(int x, int y) const { return static_cast<std::size_t>(y) * width + x; }
};

/// ITU-R BT.601 luma of an RGB image, normalized to [0,1].
ImageF64 to_grayscale(const ImageU8& rgb);

/// Inverse-mapped warp with bilinear resampling; pixels sampled outside the
/// source are black. Integer coordinates are pixel centers.
ImageU8 warp_affine(const ImageU8& src, const Affine2& transform, int out_width, int out_height);
ImageF64 warp_affine(const ImageF64& src, const Affine2& transform, int out_width, int out_height);

/// Rasterizes a simple polygon with the even-odd rule tested at integer
/// pixel centers; marks covered pixels `true`. Pixels outside [0,w)x[0,h)
/// are clipped. Returns the number of covered pixels.
std::size_t fill_polygon(const std::vector<Point2>& polygon, int width, int height,
                         std::vector<std::uint8_t>& mask);

/// Shoelace area of a polygon (absolute value).
double polygon_area(const std::vector<Point2>& polygon);

}  // namespace facediv
