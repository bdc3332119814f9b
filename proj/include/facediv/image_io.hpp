#pragma once

#include <string>

#include "facediv/image.hpp"

namespace facediv {

/// Decodes an image file to interleaved RGB. Throws ImageRead on failure.
ImageU8 load_image(const std::string& path);

/// Decodes a single-channel mask file ([0,1] raster, non-zero = set).
ImageF64 load_mask(const std::string& path);

/// Writes an RGB image (format from the extension; PNG recommended).
void save_image(const std::string& path, const ImageU8& rgb);

/// Writes a single-channel 8-bit mask (values >= 0.5 map to 255).
void save_mask(const std::string& path, const ImageF64& mask);

}  // namespace facediv
