#pragma once

#include <string>

#include "hz/image.hpp"

namespace hz {

// Binary PGM (P5), maxval 255 only. Save quantizes with round-half-up and
// clamps to [0, 255]; round-trip of integer-valued planes is lossless.
ImagePlane load_pgm(const std::string& path);
void save_pgm(const std::string& path, const ImagePlane& img);

// Shared quantization rule: round half up, clamp to [0, 255].
unsigned char quantize_byte(double v);

}  // namespace hz
