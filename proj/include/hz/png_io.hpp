#pragma once

#include <string>

#include "hz/image.hpp"

namespace hz {

// Decodes a PNG to a single luma plane in [0,255]. Gray and gray+alpha use
// the gray channel directly; RGB and RGBA are reduced with the 0.299/0.587/
// 0.114 weights. 16-bit samples are rescaled by 255/65535. Alpha is ignored.
ImagePlane load_png(const std::string& path);

// Writes an 8-bit grayscale PNG; samples are rounded half up and clamped.
void save_png(const std::string& path, const ImagePlane& img);

// Loads either format by extension (.png, otherwise PGM).
ImagePlane load_image(const std::string& path);
void save_image(const std::string& path, const ImagePlane& img);

}  // namespace hz
