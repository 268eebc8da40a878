#include "hz/png_io.hpp"

#include <png.h>

#include <cstdio>
#include <cstring>
#include <memory>
#include <stdexcept>
#include <vector>

#include "hz/pgm_io.hpp"

namespace hz {

namespace {

struct FileCloser {
  void operator()(std::FILE* f) const {
    if (f) std::fclose(f);
  }
};
using FilePtr = std::unique_ptr<std::FILE, FileCloser>;

bool has_suffix(const std::string& s, const std::string& suf) {
  if (s.size() < suf.size()) return false;
  for (size_t i = 0; i < suf.size(); ++i) {
    char a = s[s.size() - suf.size() + i];
    char b = suf[i];
    if (std::tolower(static_cast<unsigned char>(a)) != b) return false;
  }
  return true;
}

}  // namespace

ImagePlane load_png(const std::string& path) {
  FilePtr fp(std::fopen(path.c_str(), "rb"));
  if (!fp) throw std::runtime_error("cannot open " + path);

  png_structp png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
  if (!png) throw std::runtime_error("png reader allocation failed");
  png_infop info = png_create_info_struct(png);
  if (!info) {
    png_destroy_read_struct(&png, nullptr, nullptr);
    throw std::runtime_error("png info allocation failed");
  }
  std::vector<png_bytep> rows;
  std::vector<png_byte> data;
  if (setjmp(png_jmpbuf(png))) {
    png_destroy_read_struct(&png, &info, nullptr);
    throw std::runtime_error(path + ": PNG decode failed");
  }
  png_init_io(png, fp.get());
  png_read_info(png, info);

  png_uint_32 w = png_get_image_width(png, info);
  png_uint_32 h = png_get_image_height(png, info);
  int color = png_get_color_type(png, info);
  int depth = png_get_bit_depth(png, info);

  if (color == PNG_COLOR_TYPE_PALETTE) png_set_palette_to_rgb(png);
  if (color == PNG_COLOR_TYPE_GRAY && depth < 8) png_set_expand_gray_1_2_4_to_8(png);
  if (png_get_valid(png, info, PNG_INFO_tRNS)) png_set_tRNS_to_alpha(png);
  png_read_update_info(png, info);

  color = png_get_color_type(png, info);
  depth = png_get_bit_depth(png, info);
  png_size_t stride = png_get_rowbytes(png, info);
  data.resize(stride * h);
  rows.resize(h);
  for (png_uint_32 r = 0; r < h; ++r) rows[r] = data.data() + stride * r;
  png_read_image(png, rows.data());
  png_read_end(png, nullptr);
  png_destroy_read_struct(&png, &info, nullptr);

  int chans;
  switch (color) {
    case PNG_COLOR_TYPE_GRAY: chans = 1; break;
    case PNG_COLOR_TYPE_GRAY_ALPHA: chans = 2; break;
    case PNG_COLOR_TYPE_RGB: chans = 3; break;
    case PNG_COLOR_TYPE_RGB_ALPHA: chans = 4; break;
    default: throw std::runtime_error(path + ": unsupported PNG color type");
  }

  ImagePlane img(static_cast<int>(h), static_cast<int>(w));
  const double scale16 = 255.0 / 65535.0;
  for (png_uint_32 r = 0; r < h; ++r) {
    const png_byte* row = data.data() + stride * r;
    for (png_uint_32 c = 0; c < w; ++c) {
      double sample[4] = {0, 0, 0, 0};
      for (int k = 0; k < chans; ++k) {
        if (depth == 16) {
          const png_byte* p = row + 2 * (c * chans + k);
          sample[k] = (p[0] * 256 + p[1]) * scale16;
        } else {
          sample[k] = row[c * chans + k];
        }
      }
      double y = (chans >= 3) ? 0.299 * sample[0] + 0.587 * sample[1] + 0.114 * sample[2]
                              : sample[0];
      img.at(static_cast<int>(r), static_cast<int>(c)) = y;
    }
  }
  return img;
}

void save_png(const std::string& path, const ImagePlane& img) {
  FilePtr fp(std::fopen(path.c_str(), "wb"));
  if (!fp) throw std::runtime_error("cannot write " + path);

  png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
  if (!png) throw std::runtime_error("png writer allocation failed");
  png_infop info = png_create_info_struct(png);
  if (!info) {
    png_destroy_write_struct(&png, nullptr);
    throw std::runtime_error("png info allocation failed");
  }
  std::vector<png_byte> data(static_cast<size_t>(img.h) * img.w);
  std::vector<png_bytep> rows(img.h);
  if (setjmp(png_jmpbuf(png))) {
    png_destroy_write_struct(&png, &info);
    throw std::runtime_error(path + ": PNG encode failed");
  }
  png_init_io(png, fp.get());
  png_set_IHDR(png, info, img.w, img.h, 8, PNG_COLOR_TYPE_GRAY, PNG_INTERLACE_NONE,
               PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
  for (int r = 0; r < img.h; ++r) {
    rows[r] = data.data() + static_cast<size_t>(r) * img.w;
    for (int c = 0; c < img.w; ++c) rows[r][c] = quantize_byte(img.at(r, c));
  }
  png_set_rows(png, info, rows.data());
  png_write_png(png, info, PNG_TRANSFORM_IDENTITY, nullptr);
  png_destroy_write_struct(&png, &info);
}

ImagePlane load_image(const std::string& path) {
  if (has_suffix(path, ".png")) return load_png(path);
  return load_pgm(path);
}

void save_image(const std::string& path, const ImagePlane& img) {
  if (has_suffix(path, ".png")) {
    save_png(path, img);
  } else {
    save_pgm(path, img);
  }
}

}  // namespace hz
