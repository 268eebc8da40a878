#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <png.h>

#include "doctest.h"
#include "hz/pgm_io.hpp"
#include "hz/png_io.hpp"

using namespace hz;
namespace fs = std::filesystem;

namespace {

std::string temp_path(const std::string& name) {
  return (fs::temp_directory_path() / name).string();
}

void write_file(const std::string& path, const std::string& bytes) {
  std::ofstream os(path, std::ios::binary);
  os.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
}

// Minimal 8-bit RGB PNG writer for decoder tests.
void write_rgb_png(const std::string& path, int w, int h, const unsigned char* rgb) {
  FILE* fp = std::fopen(path.c_str(), "wb");
  REQUIRE(fp != nullptr);
  png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
  png_infop info = png_create_info_struct(png);
  REQUIRE(setjmp(png_jmpbuf(png)) == 0);
  png_init_io(png, fp);
  png_set_IHDR(png, info, w, h, 8, PNG_COLOR_TYPE_RGB, PNG_INTERLACE_NONE,
               PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
  png_write_info(png, info);
  for (int i = 0; i < h; ++i)
    png_write_row(png, const_cast<png_bytep>(rgb + static_cast<size_t>(i) * w * 3));
  png_write_end(png, nullptr);
  png_destroy_write_struct(&png, &info);
  std::fclose(fp);
}

}  // namespace

TEST_CASE("byte quantization rounds half up and clamps") {
  CHECK(quantize_byte(0.0) == 0);
  CHECK(quantize_byte(0.49) == 0);
  CHECK(quantize_byte(0.5) == 1);
  CHECK(quantize_byte(1.49) == 1);
  CHECK(quantize_byte(254.5) == 255);
  CHECK(quantize_byte(255.7) == 255);
  CHECK(quantize_byte(400.0) == 255);
  CHECK(quantize_byte(-3.0) == 0);
}

TEST_CASE("PGM round-trip is lossless for byte-valued planes") {
  ImagePlane img(5, 7);
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 7; ++j) img.at(i, j) = (i * 37 + j * 11) % 256;
  const std::string path = temp_path("hz_io_roundtrip.pgm");
  save_pgm(path, img);
  ImagePlane back = load_pgm(path);
  REQUIRE(back.h == 5);
  REQUIRE(back.w == 7);
  CHECK(back.px == img.px);
  fs::remove(path);
}

TEST_CASE("PGM save quantizes fractional samples") {
  ImagePlane img(1, 3);
  img.at(0, 0) = 1.5;
  img.at(0, 1) = -20.0;
  img.at(0, 2) = 300.0;
  const std::string path = temp_path("hz_io_quant.pgm");
  save_pgm(path, img);
  ImagePlane back = load_pgm(path);
  CHECK(back.at(0, 0) == 2.0);
  CHECK(back.at(0, 1) == 0.0);
  CHECK(back.at(0, 2) == 255.0);
  fs::remove(path);
}

TEST_CASE("PGM header: comments and arbitrary whitespace") {
  std::string body(6, '\0');
  for (int t = 0; t < 6; ++t) body[t] = static_cast<char>(40 + t);
  const std::string path = temp_path("hz_io_comment.pgm");
  write_file(path, "P5 # format\n# full line comment\n  3\t2 # dims\n255\n" + body);
  ImagePlane img = load_pgm(path);
  REQUIRE(img.h == 2);
  REQUIRE(img.w == 3);
  CHECK(img.at(0, 0) == 40.0);
  CHECK(img.at(1, 2) == 45.0);
  fs::remove(path);
}

TEST_CASE("PGM rejects foreign or broken files") {
  const std::string p1 = temp_path("hz_io_bad1.pgm");
  write_file(p1, "P2\n2 2\n255\n0 1 2 3\n");  // ASCII variant
  CHECK_THROWS(load_pgm(p1));
  const std::string p2 = temp_path("hz_io_bad2.pgm");
  write_file(p2, std::string("P5\n2 2\n65535\n") + std::string(8, 'x'));
  CHECK_THROWS(load_pgm(p2));  // only maxval 255
  const std::string p3 = temp_path("hz_io_bad3.pgm");
  write_file(p3, std::string("P5\n4 4\n255\n") + std::string(7, 'x'));
  CHECK_THROWS(load_pgm(p3));  // truncated payload
  CHECK_THROWS(load_pgm(temp_path("hz_io_missing.pgm")));
  fs::remove(p1);
  fs::remove(p2);
  fs::remove(p3);
}

TEST_CASE("gray PNG round-trip is lossless for byte-valued planes") {
  ImagePlane img(4, 6);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 6; ++j) img.at(i, j) = (i * 53 + j * 29) % 256;
  const std::string path = temp_path("hz_io_gray.png");
  save_png(path, img);
  ImagePlane back = load_png(path);
  REQUIRE(back.h == 4);
  REQUIRE(back.w == 6);
  CHECK(back.px == img.px);
  fs::remove(path);
}

TEST_CASE("color PNG reduces to Rec.601 luma") {
  const unsigned char rgb[] = {255, 0, 0,   0, 255, 0,
                               0,   0, 255, 255, 255, 255};
  const std::string path = temp_path("hz_io_rgb.png");
  write_rgb_png(path, 2, 2, rgb);
  ImagePlane img = load_png(path);
  REQUIRE(img.h == 2);
  REQUIRE(img.w == 2);
  CHECK(img.at(0, 0) == doctest::Approx(0.299 * 255).epsilon(1e-9));
  CHECK(img.at(0, 1) == doctest::Approx(0.587 * 255).epsilon(1e-9));
  CHECK(img.at(1, 0) == doctest::Approx(0.114 * 255).epsilon(1e-9));
  CHECK(img.at(1, 1) == doctest::Approx(255.0).epsilon(1e-9));
  fs::remove(path);
}

TEST_CASE("extension dispatch") {
  ImagePlane img(2, 2);
  img.at(0, 0) = 9;
  img.at(0, 1) = 18;
  img.at(1, 0) = 27;
  img.at(1, 1) = 36;
  const std::string png = temp_path("hz_io_dispatch.PNG");
  const std::string pgm = temp_path("hz_io_dispatch.pgm");
  save_image(png, img);
  save_image(pgm, img);
  CHECK(load_image(png).px == img.px);
  CHECK(load_image(pgm).px == img.px);
  // The PNG path wrote a real PNG, not a PGM with an odd name.
  std::ifstream is(png, std::ios::binary);
  unsigned char sig[4] = {};
  is.read(reinterpret_cast<char*>(sig), 4);
  CHECK(sig[1] == 'P');
  CHECK(sig[2] == 'N');
  CHECK(sig[3] == 'G');
  fs::remove(png);
  fs::remove(pgm);
}
