#include "hz/pgm_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace hz {

unsigned char quantize_byte(double v) {
  double q = std::floor(v + 0.5);
  if (q < 0.0) q = 0.0;
  if (q > 255.0) q = 255.0;
  return static_cast<unsigned char>(q);
}

namespace {

// Reads the next header token, skipping whitespace and # comments.
std::string next_token(std::istream& is) {
  std::string tok;
  int ch;
  while ((ch = is.get()) != EOF) {
    if (ch == '#') {
      while ((ch = is.get()) != EOF && ch != '\n') {
      }
      continue;
    }
    if (std::isspace(ch)) {
      if (!tok.empty()) return tok;
      continue;
    }
    tok.push_back(static_cast<char>(ch));
  }
  return tok;
}

}  // namespace

ImagePlane load_pgm(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw std::runtime_error("cannot open " + path);
  if (next_token(is) != "P5") throw std::runtime_error(path + ": not a binary PGM (P5)");
  long w = 0, h = 0, maxval = 0;
  try {
    w = std::stol(next_token(is));
    h = std::stol(next_token(is));
    maxval = std::stol(next_token(is));
  } catch (const std::exception&) {
    throw std::runtime_error(path + ": malformed PGM header");
  }
  if (w < 1 || h < 1) throw std::runtime_error(path + ": malformed PGM dimensions");
  if (maxval != 255) throw std::runtime_error(path + ": PGM maxval must be 255");
  ImagePlane img(static_cast<int>(h), static_cast<int>(w));
  std::vector<unsigned char> buf(static_cast<size_t>(w) * h);
  is.read(reinterpret_cast<char*>(buf.data()), static_cast<std::streamsize>(buf.size()));
  if (is.gcount() != static_cast<std::streamsize>(buf.size()))
    throw std::runtime_error(path + ": truncated PGM data");
  for (size_t i = 0; i < buf.size(); ++i) img.px[i] = buf[i];
  return img;
}

void save_pgm(const std::string& path, const ImagePlane& img) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::runtime_error("cannot write " + path);
  os << "P5\n" << img.w << ' ' << img.h << "\n255\n";
  std::vector<unsigned char> buf(img.px.size());
  for (size_t i = 0; i < img.px.size(); ++i) buf[i] = quantize_byte(img.px[i]);
  os.write(reinterpret_cast<const char*>(buf.data()), static_cast<std::streamsize>(buf.size()));
  if (!os) throw std::runtime_error("write failed: " + path);
}

}  // namespace hz
