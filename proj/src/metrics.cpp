#include "hz/metrics.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "hz/pgm_io.hpp"

namespace hz {

ImagePlane quantize8(const ImagePlane& img) {
  ImagePlane out(img.h, img.w);
  for (size_t t = 0; t < img.px.size(); ++t) out.px[t] = quantize_byte(img.px[t]);
  return out;
}

double psnr(const ImagePlane& ref, const ImagePlane& test) {
  if (!ref.same_shape(test)) throw std::invalid_argument("psnr: dimension mismatch");
  double se = 0.0;
  for (size_t t = 0; t < ref.px.size(); ++t) {
    double d = static_cast<double>(quantize_byte(ref.px[t])) - quantize_byte(test.px[t]);
    se += d * d;
  }
  if (se == 0.0) return std::numeric_limits<double>::infinity();
  double mse = se / static_cast<double>(ref.px.size());
  return 10.0 * std::log10(255.0 * 255.0 / mse);
}

double ssim(const ImagePlane& ref, const ImagePlane& test) {
  if (!ref.same_shape(test)) throw std::invalid_argument("ssim: dimension mismatch");
  const int win = 11, half = 5;
  if (ref.h < win || ref.w < win) throw std::invalid_argument("ssim: image smaller than window");

  std::vector<double> g(win);
  double gsum = 0.0;
  for (int u = 0; u < win; ++u) {
    double d = u - half;
    g[u] = std::exp(-d * d / (2.0 * 1.5 * 1.5));
    gsum += g[u];
  }
  for (double& v : g) v /= gsum;

  ImagePlane x = quantize8(ref), y = quantize8(test);
  ImagePlane xx(x.h, x.w), yy(x.h, x.w), xy(x.h, x.w);
  for (size_t t = 0; t < x.px.size(); ++t) {
    xx.px[t] = x.px[t] * x.px[t];
    yy.px[t] = y.px[t] * y.px[t];
    xy.px[t] = x.px[t] * y.px[t];
  }
  // Window sums are separable; border values are discarded, so the boundary
  // policy of the passes is irrelevant.
  auto smooth = [&](const ImagePlane& p) {
    return correlate_cols(correlate_rows(p, g, half), g, half);
  };
  ImagePlane mx = smooth(x), my = smooth(y), mxx = smooth(xx), myy = smooth(yy), mxy = smooth(xy);

  const double c1 = (0.01 * 255.0) * (0.01 * 255.0);
  const double c2 = (0.03 * 255.0) * (0.03 * 255.0);
  double acc = 0.0;
  long count = 0;
  for (int i = half; i < x.h - half; ++i) {
    for (int j = half; j < x.w - half; ++j) {
      double ux = mx.at(i, j), uy = my.at(i, j);
      double vx = mxx.at(i, j) - ux * ux;
      double vy = myy.at(i, j) - uy * uy;
      double cov = mxy.at(i, j) - ux * uy;
      double num = (2.0 * ux * uy + c1) * (2.0 * cov + c2);
      double den = (ux * ux + uy * uy + c1) * (vx + vy + c2);
      acc += num / den;
      ++count;
    }
  }
  return acc / static_cast<double>(count);
}

QualityScore quality(const ImagePlane& ref, const ImagePlane& test) {
  return {psnr(ref, test), ssim(ref, test)};
}

}  // namespace hz
