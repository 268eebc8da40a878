#include "hz/image.hpp"

#include <stdexcept>

#include "hz/threads.hpp"

namespace hz {

long mirror_index(long t, long n) {
  if (n == 1) return 0;
  const long period = 2 * n - 2;
  t %= period;
  if (t < 0) t += period;
  return t < n ? t : period - t;
}

namespace {

// Reflect with sign accumulation: each fold at a border multiplies by `sign`.
double fold_signed(long t, long n, double sign, double* acc) {
  if (n == 1) return 0;
  while (t < 0 || t >= n) {
    if (t < 0)
      t = -t;
    else
      t = 2 * n - 2 - t;
    *acc *= sign;
  }
  return static_cast<double>(t);
}

long clamp_index(long t, long n) { return t < 0 ? 0 : (t >= n ? n - 1 : t); }

}  // namespace

double sample_extended(const ImagePlane& img, long i, long j, const BoundaryPolicy& b) {
  double sign = 1.0;
  long ii, jj;
  if (b.mode == BoundaryMode::Replicate) {
    ii = clamp_index(i, img.h);
    jj = clamp_index(j, img.w);
  } else {
    ii = static_cast<long>(fold_signed(i, img.h, b.row_sign, &sign));
    jj = static_cast<long>(fold_signed(j, img.w, b.col_sign, &sign));
  }
  return sign * img.at(static_cast<int>(ii), static_cast<int>(jj));
}

double PlaneKernel::sum() const {
  double s = 0.0;
  for (double v : taps) s += v;
  return s;
}

PlaneKernel PlaneKernel::flipped() const {
  PlaneKernel f(h, w, h - 1 - ar, w - 1 - ac);
  for (int u = 0; u < h; ++u)
    for (int v = 0; v < w; ++v) f.at(u, v) = at(h - 1 - u, w - 1 - v);
  return f;
}

PlaneKernel PlaneKernel::impulse() {
  PlaneKernel k(1, 1, 0, 0);
  k.at(0, 0) = 1.0;
  return k;
}

PlaneKernel PlaneKernel::outer(const std::vector<double>& row_taps, int row_anchor,
                               const std::vector<double>& col_taps, int col_anchor) {
  PlaneKernel k(static_cast<int>(row_taps.size()), static_cast<int>(col_taps.size()), row_anchor,
                col_anchor);
  for (size_t u = 0; u < row_taps.size(); ++u)
    for (size_t v = 0; v < col_taps.size(); ++v)
      k.at(static_cast<int>(u), static_cast<int>(v)) = row_taps[u] * col_taps[v];
  return k;
}

namespace {

// Shared core: out(i,j) = sum k(u,v) * img~(i + dr*(u-ar), j + dc*(v-ac)).
ImagePlane apply_kernel(const ImagePlane& img, const PlaneKernel& k, const BoundaryPolicy& b,
                        int direction) {
  ImagePlane out(img.h, img.w);
  const long work = static_cast<long>(img.h) * img.w * k.h * k.w;
  parallel_for(img.h, work, [&](long row_begin, long row_end) {
    for (long i = row_begin; i < row_end; ++i) {
      for (int j = 0; j < img.w; ++j) {
        double s = 0.0;
        for (int u = 0; u < k.h; ++u) {
          for (int v = 0; v < k.w; ++v) {
            const double t = k.at(u, v);
            if (t == 0.0) continue;
            const long ii = i + direction * (u - k.ar);
            const long jj = j + direction * (v - k.ac);
            s += t * sample_extended(img, ii, jj, b);
          }
        }
        out.at(static_cast<int>(i), j) = s;
      }
    }
  });
  return out;
}

}  // namespace

ImagePlane correlate2d(const ImagePlane& img, const PlaneKernel& k, const BoundaryPolicy& b) {
  return apply_kernel(img, k, b, +1);
}

ImagePlane convolve2d(const ImagePlane& img, const PlaneKernel& k, const BoundaryPolicy& b) {
  if (b.mode == BoundaryMode::Mirror && (k.h > 2 * img.h - 1 || k.w > 2 * img.w - 1))
    throw std::invalid_argument("kernel larger than mirror-padded image");
  return apply_kernel(img, k, b, -1);
}

ImagePlane correlate_rows(const ImagePlane& img, const std::vector<double>& taps, int anchor,
                          const BoundaryPolicy& b) {
  ImagePlane out(img.h, img.w);
  const int n = static_cast<int>(taps.size());
  const long work = static_cast<long>(img.h) * img.w * n;
  parallel_for(img.h, work, [&](long row_begin, long row_end) {
    for (long i = row_begin; i < row_end; ++i)
      for (int j = 0; j < img.w; ++j) {
        double s = 0.0;
        for (int u = 0; u < n; ++u)
          if (taps[u] != 0.0) s += taps[u] * sample_extended(img, i + u - anchor, j, b);
        out.at(static_cast<int>(i), j) = s;
      }
  });
  return out;
}

ImagePlane correlate_cols(const ImagePlane& img, const std::vector<double>& taps, int anchor,
                          const BoundaryPolicy& b) {
  ImagePlane out(img.h, img.w);
  const int n = static_cast<int>(taps.size());
  const long work = static_cast<long>(img.h) * img.w * n;
  parallel_for(img.h, work, [&](long row_begin, long row_end) {
    for (long i = row_begin; i < row_end; ++i)
      for (int j = 0; j < img.w; ++j) {
        double s = 0.0;
        for (int v = 0; v < n; ++v)
          if (taps[v] != 0.0) s += taps[v] * sample_extended(img, i, j + v - anchor, b);
        out.at(static_cast<int>(i), j) = s;
      }
  });
  return out;
}

}  // namespace hz
