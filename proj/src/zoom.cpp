#include "hz/zoom.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "hz/deriv_stack.hpp"
#include "hz/threads.hpp"

namespace hz {

std::vector<double> lp_taps(int len) {
  if (len < 3 || len % 2 == 0) throw std::invalid_argument("low-pass length must be odd and >= 3");
  const double pi = std::numbers::pi;
  int c = len / 2;
  std::vector<double> taps(len);
  double sum = 0.0;
  for (int m = 0; m < len; ++m) {
    int k = m - c;
    // Ideal half-band response sin(pi k / 2) / (pi k), 1/2 at k = 0.
    double ideal = (k == 0) ? 0.5 : std::sin(pi * k / 2.0) / (pi * k);
    double window = 0.54 - 0.46 * std::cos(2.0 * pi * m / (len - 1));
    taps[m] = ideal * window;
    sum += taps[m];
  }
  for (double& t : taps) t /= sum;
  return taps;
}

ImagePlane decimate2x(const ImagePlane& img, int lp_len) {
  if (img.h < 4 || img.w < 4) throw std::invalid_argument("decimate2x needs extent >= 4");
  std::vector<double> lp = lp_taps(lp_len);
  ImagePlane filt = correlate_cols(correlate_rows(img, lp, lp_len / 2), lp, lp_len / 2);
  ImagePlane out((img.h + 1) / 2, (img.w + 1) / 2);
  for (int i = 0; i < out.h; ++i)
    for (int j = 0; j < out.w; ++j) out.at(i, j) = filt.at(2 * i, 2 * j);
  return out;
}

ImagePlane zoom2x_planes(const ImagePlane& copy_src, const ImagePlane& src,
                         const PlaneKernel& right, const PlaneKernel& down,
                         const PlaneKernel& rightdown) {
  if (!copy_src.same_shape(src)) throw std::invalid_argument("zoom source shape mismatch");
  ImagePlane r = correlate2d(src, right);
  ImagePlane d = correlate2d(src, down);
  ImagePlane rd = correlate2d(src, rightdown);
  ImagePlane out(2 * src.h, 2 * src.w);
  parallel_for(src.h, static_cast<long>(src.h) * src.w * 4, [&](long lo, long hi) {
    for (long i = lo; i < hi; ++i) {
      int ii = static_cast<int>(i);
      for (int j = 0; j < src.w; ++j) {
        out.at(2 * ii, 2 * j) = copy_src.at(ii, j);
        out.at(2 * ii, 2 * j + 1) = r.at(ii, j);
        out.at(2 * ii + 1, 2 * j) = d.at(ii, j);
        out.at(2 * ii + 1, 2 * j + 1) = rd.at(ii, j);
      }
    }
  });
  return out;
}

namespace {

// Sum over channels of the channel-plane correlations against the stack,
// extending each plane with the parity signs of its derivative orders.
ImagePlane channel_response(const DerivativeStack& stack, const HermiteKernelTensor& K) {
  const ImagePlane& base = stack.planes.at(0);
  ImagePlane acc(base.h, base.w, 0.0);
  for (int j = 0; j < K.c; ++j) {
    if (stack.channels.at(j) != K.channels.at(j))
      throw std::invalid_argument("derivative stack does not match kernel channels");
    BoundaryPolicy b;
    if (stack.parity_mirror) {
      b.row_sign = (K.channels[j][0] % 2 != 0) ? -1.0 : 1.0;
      b.col_sign = (K.channels[j][1] % 2 != 0) ? -1.0 : 1.0;
    }
    ImagePlane r = correlate2d(stack.planes.at(j), K.channel_plane(j), b);
    for (size_t t = 0; t < acc.px.size(); ++t) acc.px[t] += r.px[t];
  }
  return acc;
}

}  // namespace

ImagePlane zoom2x_with_stack(const DerivativeStack& stack, const ZoomKernelSet& ks) {
  if (stack.planes.empty()) throw std::invalid_argument("empty derivative stack");
  const ImagePlane& img = stack.planes[0];
  ImagePlane r = channel_response(stack, ks.right);
  ImagePlane d = channel_response(stack, ks.down);
  ImagePlane rd = channel_response(stack, ks.rightdown);
  ImagePlane out(2 * img.h, 2 * img.w);
  for (int i = 0; i < img.h; ++i) {
    for (int j = 0; j < img.w; ++j) {
      out.at(2 * i, 2 * j) = img.at(i, j);
      out.at(2 * i, 2 * j + 1) = r.at(i, j);
      out.at(2 * i + 1, 2 * j) = d.at(i, j);
      out.at(2 * i + 1, 2 * j + 1) = rd.at(i, j);
    }
  }
  return out;
}

ImagePlane zoom2x(const ImagePlane& img, const ZoomKernelSet& ks, ZoomPath path) {
  if (path == ZoomPath::Fused) {
    if (ks.fused.size() != 3)
      throw std::invalid_argument("fused zoom planes are only built for FIR modes");
    return zoom2x_planes(img, img, ks.fused[0].plane, ks.fused[1].plane, ks.fused[2].plane);
  }
  DerivativeStack stack = derivative_stack(img, ks.nu, ks.mode);
  return zoom2x_with_stack(stack, ks);
}

ImagePlane crop(const ImagePlane& img, int h, int w) {
  if (h > img.h || w > img.w || h < 1 || w < 1) throw std::invalid_argument("bad crop extent");
  ImagePlane out(h, w);
  for (int i = 0; i < h; ++i)
    for (int j = 0; j < w; ++j) out.at(i, j) = img.at(i, j);
  return out;
}

}  // namespace hz
