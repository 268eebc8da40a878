#pragma once

#include <vector>

#include "hz/fuse.hpp"
#include "hz/image.hpp"

namespace hz {

// Low-pass taps for the decimation prefilter: Hamming-windowed sinc with
// normalized cutoff pi/2, renormalized to unit sum. len odd, >= 3.
std::vector<double> lp_taps(int len);

// Separable low-pass then subsampling keeping indices 0,2,4,... per axis.
// Output is ceil(h/2) x ceil(w/2). Requires h,w >= 4.
ImagePlane decimate2x(const ImagePlane& img, int lp_len = 13);

enum class ZoomPath { Fused, Channels };

// x2 zoom, 2H x 2W. Even-even outputs copy the input sample exactly; the
// other three cosets are the right/down/rightdown kernel responses at the
// source pixel. Fused path requires FIR-mode fused planes; the channel path
// computes the derivative stack per the set's mode.
ImagePlane zoom2x(const ImagePlane& img, const ZoomKernelSet& ks, ZoomPath path);

// Channel path with a caller-provided stack (plane 0 is the image). Each
// channel plane is extended across mirror borders with the parity signs of
// its derivative orders, which is what the derivative of the mirror-extended
// image actually does; this keeps the two zoom paths equal at the borders.
ImagePlane zoom2x_with_stack(const DerivativeStack& stack, const ZoomKernelSet& ks);

// Generic three-plane zoom used by the fused path and the baselines:
// responses are correlations of `src` with the three planes, the even-even
// coset copies `copy_src`. The two images must share their shape.
ImagePlane zoom2x_planes(const ImagePlane& copy_src, const ImagePlane& src,
                         const PlaneKernel& right, const PlaneKernel& down,
                         const PlaneKernel& rightdown);

// Top-left h x w corner.
ImagePlane crop(const ImagePlane& img, int h, int w);

}  // namespace hz
