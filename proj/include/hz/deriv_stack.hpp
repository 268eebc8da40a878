#pragma once

#include <string>
#include <vector>

#include "hz/image.hpp"
#include "hz/multi_index.hpp"

namespace hz {

// How image partial derivatives are approximated. Exact means the caller
// supplies analytically computed planes.
enum class DerivMode { Exact, FIR3, FIR5, FIR7, IIR };

int fir_length(DerivMode mode);  // 3/5/7, or 0 for IIR and Exact
std::string deriv_mode_name(DerivMode mode);
DerivMode parse_deriv_mode(const std::string& name);

// One plane per reverse-lex derivative multi-index; plane 0 is the image.
// parity_mirror says how the planes continue across mirror borders: FIR and
// analytic planes of a mirrored image flip sign with odd derivative orders,
// while the compact solver's symmetric fold makes every plane extend evenly.
struct DerivativeStack {
  std::vector<MultiIndex> channels;
  std::vector<ImagePlane> planes;
  bool parity_mirror = true;
};

// Builds the c = prod(nu) planes for constant per-axis multiplicities `nu`
// (2D). Mixed orders compose per-axis filters sequentially.
DerivativeStack derivative_stack(const ImagePlane& img, const std::vector<int>& nu,
                                 DerivMode mode);

}  // namespace hz
