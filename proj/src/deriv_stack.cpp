#include "hz/deriv_stack.hpp"

#include <stdexcept>

#include "hz/compact.hpp"
#include "hz/fir.hpp"

namespace hz {

int fir_length(DerivMode mode) {
  switch (mode) {
    case DerivMode::FIR3: return 3;
    case DerivMode::FIR5: return 5;
    case DerivMode::FIR7: return 7;
    default: return 0;
  }
}

std::string deriv_mode_name(DerivMode mode) {
  switch (mode) {
    case DerivMode::Exact: return "exact";
    case DerivMode::FIR3: return "fir3";
    case DerivMode::FIR5: return "fir5";
    case DerivMode::FIR7: return "fir7";
    case DerivMode::IIR: return "iir";
  }
  return "?";
}

DerivMode parse_deriv_mode(const std::string& name) {
  if (name == "exact") return DerivMode::Exact;
  if (name == "fir3" || name == "FIR3") return DerivMode::FIR3;
  if (name == "fir5" || name == "FIR5") return DerivMode::FIR5;
  if (name == "fir7" || name == "FIR7") return DerivMode::FIR7;
  if (name == "iir" || name == "IIR") return DerivMode::IIR;
  throw std::invalid_argument("unknown derivative mode: " + name);
}

DerivativeStack derivative_stack(const ImagePlane& img, const std::vector<int>& nu,
                                 DerivMode mode) {
  if (nu.size() != 2) throw std::invalid_argument("derivative stacks are 2D");
  if (mode == DerivMode::Exact)
    throw std::invalid_argument("exact mode requires caller-supplied planes");
  DerivativeStack stack;
  stack.channels = reverse_lex_enumerate(nu);
  stack.planes.reserve(stack.channels.size());
  stack.parity_mirror = (mode != DerivMode::IIR);
  CompactScheme scheme;
  if (mode == DerivMode::IIR) scheme = derive_compact_scheme();
  for (const MultiIndex& k : stack.channels) {
    if (k[0] == 0 && k[1] == 0) {
      stack.planes.push_back(img);
      continue;
    }
    if (mode == DerivMode::IIR) {
      ImagePlane p = img;
      if (k[0] > 0) p = apply_compact(p, scheme, 0, k[0]);
      if (k[1] > 0) p = apply_compact(p, scheme, 1, k[1]);
      stack.planes.push_back(std::move(p));
    } else {
      const int L = fir_length(mode);
      FirFilter fr = k[0] > 0 ? fir_taps(k[0], L) : fir_impulse();
      FirFilter fc = k[1] > 0 ? fir_taps(k[1], L) : fir_impulse();
      stack.planes.push_back(apply_fir(img, fr, fc));
    }
  }
  return stack;
}

}  // namespace hz
