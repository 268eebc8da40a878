#include "hz/kernel.hpp"

#include <stdexcept>

#include "hz/grid.hpp"
#include "hz/hermite_basis.hpp"
#include "hz/lambda.hpp"
#include "hz/stencil.hpp"

namespace hz {

void FractionalOffset::validate() const {
  if (frac.empty()) throw std::invalid_argument("offset has no components");
  for (double f : frac)
    if (!(f >= 0.0 && f < 1.0)) throw std::invalid_argument("offset component outside [0,1)");
}

long HermiteKernelTensor::spatial_count() const {
  long n = 1;
  for (int s : sizes) n *= s;
  return n;
}

long HermiteKernelTensor::spatial_flat(const std::vector<int>& spatial) const {
  long flat = 0;
  for (size_t ax = 0; ax < sizes.size(); ++ax) flat = flat * sizes[ax] + spatial[ax];
  return flat;
}

double HermiteKernelTensor::at(const std::vector<int>& spatial, int ch) const {
  return w[spatial_flat(spatial) * c + ch];
}

double& HermiteKernelTensor::at(const std::vector<int>& spatial, int ch) {
  return w[spatial_flat(spatial) * c + ch];
}

HermiteKernelTensor HermiteKernelTensor::flip() const {
  HermiteKernelTensor f = *this;
  f.flipped = !flipped;
  for (size_t ax = 0; ax < sizes.size(); ++ax) f.anchor[ax] = sizes[ax] - 1 - anchor[ax];
  std::vector<int> idx(sizes.size(), 0);
  const long n = spatial_count();
  for (long flat = 0; flat < n; ++flat) {
    std::vector<int> rev(sizes.size());
    for (size_t ax = 0; ax < sizes.size(); ++ax) rev[ax] = sizes[ax] - 1 - idx[ax];
    for (int ch = 0; ch < c; ++ch) f.at(rev, ch) = at(idx, ch);
    for (size_t ax = sizes.size(); ax-- > 0;) {
      if (++idx[ax] < sizes[ax]) break;
      idx[ax] = 0;
    }
  }
  return f;
}

PlaneKernel HermiteKernelTensor::channel_plane(int ch) const {
  if (sizes.size() != 2) throw std::logic_error("channel_plane requires a 2D kernel");
  PlaneKernel p(sizes[0], sizes[1], anchor[0], anchor[1]);
  for (int i = 0; i < sizes[0]; ++i)
    for (int j = 0; j < sizes[1]; ++j) p.at(i, j) = at({i, j}, ch);
  return p;
}

double HermiteKernelTensor::channel_sum(int ch) const {
  double s = 0.0;
  const long n = spatial_count();
  for (long flat = 0; flat < n; ++flat) s += w[flat * c + ch];
  return s;
}

HermiteKernelTensor build_kernel(const FractionalOffset& offset, const std::vector<int>& sizes,
                                 const std::vector<int>& nu, bool flipped) {
  offset.validate();
  const int n = offset.dim();
  if (static_cast<int>(sizes.size()) != n || static_cast<int>(nu.size()) != n)
    throw std::invalid_argument("offset/size/multiplicity dimension mismatch");
  for (int s : sizes)
    if (s < 1) throw std::invalid_argument("stencil size must be >= 1");

  HermiteKernelTensor K;
  K.sizes = sizes;
  K.nu = nu;
  K.channels = reverse_lex_enumerate(nu);
  K.c = static_cast<int>(K.channels.size());
  K.offset = offset;
  K.anchor.resize(n);

  RectilinearGrid grid;
  std::vector<double> x0(n);
  for (int ax = 0; ax < n; ++ax) {
    std::vector<double> axis(sizes[ax]);
    for (int i = 0; i < sizes[ax]; ++i) axis[i] = i;
    grid.axes.push_back(std::move(axis));
    K.anchor[ax] = stencil_anchor(sizes[ax], offset.frac[ax]);
    x0[ax] = K.anchor[ax] + offset.frac[ax];
  }
  const MultiplicityVector mv = MultiplicityVector::constant(nu);

  K.w.assign(static_cast<size_t>(K.spatial_count()) * K.c, 0.0);
  for (long flat = 0; flat < grid.node_count(); ++flat) {
    const auto a_idx = grid.unflatten(flat);
    DenseMatrix Linv = lambda_inverse(lambda_matrix(grid, a_idx, mv));
    std::vector<double> H(K.c);
    for (int k = 0; k < K.c; ++k)
      H[k] = basis_eval_factored(grid, mv, a_idx, K.channels[k], x0);
    // Row of weights: (H^T Lambda^{-1})_j multiplies data channel j at node a.
    for (int j = 0; j < K.c; ++j) {
      double v = 0.0;
      for (int k = 0; k < K.c; ++k) v += H[k] * Linv.at(k, j);
      K.at(a_idx, j) = v;
    }
  }
  return flipped ? K.flip() : K;
}

DenseMatrix axis_kernel_matrix(int size, int nu, double frac) {
  FractionalOffset off;
  off.frac = {frac};
  HermiteKernelTensor K = build_kernel(off, {size}, {nu});
  DenseMatrix M(size, nu);
  for (int i = 0; i < size; ++i)
    for (int k = 0; k < nu; ++k) M.at(i, k) = K.at({i}, k);
  return M;
}

}  // namespace hz
