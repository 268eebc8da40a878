#include "hz/grid.hpp"

#include <stdexcept>

namespace hz {

long RectilinearGrid::node_count() const {
  long n = 1;
  for (const auto& axis : axes) n *= static_cast<long>(axis.size());
  return n;
}

void RectilinearGrid::validate() const {
  if (axes.empty()) throw std::invalid_argument("grid has no axes");
  for (const auto& axis : axes) {
    if (axis.empty()) throw std::invalid_argument("grid axis has no nodes");
    for (size_t i = 1; i < axis.size(); ++i)
      if (!(axis[i - 1] < axis[i]))
        throw std::invalid_argument("grid axis nodes must be strictly increasing");
  }
}

long RectilinearGrid::flatten(const std::vector<int>& idx) const {
  long flat = 0;
  for (int ax = 0; ax < dim(); ++ax) {
    flat = flat * static_cast<long>(axes[ax].size()) + idx[ax];
  }
  return flat;
}

std::vector<int> RectilinearGrid::unflatten(long flat) const {
  std::vector<int> idx(dim());
  for (int ax = dim(); ax-- > 0;) {
    long n = static_cast<long>(axes[ax].size());
    idx[ax] = static_cast<int>(flat % n);
    flat /= n;
  }
  return idx;
}

std::vector<double> RectilinearGrid::coords(const std::vector<int>& idx) const {
  std::vector<double> x(dim());
  for (int ax = 0; ax < dim(); ++ax) x[ax] = axes[ax].at(idx[ax]);
  return x;
}

}  // namespace hz
