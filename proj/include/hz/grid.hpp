#pragma once

#include <vector>

namespace hz {

// Rectilinear grid: per-axis strictly increasing node coordinates.
struct RectilinearGrid {
  std::vector<std::vector<double>> axes;

  int dim() const { return static_cast<int>(axes.size()); }
  long node_count() const;
  void validate() const;  // throws on empty or non-increasing axes

  // Row-major flattening of node multi-indices (last axis fastest).
  long flatten(const std::vector<int>& idx) const;
  std::vector<int> unflatten(long flat) const;
  std::vector<double> coords(const std::vector<int>& idx) const;
};

}  // namespace hz
