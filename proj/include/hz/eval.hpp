#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "hz/image.hpp"

namespace hz {

// Cascaded x2 resampling benchmark: per repetition the current image is
// low-pass filtered, decimated x2, zoomed x2 by the method under test,
// compared against the original, and fed (unquantized) to the next round.
struct EvalConfig {
  std::vector<std::string> methods;  // empty = all_method_names()
  int reps = 20;
  int stencil = 5;
  int nu = 3;
  int lp_len = 13;
  std::vector<std::string> images;  // file paths
  std::string out_dir;              // destination of per-rep dumps
  bool dump_images = false;
};

struct EvalRow {
  std::string image;  // file stem; "all" in totals
  std::string method;
  int rep = 0;
  double psnr_db = 0.0;
  double ssim = 0.0;
};

struct EvalReport {
  std::vector<EvalRow> rows;    // sorted by (image, method, rep)
  std::vector<EvalRow> totals;  // per-method mean over images at the final rep
  std::vector<std::pair<std::string, double>> method_wall_ms;  // summed zoom time
  std::vector<std::string> failures;  // "<image>: <reason>", image skipped
};

// nearest, bilinear, bicubic, bspline3, hermite-fir3/5/7, hermite-iir.
std::vector<std::string> all_method_names();

// One x2 zoom by method name; Hermite methods use the given stencil size and
// per-axis multiplicity (fused path for FIR modes, channel path for IIR).
ImagePlane zoom2x_method(const ImagePlane& img, const std::string& method, int stencil, int nu);

EvalReport run_eval(const EvalConfig& cfg);

// RFC 4180, header image,method,rep,psnr,ssim; %.6f values, "inf" sentinel;
// totals appended after the data rows.
void write_csv(const EvalReport& rep, std::ostream& os);

}  // namespace hz
