#include "hz/eval.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <limits>
#include <map>
#include <stdexcept>

#include "hz/baseline.hpp"
#include "hz/metrics.hpp"
#include "hz/pgm_io.hpp"
#include "hz/png_io.hpp"
#include "hz/threads.hpp"
#include "hz/zoom.hpp"

namespace hz {

std::vector<std::string> all_method_names() {
  return {"nearest",      "bilinear",     "bicubic",      "bspline3",
          "hermite-fir3", "hermite-fir5", "hermite-fir7", "hermite-iir"};
}

ImagePlane zoom2x_method(const ImagePlane& img, const std::string& method, int stencil, int nu) {
  if (method == "nearest" || method == "bilinear" || method == "bicubic" ||
      method == "bspline3")
    return zoom2x_baseline(img, method);
  DerivMode mode;
  if (method == "hermite-fir3")
    mode = DerivMode::FIR3;
  else if (method == "hermite-fir5")
    mode = DerivMode::FIR5;
  else if (method == "hermite-fir7")
    mode = DerivMode::FIR7;
  else if (method == "hermite-iir")
    mode = DerivMode::IIR;
  else
    throw std::invalid_argument("unknown method: " + method);
  ZoomKernelSet ks = build_zoom_set(stencil, {nu, nu}, mode);
  return zoom2x(img, ks, mode == DerivMode::IIR ? ZoomPath::Channels : ZoomPath::Fused);
}

namespace {

std::string file_stem(const std::string& path) {
  return std::filesystem::path(path).stem().string();
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

std::string fmt_metric(double v) {
  if (std::isinf(v)) return "inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

struct ImageResult {
  std::vector<EvalRow> rows;
  std::map<std::string, double> wall_ms;
  std::string failure;  // nonempty = image skipped
};

}  // namespace

EvalReport run_eval(const EvalConfig& cfg) {
  if (cfg.reps < 1) throw std::invalid_argument("reps must be >= 1");
  if (cfg.stencil < 2) throw std::invalid_argument("stencil must be >= 2");
  if (cfg.nu < 1) throw std::invalid_argument("nu must be >= 1");
  if (cfg.images.empty()) throw std::invalid_argument("no input images");
  std::vector<std::string> methods = cfg.methods.empty() ? all_method_names() : cfg.methods;

  if (cfg.dump_images && !cfg.out_dir.empty())
    std::filesystem::create_directories(cfg.out_dir);

  const long n_img = static_cast<long>(cfg.images.size());
  std::vector<ImageResult> results(cfg.images.size());

  parallel_for(n_img, n_img << 20, [&](long lo, long hi) {
    for (long idx = lo; idx < hi; ++idx) {
      ImageResult& res = results[idx];
      const std::string& path = cfg.images[idx];
      const std::string stem = file_stem(path);
      try {
        ImagePlane original = load_image(path);
        for (const std::string& method : methods) {
          ImagePlane cur = original;
          for (int rep = 1; rep <= cfg.reps; ++rep) {
            ImagePlane dec = decimate2x(cur, cfg.lp_len);
            auto t0 = std::chrono::steady_clock::now();
            ImagePlane z = zoom2x_method(dec, method, cfg.stencil, cfg.nu);
            auto t1 = std::chrono::steady_clock::now();
            res.wall_ms[method] +=
                std::chrono::duration<double, std::milli>(t1 - t0).count();
            if (z.h != original.h || z.w != original.w)
              z = crop(z, original.h, original.w);
            QualityScore q = quality(original, z);
            res.rows.push_back({stem, method, rep, q.psnr_db, q.ssim});
            if (cfg.dump_images && !cfg.out_dir.empty()) {
              std::string f = cfg.out_dir + "/" + stem + "_" + method + "_rep" +
                              std::to_string(rep) + ".pgm";
              save_pgm(f, z);
            }
            cur = std::move(z);
          }
        }
      } catch (const std::exception& e) {
        res.rows.clear();
        res.failure = stem + ": " + e.what();
      }
    }
  });

  EvalReport report;
  std::map<std::string, double> wall;
  for (const ImageResult& res : results) {
    if (!res.failure.empty()) {
      report.failures.push_back(res.failure);
      continue;
    }
    report.rows.insert(report.rows.end(), res.rows.begin(), res.rows.end());
    for (const auto& [m, ms] : res.wall_ms) wall[m] += ms;
  }
  std::sort(report.rows.begin(), report.rows.end(), [](const EvalRow& a, const EvalRow& b) {
    if (a.image != b.image) return a.image < b.image;
    if (a.method != b.method) return a.method < b.method;
    return a.rep < b.rep;
  });
  for (const std::string& m : methods) report.method_wall_ms.emplace_back(m, wall[m]);

  // Per-method mean of the final repetition across the surviving images.
  std::vector<std::string> sorted_methods = methods;
  std::sort(sorted_methods.begin(), sorted_methods.end());
  for (const std::string& m : sorted_methods) {
    double ps = 0.0, ss = 0.0;
    long k = 0;
    for (const EvalRow& r : report.rows) {
      if (r.method == m && r.rep == cfg.reps) {
        ps += r.psnr_db;
        ss += r.ssim;
        ++k;
      }
    }
    if (k > 0)
      report.totals.push_back(
          {"all", m, cfg.reps, ps / static_cast<double>(k), ss / static_cast<double>(k)});
  }
  return report;
}

void write_csv(const EvalReport& rep, std::ostream& os) {
  os << "image,method,rep,psnr,ssim\r\n";
  auto emit = [&](const EvalRow& r) {
    os << csv_field(r.image) << ',' << csv_field(r.method) << ',' << r.rep << ','
       << fmt_metric(r.psnr_db) << ',' << fmt_metric(r.ssim) << "\r\n";
  };
  for (const EvalRow& r : rep.rows) emit(r);
  for (const EvalRow& r : rep.totals) emit(r);
}

}  // namespace hz
