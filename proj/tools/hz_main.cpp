#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hz/baseline.hpp"
#include "hz/compact.hpp"
#include "hz/deriv_stack.hpp"
#include "hz/eval.hpp"
#include "hz/fir.hpp"
#include "hz/hkt_io.hpp"
#include "hz/kernel.hpp"
#include "hz/png_io.hpp"
#include "hz/zoom.hpp"

namespace {

std::string fmt17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void print_taps(std::ostream& os, const std::string& label, const std::vector<double>& t) {
  os << label << ":";
  for (double v : t) os << ' ' << fmt17(v);
  os << '\n';
}

// Text plane dump: "FLOAT <h> <w>" then one row per line, 17 significant
// digits. PGM cannot carry negative derivative samples.
void write_float_plane(const std::string& path, const hz::ImagePlane& img) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot write " + path);
  os << "FLOAT " << img.h << ' ' << img.w << '\n';
  for (int i = 0; i < img.h; ++i) {
    for (int j = 0; j < img.w; ++j) os << (j ? " " : "") << fmt17(img.at(i, j));
    os << '\n';
  }
}

struct KernelArgs {
  std::vector<double> offset{0.5, 0.5};
  int size = 5;
  int nu = 3;
  bool flip = false;
  std::string out;
};

struct DerivsArgs {
  std::string input, mode = "fir5", out_prefix;
  int nu = 3;
};

struct ZoomArgs {
  std::string input, output, method = "hermite-fir5";
  int stencil = 5, nu = 3;
};

struct DecimateArgs {
  std::string input, output;
  int lp_len = 13;
};

struct EvalArgs {
  std::vector<std::string> images, methods;
  int reps = 20, stencil = 5, nu = 3, lp_len = 13;
  std::string out = "-", dump_dir;
};

void run_kernel(const KernelArgs& a) {
  for (double f : a.offset)
    if (!(f >= 0.0 && f < 1.0)) throw CLI::ValidationError("--offset", "must be in [0, 1)");
  std::vector<int> sizes(a.offset.size(), a.size), nus(a.offset.size(), a.nu);
  hz::HermiteKernelTensor k = hz::build_kernel({a.offset}, sizes, nus, a.flip);
  if (a.out.empty()) {
    hz::dump_hkt(std::cout, k);
  } else {
    std::ofstream os(a.out);
    if (!os) throw std::runtime_error("cannot write " + a.out);
    hz::dump_hkt(os, k);
  }
}

void run_derivs(const DerivsArgs& a) {
  hz::DerivMode mode = hz::parse_deriv_mode(a.mode);
  if (mode == hz::DerivMode::IIR) {
    hz::CompactScheme s = hz::derive_compact_scheme();
    print_taps(std::cout, "Q1", s.Q1);
    print_taps(std::cout, "R1", s.R1);
    print_taps(std::cout, "poles1", {s.poles1[0], s.poles1[1]});
    std::cout << "gain1: " << fmt17(s.gain1) << '\n';
    print_taps(std::cout, "Q2", s.Q2);
    print_taps(std::cout, "R2", s.R2);
    print_taps(std::cout, "poles2", {s.poles2[0], s.poles2[1]});
    std::cout << "gain2: " << fmt17(s.gain2) << '\n';
  } else {
    int len = hz::fir_length(mode);
    for (int d = 0; d < a.nu; ++d) {
      hz::FirFilter f = (d == 0) ? hz::fir_impulse() : hz::fir_taps(d, len);
      print_taps(std::cout, "d" + std::to_string(d), f.taps);
    }
  }
  if (!a.out_prefix.empty()) {
    if (a.input.empty())
      throw CLI::ValidationError("--out-prefix", "plane dumps need --input");
    hz::ImagePlane img = hz::load_image(a.input);
    hz::DerivativeStack stack = hz::derivative_stack(img, {a.nu, a.nu}, mode);
    for (size_t c = 0; c < stack.planes.size(); ++c) {
      std::string name = a.out_prefix + "_d" + std::to_string(stack.channels[c][0]) +
                         std::to_string(stack.channels[c][1]) + ".txt";
      write_float_plane(name, stack.planes[c]);
      std::cout << "wrote " << name << '\n';
    }
  }
}

void run_zoom(const ZoomArgs& a) {
  hz::ImagePlane img = hz::load_image(a.input);
  hz::ImagePlane out = hz::zoom2x_method(img, a.method, a.stencil, a.nu);
  hz::save_image(a.output, out);
}

void run_decimate(const DecimateArgs& a) {
  hz::ImagePlane img = hz::load_image(a.input);
  hz::save_image(a.output, hz::decimate2x(img, a.lp_len));
}

void run_eval(const EvalArgs& a) {
  hz::EvalConfig cfg;
  cfg.methods = a.methods;
  cfg.reps = a.reps;
  cfg.stencil = a.stencil;
  cfg.nu = a.nu;
  cfg.lp_len = a.lp_len;
  cfg.images = a.images;
  cfg.out_dir = a.dump_dir;
  cfg.dump_images = !a.dump_dir.empty();
  hz::EvalReport rep = hz::run_eval(cfg);
  if (a.out == "-") {
    hz::write_csv(rep, std::cout);
  } else {
    std::ofstream os(a.out, std::ios::binary);
    if (!os) throw std::runtime_error("cannot write " + a.out);
    hz::write_csv(rep, os);
  }
  for (const auto& [m, ms] : rep.method_wall_ms)
    std::fprintf(stderr, "%-14s zoom time %.1f ms\n", m.c_str(), ms);
  for (const std::string& f : rep.failures)
    std::fprintf(stderr, "warning: partial report, image skipped: %s\n", f.c_str());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hermite spline interpolation kernels and x2 image zooming"};
  app.require_subcommand(1);

  KernelArgs ka;
  auto* k = app.add_subcommand("kernel", "Build a kernel tensor and dump it as text");
  k->add_option("--offset", ka.offset, "fractional offset per axis, in [0,1)")
      ->delimiter(',')
      ->expected(1, 8);
  k->add_option("--size", ka.size, "stencil nodes per axis")->check(CLI::Range(2, 64));
  k->add_option("--nu", ka.nu, "conditions per node per axis")->check(CLI::Range(1, 8));
  k->add_flag("--flip", ka.flip, "emit the convolution orientation");
  k->add_option("--out", ka.out, "output path (default stdout)");
  k->callback([&] { run_kernel(ka); });

  DerivsArgs da;
  auto* d = app.add_subcommand("derivs", "Dump derivative filter taps and planes");
  d->add_option("--input", da.input, "image whose derivative planes to dump");
  d->add_option("--mode", da.mode, "fir3|fir5|fir7|iir")
      ->check(CLI::IsMember({"fir3", "fir5", "fir7", "iir"}));
  d->add_option("--nu", da.nu, "orders per axis (planes 0..nu-1)")->check(CLI::Range(1, 8));
  d->add_option("--out-prefix", da.out_prefix, "write <prefix>_dRC.txt per channel");
  d->callback([&] { run_derivs(da); });

  ZoomArgs za;
  auto* z = app.add_subcommand("zoom", "x2 zoom an image");
  z->add_option("--input", za.input)->required();
  z->add_option("--output", za.output)->required();
  z->add_option("--method", za.method)->check(CLI::IsMember(hz::all_method_names()));
  z->add_option("--stencil", za.stencil)->check(CLI::Range(2, 16));
  z->add_option("--nu", za.nu)->check(CLI::Range(1, 4));
  z->callback([&] { run_zoom(za); });

  DecimateArgs dca;
  auto* dc = app.add_subcommand("decimate", "Low-pass and x2 decimate an image");
  dc->add_option("--input", dca.input)->required();
  dc->add_option("--output", dca.output)->required();
  dc->add_option("--lp-len", dca.lp_len, "low-pass length (odd)")->check(CLI::Range(3, 99));
  dc->callback([&] { run_decimate(dca); });

  EvalArgs ea;
  auto* e = app.add_subcommand("eval", "Cascaded decimate/zoom benchmark, CSV report");
  e->add_option("--images", ea.images, "input images")->required()->expected(1, 1024);
  e->add_option("--methods", ea.methods, "methods to compare (default: all)")
      ->check(CLI::IsMember(hz::all_method_names()));
  e->add_option("--reps", ea.reps, "cascade repetitions")->check(CLI::Range(1, 200));
  e->add_option("--stencil", ea.stencil)->check(CLI::Range(2, 16));
  e->add_option("--nu", ea.nu)->check(CLI::Range(1, 4));
  e->add_option("--lp-len", ea.lp_len)->check(CLI::Range(3, 99));
  e->add_option("--out", ea.out, "CSV path, - for stdout");
  e->add_option("--dump-dir", ea.dump_dir, "write per-repetition images here");
  e->callback([&] { run_eval(ea); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& h) {
    return app.exit(h);
  } catch (const CLI::CallForAllHelp& h) {
    return app.exit(h);
  } catch (const CLI::ParseError& pe) {
    app.exit(pe);
    return 2;
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << '\n';
    return 1;
  }
  return 0;
}
