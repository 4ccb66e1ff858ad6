// ammann: tilings, fractals, and dimension spectra of the Ammann Chair
// substitution system, with exact-arithmetic guts and deterministic outputs.
//
// Exit codes: 0 success, 1 verification failure, 2 invalid parameters or
// resource cap, 3 empty fractal (every tile removed), 4 search target not
// reached.

#include "ammann/dimension.hpp"
#include "ammann/render.hpp"
#include "ammann/spectrum.hpp"
#include "ammann/substitution.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

namespace {

using ammann::BigInt;

std::string f12(double v) { return ammann::detail::format_fixed(v, 12); }

BigInt parse_count(const std::string& text, const std::string& flag) {
  if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos)
    throw ammann::InvalidRangeError(flag + " must be a nonnegative integer, got '" + text +
                                    "'");
  return BigInt(text);
}

ammann::MaskStrategy parse_strategy(const std::string& name) {
  if (name == "first") return ammann::MaskStrategy::First;
  if (name == "last") return ammann::MaskStrategy::Last;
  if (name == "random") return ammann::MaskStrategy::Random;
  throw ammann::InvalidRangeError("unknown strategy '" + name +
                                  "' (expected first, last, or random)");
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  out << content;
  if (!out.good()) throw ammann::Error("cannot write " + path);
}

struct Options {
  int n = 5;
  std::string a = "0", b = "0";
  int steps = 1;
  int k = 1;
  int iters = 80;
  int n_max = 60;
  int verify_n = 8;
  double target = 1.0;
  double eps = 0.01;
  std::uint64_t seed = 0;
  std::uint64_t max_tiles = 5'000'000;
  std::string strategy = "first";
  std::string color_by = "label";
  std::string out;
  bool json = false;
};

int require_positive_n(int n) {
  if (n < 1) {
    std::cerr << "n must be >= 1\n";
    return 2;
  }
  return 0;
}

int run_tiling(const Options& opt) {
  if (int rc = require_positive_n(opt.n)) return rc;
  if (opt.color_by != "label") {
    std::cerr << "unknown --color-by value '" << opt.color_by << "' (expected label)\n";
    return 2;
  }
  const ammann::RuleExpansion exp =
      ammann::expand(opt.n, static_cast<std::size_t>(opt.max_tiles));
  write_file(opt.out, ammann::render_svg(exp.children));
  std::cout << "wrote " << exp.children.size() << " tiles to " << opt.out << "\n";
  return 0;
}

int run_fractal(const Options& opt) {
  if (int rc = require_positive_n(opt.n)) return rc;
  const ammann::TileCollection tiles = ammann::iterate(
      opt.n, parse_count(opt.a, "--a"), parse_count(opt.b, "--b"), opt.steps,
      parse_strategy(opt.strategy), opt.seed, static_cast<std::size_t>(opt.max_tiles));
  write_file(opt.out, ammann::render_svg(tiles));
  std::cout << "wrote " << tiles.tiles.size() << " tiles to " << opt.out << "\n";
  return 0;
}

int run_dimension(const Options& opt) {
  if (int rc = require_positive_n(opt.n)) return rc;
  const ammann::DimensionResult res = ammann::similarity_dimension(
      opt.n, parse_count(opt.a, "--a"), parse_count(opt.b, "--b"), opt.iters);
  const double lo = res.root_interval.lo.convert_to<double>();
  const double hi = res.root_interval.hi.convert_to<double>();
  if (opt.json) {
    std::cout << "{\"n\":" << res.n << ",\"a\":" << res.a.str() << ",\"b\":" << res.b.str()
              << ",\"root_lo\":" << f12(lo) << ",\"root_hi\":" << f12(hi)
              << ",\"root\":" << f12(res.root) << ",\"dimension\":" << f12(res.dimension)
              << "}\n";
  } else {
    std::cout << "d = " << f12(res.dimension) << " (root ∈ [" << f12(lo) << ","
              << f12(hi) << "])\n";
  }
  return 0;
}

int run_spectrum(const Options& opt) {
  const std::vector<ammann::SpectrumRow> rows = ammann::sweep(opt.n, opt.iters);
  std::string csv = "n,a,b,removed,total,fraction,root,dimension\n";
  for (const ammann::SpectrumRow& row : rows) {
    csv += std::to_string(row.n) + "," + row.a.str() + "," + row.b.str() + "," +
           row.removed.str() + "," + row.total.str() + "," + f12(row.fraction) + "," +
           f12(row.root) + "," + f12(row.dimension) + "\n";
  }
  write_file(opt.out, csv);
  std::cout << "wrote " << rows.size() << " rows to " << opt.out << "\n";
  return 0;
}

int run_approx(const Options& opt) {
  const ammann::ApproxResult res =
      ammann::approx_dimension(opt.target, opt.eps, opt.n_max, opt.iters);
  const double err = std::abs(res.dimension - res.target);
  if (opt.json) {
    std::cout << "{\"target\":" << f12(res.target) << ",\"eps\":" << f12(res.eps)
              << ",\"n\":" << res.n << ",\"a\":" << res.a.str() << ",\"b\":" << res.b.str()
              << ",\"root\":" << f12(res.root) << ",\"dimension\":" << f12(res.dimension)
              << ",\"reached\":" << (res.reached ? "true" : "false") << "}\n";
  } else if (res.reached) {
    std::cout << "found (n,a,b) = (" << res.n << "," << res.a.str() << "," << res.b.str()
              << ") with d = " << f12(res.dimension) << " (err " << f12(err) << ")\n";
  } else {
    std::cout << "target not reached by --n-max " << opt.n_max << ": best (n,a,b) = ("
              << res.n << "," << res.a.str() << "," << res.b.str()
              << ") with d = " << f12(res.dimension) << " (err " << f12(err) << ")\n";
  }
  return res.reached ? 0 : 4;
}

int run_lift(const Options& opt) {
  if (int rc = require_positive_n(opt.n)) return rc;
  const std::vector<ammann::LiftResult> rows = ammann::lift_drift_report(
      opt.n, parse_count(opt.a, "--a"), parse_count(opt.b, "--b"), opt.k, opt.iters);
  if (opt.json) {
    std::cout << "{\"rows\":[";
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const ammann::LiftResult& r = rows[i];
      std::cout << (i ? "," : "") << "{\"k\":" << r.k << ",\"n\":" << r.n
                << ",\"a\":" << r.a.str() << ",\"b\":" << r.b.str()
                << ",\"n_lifted\":" << r.n_lifted << ",\"a_lifted\":" << r.a_lifted.str()
                << ",\"b_lifted\":" << r.b_lifted.str() << ",\"d\":" << f12(r.d)
                << ",\"d_lifted\":" << f12(r.d_lifted) << ",\"drift\":" << f12(r.drift)
                << "}";
    }
    std::cout << "]}\n";
  } else {
    for (const ammann::LiftResult& r : rows) {
      std::cout << "k=" << r.k << ": (" << r.n << "," << r.a.str() << "," << r.b.str()
                << ") -> (" << r.n_lifted << "," << r.a_lifted.str() << ","
                << r.b_lifted.str() << ")  d = " << f12(r.d)
                << "  d' = " << f12(r.d_lifted) << "  drift = " << f12(r.drift) << "\n";
    }
  }
  return 0;
}

int run_verify(const Options& opt) {
  if (int rc = require_positive_n(opt.verify_n)) return rc;
  if (opt.verify_n > 12) {
    std::cerr << "n must be in [1, 12] (grid memory grows quadratically)\n";
    return 2;
  }
  for (int g = 1; g <= opt.verify_n; ++g) {
    const ammann::RuleExpansion exp = ammann::expand(g);
    const ammann::PartitionReport report = ammann::verify_partition(
        ammann::Similarity{}, std::span<const ammann::PlacedTile>(exp.children));
    if (!report.ok) {
      std::cerr << "generation " << g << ": " << report.message << "\n";
      return 1;
    }
    if (ammann::total_area(exp.children) != ammann::prototile_area()) {
      std::cerr << "generation " << g << ": total child area differs from parent area "
                << ammann::to_string(ammann::prototile_area()) << "\n";
      return 1;
    }
  }
  std::cout << "OK: generations 1.." << opt.verify_n << " partition exactly\n";
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ammann Chair tilings, (n,a,b)-fractals, and dimension spectra"};
  app.require_subcommand(1);
  Options opt;

  CLI::App* tiling = app.add_subcommand("tiling", "render generation n of the tiling");
  tiling->add_option("--n", opt.n, "substitution steps")->required();
  tiling->add_option("--out", opt.out, "output SVG path")->required();
  tiling->add_option("--color-by", opt.color_by, "coloring mode (label)");
  tiling->add_option("--max-tiles", opt.max_tiles, "tile count cap");

  CLI::App* fractal = app.add_subcommand("fractal", "render an (n,a,b)-fractal iterate");
  fractal->add_option("--n", opt.n, "substitution order")->required();
  fractal->add_option("--a", opt.a, "Small tiles removed per step")->required();
  fractal->add_option("--b", opt.b, "Big tiles removed per step")->required();
  fractal->add_option("--steps", opt.steps, "composite iterations")->required();
  fractal->add_option("--strategy", opt.strategy, "first, last, or random");
  fractal->add_option("--seed", opt.seed, "random strategy seed");
  fractal->add_option("--max-tiles", opt.max_tiles, "tile count cap");
  fractal->add_option("--out", opt.out, "output SVG path")->required();

  CLI::App* dimension = app.add_subcommand("dimension", "similarity dimension d(n,a,b)");
  dimension->add_option("--n", opt.n, "substitution order")->required();
  dimension->add_option("--a", opt.a, "Small tiles removed per step")->required();
  dimension->add_option("--b", opt.b, "Big tiles removed per step")->required();
  dimension->add_option("--iters", opt.iters, "bisection iterations");
  dimension->add_flag("--json", opt.json, "machine-readable output");

  CLI::App* spectrum = app.add_subcommand("spectrum", "dimension sweep CSV for fixed n");
  spectrum->add_option("--n", opt.n, "substitution order")->required();
  spectrum->add_option("--out", opt.out, "output CSV path")->required();
  spectrum->add_option("--iters", opt.iters, "bisection iterations");

  CLI::App* approx = app.add_subcommand("approx", "search (n,a,b) near a target dimension");
  approx->add_option("--target", opt.target, "target dimension in [0,2]")->required();
  approx->add_option("--eps", opt.eps, "acceptable |d - target|")->required();
  approx->add_option("--n-max", opt.n_max, "largest n to try");
  approx->add_option("--iters", opt.iters, "bisection iterations");
  approx->add_flag("--json", opt.json, "machine-readable output");

  CLI::App* lift = app.add_subcommand("lift", "dimension drift under the Fibonacci lift");
  lift->add_option("--n", opt.n, "substitution order")->required();
  lift->add_option("--a", opt.a, "Small tiles removed per step")->required();
  lift->add_option("--b", opt.b, "Big tiles removed per step")->required();
  lift->add_option("--k", opt.k, "maximum lift steps")->required();
  lift->add_option("--iters", opt.iters, "bisection iterations");
  lift->add_flag("--json", opt.json, "machine-readable output");

  CLI::App* verify = app.add_subcommand("verify", "exact partition check per generation");
  verify->add_option("--n", opt.verify_n, "check generations 1..n");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*tiling) return run_tiling(opt);
    if (*fractal) return run_fractal(opt);
    if (*dimension) return run_dimension(opt);
    if (*spectrum) return run_spectrum(opt);
    if (*approx) return run_approx(opt);
    if (*lift) return run_lift(opt);
    if (*verify) return run_verify(opt);
  } catch (const ammann::EmptyFractalError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const ammann::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
