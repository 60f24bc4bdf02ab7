// Copyright (c) 2026 thermoline contributors
// SPDX-License-Identifier: Apache-2.0
#include "cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "thermoline/bessel.hpp"
#include "thermoline/detector.hpp"
#include "thermoline/quadrature.hpp"
#include "verify.hpp"

namespace thermoline::cli {

std::string format_value(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open output file: " + path);
  out << content;
  out.flush();
  if (!out) throw IoError("failed writing output file: " + path);
}

std::string spectrum_csv(const EnsembleParams& params, SpectralKind kind,
                         double x_min, double x_max, int points,
                         bool log_density) {
  const SpectralDensity table =
      tabulate_spectrum(params, kind, x_min, x_max, points);
  const double x_scale = params.omega0;
  const double d_scale = (kind == SpectralKind::intensity
                              ? params.intensity0 / params.omega0
                              : 1.0 / params.omega0);
  std::string csv = log_density ? "x,density,log_density\n" : "x,density\n";
  for (const SpectralPoint& p : table.points) {
    csv += format_value(p.x * x_scale);
    csv += ',';
    csv += format_value(p.density * d_scale);
    if (log_density) {
      csv += ',';
      csv += format_value(spectral_log_density(p.x, params.alpha, kind) +
                          std::log(d_scale));
    }
    csv += '\n';
  }
  return csv;
}

std::string histogram_csv(const WeightedHistogram& histogram) {
  std::string csv = "x_lo,x_hi,weight,weight_err\n";
  for (std::size_t i = 0; i < histogram.bins(); ++i) {
    csv += format_value(histogram.bin_edges()[i]);
    csv += ',';
    csv += format_value(histogram.bin_edges()[i + 1]);
    csv += ',';
    csv += format_value(histogram.weighted_counts()[i]);
    csv += ',';
    csv += format_value(std::sqrt(histogram.sum_sq_weights()[i]));
    csv += '\n';
  }
  return csv;
}

namespace {

void emit(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    if (!std::cout) throw IoError("failed writing to stdout");
  } else {
    write_file(path, content);
  }
}

SpectralKind parse_kind(const std::string& kind) {
  if (kind == "intensity") return SpectralKind::intensity;
  if (kind == "counting") return SpectralKind::counting;
  throw CLI::ValidationError("--kind", "must be 'intensity' or 'counting'");
}

WeightMode parse_mode(const std::string& mode) {
  if (mode == "intensity") return WeightMode::intensity;
  if (mode == "counting") return WeightMode::counting;
  if (mode == "unweighted") return WeightMode::unweighted;
  throw CLI::ValidationError(
      "--mode", "must be 'intensity', 'counting' or 'unweighted'");
}

void add_config(CLI::App* cmd) {
  cmd->set_config("--config", "",
                  "flat key=value configuration file; command-line flags "
                  "override file values");
  cmd->allow_config_extras(false);
}

}  // namespace

int run(int argc, const char* const* argv) {
  CLI::App app{
      "thermoline: observable spectrum of a relativistic thermal ensemble "
      "of monochromatic radiators"};
  app.require_subcommand(1);

  // --- spectrum ---
  auto* spectrum = app.add_subcommand(
      "spectrum", "tabulate the closed-form intensity/counting spectrum");
  struct {
    double alpha = 10.0;
    std::string kind = "intensity";
    double x_min = 0.5, x_max = 2.5;
    int points = 500;
    std::string out;
    bool log_density = false;
    double omega0 = 1.0, intensity0 = 1.0;
  } sp;
  spectrum->add_option("--alpha", sp.alpha, "alpha = m c^2 / kT")
      ->check(CLI::PositiveNumber);
  spectrum->add_option("--kind", sp.kind, "intensity|counting");
  spectrum->add_option("--x-min", sp.x_min, "lower frequency ratio")
      ->check(CLI::PositiveNumber);
  spectrum->add_option("--x-max", sp.x_max, "upper frequency ratio")
      ->check(CLI::PositiveNumber);
  spectrum->add_option("--points", sp.points, "grid points")
      ->check(CLI::Range(2, 100000000));
  spectrum->add_option("--out", sp.out, "output CSV path ('-' for stdout)")
      ->required();
  spectrum->add_flag("--log-density", sp.log_density,
                     "append a log_density column");
  spectrum->add_option("--omega0", sp.omega0,
                       "physical proper frequency scale for the x column")
      ->check(CLI::PositiveNumber);
  spectrum->add_option("--intensity0", sp.intensity0,
                       "physical intensity scale for the density column")
      ->check(CLI::NonNegativeNumber);
  add_config(spectrum);

  // --- sample ---
  auto* sample =
      app.add_subcommand("sample", "draw speeds from the Juttner ensemble");
  struct {
    double alpha = 10.0;
    std::uint64_t n = 0;
    std::uint64_t seed = 1;
    std::string out;
  } sa;
  sample->add_option("--alpha", sa.alpha, "alpha = m c^2 / kT")
      ->check(CLI::PositiveNumber);
  sample->add_option("--n", sa.n, "number of draws")->required();
  sample->add_option("--seed", sa.seed, "random stream seed");
  sample->add_option("--out", sa.out, "output CSV path ('-' for stdout)")
      ->required();
  add_config(sample);

  // --- simulate ---
  auto* simulate = app.add_subcommand(
      "simulate", "Monte Carlo spectrum estimate with registration weights");
  struct {
    double alpha = 10.0;
    std::string mode = "intensity";
    std::uint64_t n = 0;
    int bins = 100;
    double x_min = 0.0, x_max = 0.0;  // 0,0: derive from the speed quantile
    std::uint64_t seed = 1;
    std::uint64_t chunk_size = 65536;
    std::string out;
  } si;
  simulate->add_option("--alpha", si.alpha, "alpha = m c^2 / kT")
      ->check(CLI::PositiveNumber);
  simulate->add_option("--mode", si.mode, "intensity|counting|unweighted");
  simulate->add_option("--n", si.n, "number of emission events")->required();
  simulate->add_option("--bins", si.bins, "histogram bins")
      ->check(CLI::Range(1, 100000000));
  simulate->add_option("--x-min", si.x_min,
                       "histogram lower edge (default: 99.99% speed quantile)");
  simulate->add_option("--x-max", si.x_max, "histogram upper edge");
  simulate->add_option("--seed", si.seed, "random stream seed");
  simulate->add_option("--chunk-size", si.chunk_size,
                       "events per random stream chunk");
  simulate->add_option("--out", si.out, "output CSV path ('-' for stdout)")
      ->required();
  add_config(simulate);

  // --- scan ---
  auto* scan = app.add_subcommand(
      "scan", "Doppler-scan the line with a driven resonance detector");
  struct {
    double alpha = 100.0;
    double xd = 1.0;
    double gamma_d = 1e-3;
    int exponent = 4;
    double v_min = -0.5, v_max = 0.5;
    int v_points = 201;
    bool absorber = false;
    std::string out;
  } sc;
  scan->add_option("--alpha", sc.alpha, "alpha = m c^2 / kT")
      ->check(CLI::PositiveNumber);
  scan->add_option("--xd", sc.xd, "detector resonance frequency ratio")
      ->check(CLI::PositiveNumber);
  scan->add_option("--gamma-d", sc.gamma_d, "resonance FWHM in omega_0 units")
      ->check(CLI::PositiveNumber);
  scan->add_option("--exponent", sc.exponent, "response weight exponent")
      ->check(CLI::NonNegativeNumber);
  scan->add_option("--v-min", sc.v_min, "lowest drive velocity (v/c)");
  scan->add_option("--v-max", sc.v_max, "highest drive velocity (v/c)");
  scan->add_option("--v-points", sc.v_points, "velocity grid points")
      ->check(CLI::Range(2, 100000000));
  scan->add_flag("--absorber", sc.absorber,
                 "resonance absorber between source and detector "
                 "(transmission dip)");
  scan->add_option("--out", sc.out, "output CSV path ('-' for stdout)")
      ->required();
  add_config(scan);

  // --- moments ---
  auto* moments = app.add_subcommand(
      "moments", "closed-form weighted moments of the spectrum");
  struct {
    double alpha = 10.0;
    std::string kind = "intensity";
    int exponent = 0;
    std::string out;
  } mo;
  moments->add_option("--alpha", mo.alpha, "alpha = m c^2 / kT")
      ->check(CLI::PositiveNumber);
  moments->add_option("--kind", mo.kind, "intensity|counting");
  moments->add_option("--exponent", mo.exponent,
                      "detector weight exponent p in x^{-p}")
      ->check(CLI::NonNegativeNumber);
  moments->add_option("--out", mo.out, "output CSV path (default stdout)");
  add_config(moments);

  // --- table ---
  auto* table = app.add_subcommand(
      "table", "modified Bessel functions K_nu(x) for orders 0..N");
  struct {
    int order = 4;
    double x = 1.0;
    bool scaled = false;
    std::string out;
  } tb;
  table->add_option("--order", tb.order, "highest order")
      ->check(CLI::Range(0, kMaxBesselOrder));
  table->add_option("--x", tb.x, "argument")->check(CLI::PositiveNumber);
  table->add_flag("--scaled", tb.scaled, "tabulate e^x K_nu(x)");
  table->add_option("--out", tb.out, "output CSV path (default stdout)");
  add_config(table);

  // --- verify ---
  auto* verify = app.add_subcommand(
      "verify", "run the registered cross-checks and report pass/fail");
  bool fast = false;
  verify->add_flag("--fast", fast, "smaller statistical samples (smoke run)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*spectrum) {
      EnsembleParams params{sp.alpha, sp.omega0, sp.intensity0};
      emit(sp.out, spectrum_csv(params, parse_kind(sp.kind), sp.x_min,
                                sp.x_max, sp.points, sp.log_density));
      return kExitSuccess;
    }
    if (*sample) {
      RandomStream stream(sa.seed);
      std::string csv = "beta\n";
      for (const double b : juttner_sample(sa.alpha, sa.n, stream)) {
        csv += format_value(b);
        csv += '\n';
      }
      emit(sa.out, csv);
      return kExitSuccess;
    }
    if (*simulate) {
      SimulationSpec spec;
      spec.params.alpha = si.alpha;
      spec.mode = parse_mode(si.mode);
      spec.n_samples = si.n;
      spec.bins = si.bins;
      spec.seed = si.seed;
      spec.chunk_size = si.chunk_size;
      if (si.x_min == 0.0 && si.x_max == 0.0) {
        const HistogramRange range = default_histogram_range(si.alpha);
        spec.x_lo = range.x_lo;
        spec.x_hi = range.x_hi;
      } else {
        spec.x_lo = si.x_min;
        spec.x_hi = si.x_max;
      }
      const SimulationResult result = simulate_spectrum(spec);
      emit(si.out, histogram_csv(result.histogram));
      std::cout << "n_samples,total_weight,mean_x,mean_x_error,"
                   "effective_sample_size,out_of_range_weight\n"
                << result.n_samples << ','
                << format_value(result.total_weight) << ','
                << format_value(result.mean_x) << ','
                << format_value(result.mean_x_error) << ','
                << format_value(result.effective_sample_size) << ','
                << format_value(result.histogram.out_of_range_weight())
                << '\n';
      return kExitSuccess;
    }
    if (*scan) {
      DetectorConfig cfg;
      cfg.x_d = sc.xd;
      cfg.gamma_d = sc.gamma_d;
      cfg.weight_exponent = sc.exponent;
      cfg.absorber = sc.absorber;
      cfg.drive_velocities.reserve(static_cast<std::size_t>(sc.v_points));
      for (int i = 0; i < sc.v_points; ++i) {
        cfg.drive_velocities.push_back(
            sc.v_min + (sc.v_max - sc.v_min) * i / (sc.v_points - 1));
      }
      const ScanCurve curve = doppler_scan(sc.alpha, cfg);
      std::string csv = "v_over_c,count_rate\n";
      for (std::size_t i = 0; i < curve.drive_velocities.size(); ++i) {
        csv += format_value(curve.drive_velocities[i]);
        csv += ',';
        csv += format_value(curve.count_rate[i]);
        csv += '\n';
      }
      emit(sc.out, csv);
      std::cout << "centroid_velocity,centroid_frequency_ratio\n"
                << format_value(curve.centroid_velocity) << ','
                << format_value(curve.centroid_frequency_ratio) << '\n';
      return kExitSuccess;
    }
    if (*moments) {
      const SpectralKind kind = parse_kind(mo.kind);
      const double m1 = spectral_moment(mo.alpha, kind, mo.exponent, 1);
      const double m2 = spectral_moment(mo.alpha, kind, mo.exponent, 2);
      std::string csv = "kind,weight_exponent,mean,second_moment,variance\n";
      csv += mo.kind + ',' + std::to_string(mo.exponent) + ',' +
             format_value(m1) + ',' + format_value(m2) + ',' +
             format_value(m2 - m1 * m1) + '\n';
      emit(mo.out, csv);
      return kExitSuccess;
    }
    if (*table) {
      std::string csv = "order,x,value\n";
      for (int nu = 0; nu <= tb.order; ++nu) {
        const double v =
            tb.scaled ? bessel_k_scaled(nu, tb.x) : bessel_k(nu, tb.x);
        csv += std::to_string(nu) + ',' + format_value(tb.x) + ',' +
               format_value(v) + '\n';
      }
      emit(tb.out, csv);
      return kExitSuccess;
    }
    if (*verify) {
      return run_verification(fast, std::cout);
    }
  } catch (const IoError& e) {
    std::cerr << "I/O error: " << e.what() << '\n';
    return kExitIo;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "failure: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace thermoline::cli
