// Command-line surface: model validation, theory tables, figure
// reproduction, simulation, estimation and the verification pipeline.
// Exit codes: 0 success, 1 validation/usage, 2 numerical check failure,
// 3 I/O failure.
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "ptvarfima/acvf.hpp"
#include "ptvarfima/estimate.hpp"
#include "ptvarfima/figures.hpp"
#include "ptvarfima/io.hpp"
#include "ptvarfima/model.hpp"
#include "ptvarfima/simulate.hpp"
#include "ptvarfima/svg.hpp"
#include "ptvarfima/verify.hpp"

namespace {

using namespace ptvarfima;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitCheckFailed = 2;
constexpr int kExitIo = 3;

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::ofstream open_output(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open output file: " + path.string());
  return out;
}

void ensure_dir(const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw IoError("cannot create directory: " + dir.string());
}

PtvArfimaModel load_model(const std::string& model_path) {
  if (model_path.empty())
    throw CLI::ValidationError("--model", "a model JSON file is required");
  return model_from_json_file(model_path);
}

int cmd_validate(const std::string& model_path) {
  const auto model = load_model(model_path);
  std::printf("model ok: period %d\n", model.period());
  std::printf("%-8s %-10s %-10s %s\n", "season", "d", "sigma2",
              "alpha per residue k = 0..p-1");
  for (int s = 1; s <= model.period(); ++s) {
    std::ostringstream alphas;
    for (int k = 0; k < model.period(); ++k) {
      if (k) alphas << ' ';
      char buf[32];
      std::snprintf(buf, sizeof(buf), "%.6g",
                    decay_law(model, SeasonIndex(s), k).alpha);
      alphas << buf;
    }
    std::printf("%-8d %-10.6g %-10.6g %s\n", s, model.d(SeasonIndex(s)),
                model.sigma2(SeasonIndex(s)), alphas.str().c_str());
  }
  return kExitOk;
}

int cmd_acvf(const std::string& model_path, int max_lag,
             const std::string& method_name, long long n_terms, bool with_acf,
             const std::string& output) {
  const auto model = load_model(model_path);
  AcvfMethod method;
  if (method_name == "exact") method = AcvfMethod::exact;
  else if (method_name == "series") method = AcvfMethod::series;
  else if (method_name == "asymptotic") method = AcvfMethod::asymptotic;
  else if (method_name == "hypergeometric") method = AcvfMethod::hypergeometric;
  else throw CLI::ValidationError("--method", "unknown method " + method_name);

  const auto table = acvf_table(model, max_lag, method, n_terms);
  if (output.empty() || output == "-") {
    write_acvf_csv(std::cout, table, with_acf);
  } else {
    auto out = open_output(output);
    write_acvf_csv(out, table, with_acf);
  }
  return kExitOk;
}

void write_figure(const std::filesystem::path& dir, const std::string& stem,
                  const PtvArfimaModel& model, int max_lag) {
  const auto curves = figure_curves(model, max_lag);

  auto csv = open_output(dir / (stem + ".csv"));
  csv << "season,lag,gamma,rho,method\n";
  for (int s = 1; s <= model.period(); ++s)
    for (int h = 0; h <= max_lag; ++h)
      csv << s << ',' << h << ','
          << format_full(curves.gamma[static_cast<std::size_t>(s - 1)]
                                     [static_cast<std::size_t>(h)])
          << ','
          << format_full(curves.rho[static_cast<std::size_t>(s - 1)]
                                   [static_cast<std::size_t>(h)])
          << ",exact\n";

  auto short_num = [](double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return std::string(buf);
  };
  static const char* kColors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd"};
  std::vector<PlotSeries> series;
  for (int s = 1; s <= model.period(); ++s) {
    PlotSeries ps;
    ps.label = "season " + std::to_string(s) +
               " (d=" + short_num(model.d(SeasonIndex(s))) + ")";
    ps.color = kColors[(s - 1) % 4];
    for (int h = 0; h <= max_lag; ++h) {
      ps.x.push_back(h);
      ps.y.push_back(curves.gamma[static_cast<std::size_t>(s - 1)]
                                 [static_cast<std::size_t>(h)]);
    }
    series.push_back(std::move(ps));
  }
  auto svg = open_output(dir / (stem + ".svg"));
  std::ostringstream title;
  title << "Periodic autocovariance, p=" << model.period() << ", d=("
        << short_num(model.d(SeasonIndex(1))) << ", "
        << short_num(model.d(SeasonIndex(2))) << ")";
  write_line_plot_svg(svg, title.str(), "lag h", "gamma", series);
}

int cmd_figures(const std::string& out_dir) {
  const std::filesystem::path dir(out_dir);
  ensure_dir(dir);
  const int max_lag = 100;
  write_figure(dir, "fig1", figure1_model(), max_lag);
  write_figure(dir, "fig2", figure2_model(), max_lag);

  const auto c1 = check_figure_claims(figure_curves(figure1_model(), max_lag));
  const auto c2 = check_figure_claims(figure_curves(figure2_model(), max_lag));
  bool ok = true;
  auto report = [&](const char* label, bool value) {
    std::printf("%-58s %s\n", label, value ? "yes" : "NO");
    ok = ok && value;
  };
  report("fig1: season-1 curve below season-2 curve, 1<=h<=100",
         c1.ordered_by_d);
  report("fig1: positive, decreasing along each residue class",
         c1.all_positive && c1.monotone_per_residue);
  report("fig2: season-1 curve below season-2 curve, 1<=h<=100",
         c2.ordered_by_d);
  report("fig2: positive, decreasing along each residue class",
         c2.all_positive && c2.monotone_per_residue);
  std::printf("%-58s fig1 %.6g, fig2 %.6g\n",
              "max vertical gap between season curves (h >= 1):", c1.max_gap,
              c2.max_gap);
  report("fig2 gap exceeds fig1 gap", c2.max_gap > c1.max_gap);
  std::printf("wrote fig1.csv fig1.svg fig2.csv fig2.svg under %s\n",
              out_dir.c_str());
  return ok ? kExitOk : kExitCheckFailed;
}

int cmd_simulate(const std::string& model_path, const std::string& out_dir,
                 int n, int truncation, int burn_in, int replicates,
                 std::uint64_t seed, bool keep_noise, int threads) {
  const auto model = load_model(model_path);
  if (burn_in < 0) burn_in = truncation;
  const std::filesystem::path dir(out_dir);
  ensure_dir(dir);

  const auto ensemble = simulate_ensemble(model, n, truncation, burn_in,
                                          replicates, seed, threads);
  std::vector<std::string> files;
  for (int r = 0; r < replicates; ++r) {
    std::string name;
    if (replicates == 1) {
      name = "path.csv";
    } else {
      char buf[32];
      std::snprintf(buf, sizeof(buf), "path_r%04d.csv", r + 1);
      name = buf;
    }
    auto out = open_output(dir / name);
    write_path_csv(out, ensemble.replicates[static_cast<std::size_t>(r)],
                   keep_noise);
    files.push_back(name);
  }
  auto manifest = open_output(dir / "manifest.json");
  manifest << manifest_json(ensemble, files, keep_noise);
  std::printf("wrote %zu path file(s) and manifest.json under %s\n",
              files.size(), out_dir.c_str());
  return kExitOk;
}

int cmd_estimate(const std::string& input, int period, int max_lag,
                 const std::string& centering_name,
                 const std::string& output) {
  std::vector<double> series;
  if (input == "-") {
    series = read_series_csv(std::cin);
  } else {
    series = read_series_csv_file(input);
  }
  const Centering centering = centering_name == "zero"
                                  ? Centering::zero
                                  : Centering::per_season_mean;
  auto stats = sample_periodic_acvf(series, period, max_lag, centering);
  stats = sample_periodic_acf(std::move(stats));
  if (output.empty() || output == "-") {
    write_stats_csv(std::cout, stats);
  } else {
    auto out = open_output(output);
    write_stats_csv(out, stats);
  }
  return kExitOk;
}

int cmd_verify(const VerifyOptions& options) {
  const auto results = run_verification(options);
  print_report(std::cout, results);
  const bool ok = all_passed(results);
  std::printf("verification: %s\n", ok ? "all checks passed" : "FAILURES");
  return ok ? kExitOk : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "ptvarfima: periodically time-varying ARFIMA(0, d_t, 0) processes -- "
      "exact/series/asymptotic periodic autocovariances, seeded simulation, "
      "inversion, periodic sample estimation and a verification pipeline"};
  app.require_subcommand(1);

  std::string model_path;
  std::string out_dir = ".";
  std::uint64_t seed = 12345;
  app.add_option("--model", model_path, "model JSON file")->expected(1);
  app.add_option("--out", out_dir, "output directory");
  auto* seed_opt =
      app.add_option("--seed", seed, "random seed (simulate/verify)");

  auto* validate = app.add_subcommand("validate", "validate a model document");

  auto* acvf = app.add_subcommand(
      "acvf", "emit the theoretical ACVF table as CSV (stdout by default)");
  int max_lag = 100;
  std::string method = "exact";
  long long n_terms = 1000000;
  bool with_acf = false;
  std::string acvf_output;
  acvf->add_option("--max-lag", max_lag, "largest lag")->check(CLI::NonNegativeNumber);
  acvf->add_option("--method", method,
                   "exact | series | asymptotic | hypergeometric");
  acvf->add_option("--n-terms", n_terms, "series truncation (method=series)");
  acvf->add_flag("--acf", with_acf, "include the rho column");
  acvf->add_option("--output", acvf_output, "output file ('-' for stdout)");

  auto* figures = app.add_subcommand(
      "figures",
      "emit fig1/fig2 CSV+SVG (d=(0.3,0.4) and d=(0.09,0.49), lags 0..100) "
      "and check the qualitative claims");

  auto* simulate = app.add_subcommand(
      "simulate", "simulate seeded sample paths and write CSV + manifest");
  int sim_n = 0;
  int truncation = kDefaultTruncation;
  int burn_in = -1;
  int replicates = 1;
  int threads = 0;
  bool keep_noise = false;
  simulate->add_option("--n", sim_n, "path length")->required();
  simulate->add_option("--truncation", truncation,
                       "moving-average truncation window M");
  simulate->add_option("--burn-in", burn_in,
                       "pre-sample noise span (default: truncation)");
  simulate->add_option("--replicates", replicates, "ensemble size");
  simulate->add_option("--threads", threads, "worker threads (0 = auto)");
  simulate->add_flag("--keep-noise", keep_noise,
                     "write the generating eps column");

  auto* estimate = app.add_subcommand(
      "estimate", "periodic sample ACVF/ACF from a path or plain series CSV");
  std::string input;
  int est_period = 0;
  int est_max_lag = 20;
  std::string centering = "mean";
  std::string est_output;
  estimate->add_option("--input", input, "input CSV ('-' for stdin)")
      ->required();
  estimate->add_option("--period", est_period, "candidate period")->required();
  estimate->add_option("--max-lag", est_max_lag, "largest lag");
  estimate->add_option("--centering", centering, "mean | zero");
  estimate->add_option("--output", est_output, "output file ('-' for stdout)");

  auto* verify = app.add_subcommand(
      "verify", "run the full verification pipeline (exit 2 on failure)");
  VerifyOptions vopt;
  verify->add_flag("--quick", vopt.quick, "smaller Monte-Carlo smoke run");
  verify->add_option("--replicates", vopt.replicates, "ensemble size");
  verify->add_option("--n", vopt.mc_n, "Monte-Carlo path length");
  verify->add_option("--truncation", vopt.truncation, "simulator truncation");
  verify->add_option("--series-terms", vopt.series_terms,
                     "series-oracle truncation");
  verify->add_option("--threads", vopt.threads, "worker threads (0 = auto)");
  verify->add_option("--tol-series", vopt.tol_series_slow,
                     "series-vs-exact tolerance for d=(0.3,0.4)");
  verify
      ->add_option("--inject-gamma-error", vopt.gamma_corruption,
                   "corrupt the Gamma kernel (negative-control hook)")
      ->group("");  // hidden

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (validate->parsed()) return cmd_validate(model_path);
    if (acvf->parsed())
      return cmd_acvf(model_path, max_lag, method, n_terms, with_acf,
                      acvf_output);
    if (figures->parsed()) return cmd_figures(out_dir);
    if (simulate->parsed())
      return cmd_simulate(model_path, out_dir, sim_n, truncation, burn_in,
                          replicates, seed, keep_noise, threads);
    if (estimate->parsed())
      return cmd_estimate(input, est_period, est_max_lag, centering,
                          est_output);
    if (verify->parsed()) {
      if (seed_opt->count() > 0) vopt.seed = seed;
      return cmd_verify(vopt);
    }
  } catch (const IoError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitIo;
  } catch (const CLI::ValidationError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitIo;
  }
  return kExitUsage;
}
