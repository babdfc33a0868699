// Acceptance suite: runs every verification criterion at its stated
// tolerance and prints one pass/fail line per criterion. The process-level
// determinism criterion drives the actual CLI binary (path in argv[1]).
#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "ptvarfima/io.hpp"
#include "ptvarfima/model.hpp"
#include "ptvarfima/verify.hpp"

namespace fs = std::filesystem;
using namespace ptvarfima;

namespace {

const char* kCriterionLabels[] = {
    "",
    "triple agreement: closed form vs hypergeometric route",
    "oracle agreement: truncated product series vs closed form",
    "stationary ARFIMA reduction",
    "period-2 odd/even split consistency",
    "hyperbolic decay law at h = 1e4 and 1e6",
    "figure reproduction: ordering, shape, season gap",
    "Monte-Carlo ensemble vs closed forms",
    "shift-invariance diagnostic (positive and negative control)",
    "inversion round-trip correlation",
    "byte-identical CLI replay (simulate, figures)",
};

int run_command(const std::string& cmd) {
  const int rc = std::system(cmd.c_str());
  return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) return "<missing:" + p.string() + ">";
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

bool cli_determinism(const std::string& cli, std::vector<CheckResult>& out) {
  const fs::path root = fs::temp_directory_path() / "ptvarfima_acceptance";
  fs::remove_all(root);
  fs::create_directories(root);
  const fs::path model = root / "model.json";
  {
    std::ofstream m(model);
    m << model_to_json(figure1_model());
  }

  auto run_twice = [&](const std::string& tag, const std::string& args,
                       const std::vector<std::string>& files) {
    bool same = true;
    const fs::path a = root / (tag + "_a"), b = root / (tag + "_b");
    for (const auto& dir : {a, b}) {
      const std::string cmd = cli + " --model " + model.string() + " --out " +
                              dir.string() + " " + args + " > /dev/null 2>&1";
      if (run_command(cmd) != 0) same = false;
    }
    for (const auto& f : files)
      if (slurp(a / f) != slurp(b / f)) same = false;
    out.push_back({10, "repeated `" + tag + "` runs emit identical bytes",
                   "identical", same ? "identical" : "diverged", 0.0, same,
                   false});
    return same;
  };

  const bool sim_ok = run_twice(
      "simulate",
      "--seed 20260808 simulate --n 128 --truncation 256 --keep-noise",
      {"path.csv", "manifest.json"});
  const bool fig_ok = run_twice("figures", "figures",
                                {"fig1.csv", "fig1.svg", "fig2.csv", "fig2.svg"});
  return sim_ok && fig_ok;
}

}  // namespace

int main(int argc, char** argv) {
  VerifyOptions options;  // spec-pinned defaults: R=500, n=4096, M=5000
  const auto results = run_verification(options);

  std::printf("---- individual checks ----\n");
  std::ostringstream report;
  print_report(report, results);
  std::fputs(report.str().c_str(), stdout);

  std::map<int, bool> criterion_pass;
  for (int c = 1; c <= 9; ++c) criterion_pass[c] = true;
  for (const auto& r : results)
    if (!r.diagnostic && r.criterion >= 1 && r.criterion <= 9)
      criterion_pass[r.criterion] = criterion_pass[r.criterion] && r.pass;

  std::vector<CheckResult> cli_checks;
  bool cli_ok = true;
  if (argc > 1) {
    cli_ok = cli_determinism(argv[1], cli_checks);
    for (const auto& r : cli_checks)
      std::printf("%s c10  %s  %s\n", r.pass ? "[pass]" : "[FAIL]",
                  r.name.c_str(), r.got.c_str());
  } else {
    std::printf("note: no CLI path given; criterion 10 covers only the "
                "in-library determinism checks\n");
  }
  // the in-library determinism rows also belong to criterion 10
  for (const auto& r : results)
    if (r.criterion == 10 && !r.pass) cli_ok = false;
  criterion_pass[10] = cli_ok;

  std::printf("---- acceptance criteria ----\n");
  bool all_ok = true;
  for (int c = 1; c <= 10; ++c) {
    const bool ok = criterion_pass[c];
    all_ok = all_ok && ok;
    std::printf("criterion %2d: %-4s  %s\n", c, ok ? "PASS" : "FAIL",
                kCriterionLabels[c]);
  }
  std::printf("acceptance: %s\n", all_ok ? "ALL CRITERIA PASS" : "FAILURES");
  return all_ok ? 0 : 1;
}
