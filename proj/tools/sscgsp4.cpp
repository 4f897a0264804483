// Batch verification of the simple supercuspidal local theory.
//
//   sscgsp4 --check all --format text
//   sscgsp4 --check j0-new --p 5 --format json --out j0.json
//
// Every flag can also be set through SSC_<FLAG> (e.g. SSC_P=5, SSC_CHECK=zeta).
// Precedence: flags, then environment, then --config file, then defaults.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "ssc/cli.hpp"
#include "ssc/errors.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ssc::BadConfig("cannot read config file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
  using namespace ssc::cli;

  CLI::App app{"Exact checks for simple supercuspidal representations of GSp(4)"};
  RunConfig cfg;
  std::string config_path, format = "text", out_path;
  std::vector<std::string> checks;
  int jobs = 1;
  bool no_timing = false, list = false;

  // Raw flag values; applied over the config file only when given.
  int p = 0, sign = 0, precision = 0, trials = 0;
  std::int64_t t = 0, c1 = 0, c2 = 0;
  std::uint64_t seed = 0;

  app.add_option("--config", config_path, "JSON file of run settings")->envname("SSC_CONFIG");
  auto* op = app.add_option("--p", p, "odd prime")->envname("SSC_P");
  auto* ot = app.add_option("--t", t, "character parameter, a unit")->envname("SSC_T");
  auto* os = app.add_option("--sign", sign, "sign of the extension to H', +1 or -1")->envname("SSC_SIGN");
  auto* oprec = app.add_option("--precision", precision, "p-adic working precision")->envname("SSC_PRECISION");
  auto* oc1 = app.add_option("--c1", c1, "first unit of the Whittaker character")->envname("SSC_C1");
  auto* oc2 = app.add_option("--c2", c2, "second unit of the Whittaker character")->envname("SSC_C2");
  auto* oseed = app.add_option("--seed", seed, "seed of the sampled checks")->envname("SSC_SEED");
  auto* otr = app.add_option("--trials", trials, "samples for cosets, characters, support criterion")
                  ->envname("SSC_TRIALS");
  app.add_option("--check", checks, "check names, or 'all'")->envname("SSC_CHECK")->delimiter(',');
  app.add_option("--format", format, "json, csv or text")->envname("SSC_FORMAT");
  app.add_option("--out", out_path, "report file (default stdout)")->envname("SSC_OUT");
  app.add_option("--jobs", jobs, "independent checks run concurrently")->envname("SSC_JOBS");
  app.add_flag("--no-timing", no_timing, "report 0 seconds, for byte-identical output")->envname("SSC_NO_TIMING");
  app.add_flag("--list", list, "print the check names and exit");

  CLI11_PARSE(app, argc, argv);

  if (list) {
    for (const auto& n : check_names()) std::cout << n << "\n";
    return 0;
  }
  try {
    if (!config_path.empty()) cfg = config_from_json(read_file(config_path), cfg);
    if (*op) cfg.p = p;
    if (*ot) cfg.t = t;
    if (*os) cfg.sign = sign;
    if (*oprec) cfg.precision = precision;
    if (*oc1) cfg.c1 = c1;
    if (*oc2) cfg.c2 = c2;
    if (*oseed) cfg.seed = seed;
    if (*otr) cfg.trials = trials;
    if (no_timing) cfg.timing = false;
    if (checks.empty()) checks = {"all"};

    const auto fmt = parse_format(format);
    auto reports = run_checks(checks, cfg, jobs);
    const auto text = emit(reports, fmt);
    if (out_path.empty()) {
      std::cout << text;
    } else {
      std::ofstream out(out_path);
      if (!out) throw ssc::BadConfig("cannot write " + out_path);
      out << text;
    }
    return exit_code(reports);
  } catch (const ssc::Error& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
}
