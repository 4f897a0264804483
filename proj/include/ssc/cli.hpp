#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace ssc::cli {

struct RunConfig {
  int p = 3;
  std::int64_t t = 1;
  int sign = 1;
  int precision = 12;
  std::int64_t c1 = -1;
  std::int64_t c2 = -1;
  std::uint64_t seed = 1;

  // per-check options
  int trials = 200;            // character pairs, coset samples
  int expansion_points = 20;   // per side of the support
  int matcoeff_points = 30;    // per family
  int atkin_lehner_points = 20;
  std::int64_t bessel_a = 1;
  std::vector<int> bessel_m0{2, 3};
  std::int64_t bessel_u0 = 1;
  bool timing = true;  // false writes 0 seconds, for byte-identical reports

  /// Throws BadConfig.
  void validate() const;
};

struct CheckReport {
  std::string check;
  std::vector<std::pair<std::string, std::string>> params;
  std::string expected;
  std::string computed;
  bool pass = false;
  double seconds = 0;
  std::uint64_t terms = 0;
};

const std::vector<std::string>& check_names();

/**
 * Runs one named check ("all" is expanded by run_checks). Throws UnknownCheck
 * and BadConfig; errors from the checks themselves become failed reports.
 */
CheckReport run(const std::string& check, const RunConfig& config);
/// Expands "all"; `jobs` > 1 runs independent checks concurrently, reports stay in order.
std::vector<CheckReport> run_checks(const std::vector<std::string>& checks, const RunConfig& config, int jobs = 1);

enum class Format { Json, Csv, Text };
Format parse_format(const std::string& s);
std::string emit(const std::vector<CheckReport>& reports, Format format);
/// 0 iff every report passed.
int exit_code(const std::vector<CheckReport>& reports);

/// Reads a JSON object of RunConfig fields over `base`; unknown keys are BadConfig.
RunConfig config_from_json(const std::string& text, RunConfig base = {});

}  // namespace ssc::cli
