#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "ssc/cli.hpp"
#include "ssc/errors.hpp"

namespace ssc::cli {

namespace {

const char* kColumns[] = {"check", "params", "expected", "computed", "pass", "seconds", "terms"};

std::string params_string(const CheckReport& r) {
  std::string s;
  for (const auto& [k, v] : r.params) {
    if (!s.empty()) s += ";";
    s += k + "=" + v;
  }
  return s;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

std::string seconds_string(double s) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(3) << s;
  return os.str();
}

}  // namespace

Format parse_format(const std::string& s) {
  if (s == "json") return Format::Json;
  if (s == "csv") return Format::Csv;
  if (s == "text") return Format::Text;
  throw BadConfig("unknown format '" + s + "'");
}

std::string emit(const std::vector<CheckReport>& reports, Format format) {
  std::ostringstream os;
  switch (format) {
    case Format::Json: {
      auto arr = nlohmann::ordered_json::array();
      for (const auto& r : reports) {
        nlohmann::ordered_json params = nlohmann::ordered_json::object();
        for (const auto& [k, v] : r.params) params[k] = v;
        arr.push_back(nlohmann::ordered_json{{"check", r.check},
                                             {"params", params},
                                             {"expected", r.expected},
                                             {"computed", r.computed},
                                             {"pass", r.pass},
                                             {"seconds", std::stod(seconds_string(r.seconds))},
                                             {"terms", r.terms}});
      }
      os << arr.dump(2) << "\n";
      break;
    }
    case Format::Csv: {
      for (std::size_t i = 0; i < std::size(kColumns); ++i) os << (i ? "," : "") << kColumns[i];
      os << "\n";
      for (const auto& r : reports)
        os << csv_field(r.check) << "," << csv_field(params_string(r)) << "," << csv_field(r.expected) << ","
           << csv_field(r.computed) << "," << (r.pass ? "true" : "false") << "," << seconds_string(r.seconds) << ","
           << r.terms << "\n";
      break;
    }
    case Format::Text:
      for (const auto& r : reports) {
        os << (r.pass ? "PASS " : "FAIL ") << std::left << std::setw(20) << r.check << " expected " << r.expected
           << "  computed " << r.computed << "  (" << seconds_string(r.seconds) << " s, " << r.terms << " terms)\n";
      }
      break;
  }
  return os.str();
}

int exit_code(const std::vector<CheckReport>& reports) {
  for (const auto& r : reports)
    if (!r.pass) return 1;
  return 0;
}

RunConfig config_from_json(const std::string& text, RunConfig c) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw BadConfig(std::string("config is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw BadConfig("config must be a JSON object");
  try {
    for (auto it = j.begin(); it != j.end(); ++it) {
      const auto& k = it.key();
      const auto& v = it.value();
      if (k == "p") c.p = v.get<int>();
      else if (k == "t") c.t = v.get<std::int64_t>();
      else if (k == "sign") c.sign = v.get<int>();
      else if (k == "precision") c.precision = v.get<int>();
      else if (k == "c1") c.c1 = v.get<std::int64_t>();
      else if (k == "c2") c.c2 = v.get<std::int64_t>();
      else if (k == "seed") c.seed = v.get<std::uint64_t>();
      else if (k == "trials") c.trials = v.get<int>();
      else if (k == "expansion_points") c.expansion_points = v.get<int>();
      else if (k == "matcoeff_points") c.matcoeff_points = v.get<int>();
      else if (k == "atkin_lehner_points") c.atkin_lehner_points = v.get<int>();
      else if (k == "bessel_a") c.bessel_a = v.get<std::int64_t>();
      else if (k == "bessel_m0") c.bessel_m0 = v.get<std::vector<int>>();
      else if (k == "bessel_u0") c.bessel_u0 = v.get<std::int64_t>();
      else if (k == "timing") c.timing = v.get<bool>();
      else throw BadConfig("unknown config key '" + k + "'");
    }
  } catch (const nlohmann::json::exception& e) {
    throw BadConfig(std::string("bad config value: ") + e.what());
  }
  return c;
}

}  // namespace ssc::cli
