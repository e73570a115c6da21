#pragma once

#include <json.hpp>
#include <ostream>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "bundlelab/calabi.hpp"
#include "bundlelab/growth.hpp"
#include "bundlelab/holo.hpp"
#include "bundlelab/report.hpp"
#include "bundlelab/surface.hpp"

namespace bundlelab::cli {

using json = nlohmann::ordered_json;

// Invalid configuration or input; maps to exit code 2.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct FuchsianSpec {
  AnglePair theta;
  friend bool operator==(const FuchsianSpec&, const FuchsianSpec&) = default;
};

using SpecObject = std::variant<Rank2Bundle, LineBundleAH, FuchsianSpec>;

// Bundle spec JSON:
//   {"tau": [re, im], "type": "repr", "theta": [a1, a2], "b": [[re, im], [re, im]]}
//   {"tau": [re, im], "type": "sum", "degrees": [d1, d2], "theta": [a1, a2, a3, a4]}
//   {"tau": [re, im], "type": "line", "degrees": [d], "theta": [a1, a2]}
//   {"type": "fuchsian", "theta": [a1, a2]}
// with angles ["rat", p, q] or ["irr", x]. Unknown keys are rejected.
SpecObject ingest_spec(const json& j);
// Inline JSON (first non-blank character '{') or a file path.
json load_json_argument(const std::string& arg);
SpecObject ingest_spec_argument(const std::string& arg);

json serialize_spec(const SpecObject& s);
json serialize_angle(const AngleParam& a);
AngleParam ingest_angle(const json& j, const std::string& path);

// Profile JSON: {"profile": "euclidean" | "calabi_log" | "slow_growth", "A", "B", "C", "k", "alpha", "t_max"}
struct ProfileSpec {
  RadialProfile profile;
  double t_max = 1e12;
};
ProfileSpec ingest_profile(const json& j);

// -0.0 printed as 0
double clean(double x);

json to_json(const BasisReport& r);
std::string basis_csv(const BasisReport& r);
json to_json(const CheckResult& c);
std::string checks_csv(const std::vector<CheckResult>& cs);
std::string growth_csv(const GrowthReport& r);
std::string grid_csv(const std::vector<GridValue>& g);
json to_json(const OdGrowthReport& r);

// args exclude the program name; returns the process exit code (0 pass, 1 check failure, 2 config error)
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bundlelab::cli
