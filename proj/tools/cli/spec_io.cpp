#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "bundlelab_cli/cli.hpp"

namespace bundlelab::cli {

namespace {

void reject_unknown(const json& j, const std::set<std::string>& allowed, const std::string& path) {
  if (!j.is_object()) throw ConfigError(path + ": expected an object");
  for (const auto& [key, value] : j.items())
    if (!allowed.count(key)) throw ConfigError(path + "." + key + ": unknown key");
}

const json& require(const json& j, const std::string& key, const std::string& path) {
  if (!j.contains(key)) throw ConfigError(path + "." + key + ": missing");
  return j.at(key);
}

double number(const json& j, const std::string& path) {
  if (!j.is_number()) throw ConfigError(path + ": expected a number");
  const double x = j.get<double>();
  if (!std::isfinite(x)) throw ConfigError(path + ": not finite");
  return x;
}

long integer(const json& j, const std::string& path) {
  if (!j.is_number_integer()) throw ConfigError(path + ": expected an integer");
  return j.get<long>();
}

cplx complex_pair(const json& j, const std::string& path) {
  if (!j.is_array() || j.size() != 2) throw ConfigError(path + ": expected [re, im]");
  return {number(j[0], path + "[0]"), number(j[1], path + "[1]")};
}

Tau ingest_tau(const json& j, const std::string& path) {
  const cplx t = complex_pair(j, path);
  if (!(t.imag() > 0.0)) throw ConfigError(path + ": Im tau must be positive");
  return Tau(t);
}

std::vector<AngleParam> angles(const json& j, std::size_t count, const std::string& path) {
  if (!j.is_array() || j.size() != count)
    throw ConfigError(path + ": expected " + std::to_string(count) + " angle entries");
  std::vector<AngleParam> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(ingest_angle(j[i], path + "[" + std::to_string(i) + "]"));
  return out;
}

std::vector<long> degrees(const json& j, std::size_t count, const std::string& path) {
  if (!j.is_array() || j.size() != count)
    throw ConfigError(path + ": expected " + std::to_string(count) + " integers");
  std::vector<long> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(integer(j[i], path + "[" + std::to_string(i) + "]"));
  return out;
}

json pair_json(cplx z) { return json::array({clean(z.real()), clean(z.imag())}); }

json tau_json(const Tau& t) { return pair_json(t.value()); }

}  // namespace

double clean(double x) { return x == 0.0 ? 0.0 : x; }

AngleParam ingest_angle(const json& j, const std::string& path) {
  if (!j.is_array() || j.empty() || !j[0].is_string()) throw ConfigError(path + ": expected [\"rat\", p, q] or [\"irr\", x]");
  const std::string tag = j[0].get<std::string>();
  if (tag == "rat") {
    if (j.size() != 3) throw ConfigError(path + ": expected [\"rat\", p, q]");
    const long q = integer(j[2], path + "[2]");
    if (q == 0) throw ConfigError(path + "[2]: zero denominator");
    return AngleParam::rational(integer(j[1], path + "[1]"), q);
  }
  if (tag == "irr") {
    if (j.size() != 2) throw ConfigError(path + ": expected [\"irr\", x]");
    return AngleParam::irrational(number(j[1], path + "[1]"));
  }
  throw ConfigError(path + "[0]: unknown angle tag '" + tag + "'");
}

json serialize_angle(const AngleParam& a) {
  if (a.is_rational()) return json::array({"rat", a.numerator(), a.denominator()});
  return json::array({"irr", clean(a.value())});
}

SpecObject ingest_spec(const json& j) {
  const std::string root = "spec";
  if (!j.is_object()) throw ConfigError(root + ": expected an object");
  const json& type_j = require(j, "type", root);
  if (!type_j.is_string()) throw ConfigError(root + ".type: expected a string");
  const std::string type = type_j.get<std::string>();
  try {
    if (type == "repr") {
      reject_unknown(j, {"type", "tau", "theta", "b"}, root);
      const Tau tau = ingest_tau(require(j, "tau", root), root + ".tau");
      const auto th = angles(require(j, "theta", root), 2, root + ".theta");
      const json& b = require(j, "b", root);
      if (!b.is_array() || b.size() != 2) throw ConfigError(root + ".b: expected [[re, im], [re, im]]");
      const cplx b1 = complex_pair(b[0], root + ".b[0]"), b2 = complex_pair(b[1], root + ".b[1]");
      if (std::abs(b2 - b1 * tau.value()) <= kBEps) return classify(th[0], th[1], b1, b2, tau);
      return Rank2Bundle::type_iii({th[0], th[1]}, b1, b2, tau);
    }
    if (type == "sum") {
      reject_unknown(j, {"type", "tau", "theta", "degrees"}, root);
      const Tau tau = ingest_tau(require(j, "tau", root), root + ".tau");
      const auto d = degrees(require(j, "degrees", root), 2, root + ".degrees");
      const auto th = angles(require(j, "theta", root), 4, root + ".theta");
      if (d[0] + d[1] != 0) throw ConfigError(root + ".degrees: total degree must be 0");
      const LineBundleAH l1(static_cast<int>(d[0]), tau, {th[0], th[1]});
      const LineBundleAH l2(static_cast<int>(d[1]), tau, {th[2], th[3]});
      if (d[0] == 0) return Rank2Bundle::type_i(l1, l2);
      return d[0] > 0 ? Rank2Bundle::type_ii(l1, l2) : Rank2Bundle::type_ii(l2, l1);
    }
    if (type == "line") {
      reject_unknown(j, {"type", "tau", "theta", "degrees"}, root);
      const Tau tau = ingest_tau(require(j, "tau", root), root + ".tau");
      const auto d = degrees(require(j, "degrees", root), 1, root + ".degrees");
      const auto th = angles(require(j, "theta", root), 2, root + ".theta");
      return LineBundleAH(static_cast<int>(d[0]), tau, {th[0], th[1]});
    }
    if (type == "fuchsian") {
      reject_unknown(j, {"type", "theta"}, root);
      const auto th = angles(require(j, "theta", root), 2, root + ".theta");
      return FuchsianSpec{{th[0], th[1]}};
    }
  } catch (const std::invalid_argument& e) {
    throw ConfigError(root + ": " + e.what());
  }
  throw ConfigError(root + ".type: unknown type '" + type + "'");
}

json load_json_argument(const std::string& arg) {
  const auto first = arg.find_first_not_of(" \t\r\n");
  std::string text;
  std::string source = "inline JSON";
  if (first != std::string::npos && arg[first] == '{') {
    text = arg;
  } else {
    std::ifstream in(arg);
    if (!in) throw ConfigError("cannot open '" + arg + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    text = ss.str();
    source = arg;
  }
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(source + ": malformed JSON at byte " + std::to_string(e.byte));
  }
}

SpecObject ingest_spec_argument(const std::string& arg) { return ingest_spec(load_json_argument(arg)); }

json serialize_spec(const SpecObject& s) {
  json j;
  if (const auto* f = std::get_if<FuchsianSpec>(&s)) {
    j["type"] = "fuchsian";
    j["theta"] = json::array({serialize_angle(f->theta[0]), serialize_angle(f->theta[1])});
    return j;
  }
  if (const auto* l = std::get_if<LineBundleAH>(&s)) {
    j["type"] = "line";
    j["tau"] = tau_json(l->tau());
    j["degrees"] = json::array({l->degree()});
    j["theta"] = json::array({serialize_angle(l->theta()[0]), serialize_angle(l->theta()[1])});
    return j;
  }
  const Rank2Bundle& e = std::get<Rank2Bundle>(s);
  auto sum = [&](const LineBundleAH& a, const LineBundleAH& b) {
    j["type"] = "sum";
    j["tau"] = tau_json(e.tau());
    j["degrees"] = json::array({a.degree(), b.degree()});
    j["theta"] = json::array({serialize_angle(a.theta()[0]), serialize_angle(a.theta()[1]),
                              serialize_angle(b.theta()[0]), serialize_angle(b.theta()[1])});
  };
  switch (e.type()) {
    case BundleType::I: sum(e.as_i().first, e.as_i().second); break;
    case BundleType::II: sum(e.as_ii().positive, e.as_ii().negative); break;
    case BundleType::III: {
      const auto& r = e.as_iii();
      j["type"] = "repr";
      j["tau"] = tau_json(e.tau());
      j["theta"] = json::array({serialize_angle(r.theta[0]), serialize_angle(r.theta[1])});
      j["b"] = json::array({pair_json(r.b1), pair_json(r.b2)});
      break;
    }
  }
  return j;
}

ProfileSpec ingest_profile(const json& j) {
  const std::string root = "profile";
  if (!j.is_object()) throw ConfigError(root + ": expected an object");
  const json& kind_j = require(j, "profile", root);
  if (!kind_j.is_string()) throw ConfigError(root + ".profile: expected a string");
  const std::string kind = kind_j.get<std::string>();
  auto opt = [&](const char* key, double fallback) {
    return j.contains(key) ? number(j.at(key), root + "." + key) : fallback;
  };
  try {
    if (kind == "euclidean") {
      reject_unknown(j, {"profile", "t_max"}, root);
      return {RadialProfile::euclidean(), opt("t_max", 1e12)};
    }
    if (kind == "calabi_log") {
      reject_unknown(j, {"profile", "A", "B", "C", "t_max"}, root);
      return {RadialProfile::calabi_log(number(require(j, "A", root), root + ".A"),
                                        number(require(j, "B", root), root + ".B"),
                                        number(require(j, "C", root), root + ".C")),
              opt("t_max", 1e12)};
    }
    if (kind == "slow_growth") {
      reject_unknown(j, {"profile", "k", "alpha", "t_max"}, root);
      return {RadialProfile::slow_growth(opt("k", 1.0), opt("alpha", 1620.0)), opt("t_max", 1e12)};
    }
  } catch (const std::invalid_argument& e) {
    throw ConfigError(root + ": " + e.what());
  }
  throw ConfigError(root + ".profile: unknown profile '" + kind + "'");
}

}  // namespace bundlelab::cli
