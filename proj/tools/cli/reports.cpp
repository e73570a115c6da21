#include <charconv>
#include <cmath>
#include <sstream>

#include "bundlelab_cli/cli.hpp"

namespace bundlelab::cli {

namespace {

// Shortest text that reads back to the same double.
std::string fmt(double x) {
  char buf[32];
  const auto r = std::to_chars(buf, buf + sizeof buf, clean(x));
  return std::string(buf, r.ptr);
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += (c == '"') ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

json entry_json(const OdEntry& e) {
  json j;
  j["form"] = e.monomial.text();
  j["degree"] = e.monomial.degree();
  if (e.ray.empty()) {
    j["max_ratio"] = clean(e.max_ratio);
  } else {
    json ray = json::array();
    for (const auto& [r, v] : e.ray) ray.push_back(json::array({clean(r), clean(v)}));
    j["ray"] = ray;
  }
  j["pass"] = e.pass;
  return j;
}

}  // namespace

json to_json(const BasisReport& r) {
  json arr = json::array();
  for (const Monomial& m : r.monomials) {
    json j;
    j["p"] = m.p;
    j["q"] = m.q;
    j["dim"] = m.section_dim;
    j["form"] = m.text();
    arr.push_back(j);
  }
  return arr;
}

std::string basis_csv(const BasisReport& r) {
  std::ostringstream os;
  os << "p,q,dim,form\n";
  for (const Monomial& m : r.monomials) os << m.p << ',' << m.q << ',' << m.section_dim << ',' << csv_field(m.text()) << '\n';
  return os.str();
}

json to_json(const CheckResult& c) {
  json j;
  j["check"] = c.check;
  j["points"] = c.points;
  j["max_defect"] = std::isfinite(c.max_defect) ? json(clean(c.max_defect)) : json(nullptr);
  j["tolerance"] = clean(c.tolerance);
  j["pass"] = c.pass;
  if (!c.note.empty()) j["note"] = c.note;
  return j;
}

std::string checks_csv(const std::vector<CheckResult>& cs) {
  std::ostringstream os;
  os << "check,points,max_defect,tolerance,pass\n";
  for (const auto& c : cs)
    os << csv_field(c.check) << ',' << c.points << ',' << fmt(c.max_defect) << ',' << fmt(c.tolerance) << ','
       << (c.pass ? "true" : "false") << '\n';
  return os.str();
}

std::string growth_csv(const GrowthReport& r) {
  std::ostringstream os;
  os << "t,d,ratio\n";
  std::size_t k = 0;
  for (const auto& [t, d] : r.grid) {
    os << fmt(t) << ',' << fmt(d) << ',';
    if (k < r.ratios.size() && r.ratios[k].first == t) os << fmt(r.ratios[k++].second);
    os << '\n';
  }
  return os.str();
}

std::string grid_csv(const std::vector<GridValue>& g) {
  std::ostringstream os;
  os << "re,im,value\n";
  for (const auto& v : g) os << fmt(v.re) << ',' << fmt(v.im) << ',' << fmt(v.value) << '\n';
  return os.str();
}

json to_json(const OdGrowthReport& r) {
  json j;
  j["degree"] = r.degree;
  json basis = json::array();
  for (const auto& e : r.basis) basis.push_back(entry_json(e));
  j["basis"] = basis;
  j["witness"] = r.witness ? entry_json(*r.witness) : json(nullptr);
  j["pass"] = r.pass;
  return j;
}

}  // namespace bundlelab::cli
