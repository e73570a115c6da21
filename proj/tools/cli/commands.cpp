#include <CLI11.hpp>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <random>
#include <sstream>

#include "bundlelab/hermitian_checks.hpp"
#include "bundlelab/isomorphism.hpp"
#include "bundlelab/metric.hpp"
#include "bundlelab_cli/cli.hpp"

namespace bundlelab::cli {

namespace {

constexpr std::uint64_t kDefaultSeed = 0xE11;

struct Job {
  std::string command;
  std::vector<std::string> specs;
  std::string tau;
  int degree = 3;
  std::string suite;
  std::optional<double> tol;
  std::string seed;
  std::optional<int> samples;
  std::string out;
  std::string format = "json";
  bool timing = false;
};

struct Outcome {
  std::string text;
  bool pass = true;
};

std::uint64_t parse_seed(const std::string& s, const std::string& what) {
  try {
    std::size_t pos = 0;
    if (s.empty() || s[0] == '-') throw std::invalid_argument("negative");
    const unsigned long long v = std::stoull(s, &pos, 0);
    if (pos != s.size()) throw std::invalid_argument("trailing");
    return v;
  } catch (const std::exception&) {
    throw ConfigError(what + ": invalid seed '" + s + "'");
  }
}

std::uint64_t resolve_seed(const Job& job) {
  if (!job.seed.empty()) return parse_seed(job.seed, "--seed");
  if (const char* env = std::getenv("BUNDLELAB_SEED"); env && *env) return parse_seed(env, "BUNDLELAB_SEED");
  return kDefaultSeed;
}

int samples_or(const Job& job, int fallback) {
  const int n = job.samples.value_or(fallback);
  if (n < 1 || n > 1000000) throw ConfigError("--samples must be in [1, 1000000]");
  return n;
}

Tau parse_tau_flag(const std::string& s) {
  const auto comma = s.find(',');
  if (comma == std::string::npos) throw ConfigError("--tau: expected RE,IM");
  try {
    std::size_t p1 = 0, p2 = 0;
    const std::string a = s.substr(0, comma), b = s.substr(comma + 1);
    const double re = std::stod(a, &p1), im = std::stod(b, &p2);
    if (p1 != a.size() || p2 != b.size()) throw std::invalid_argument("trailing");
    if (!std::isfinite(re) || !std::isfinite(im) || !(im > 0)) throw ConfigError("--tau: Im tau must be positive and finite");
    return Tau(re, im);
  } catch (const ConfigError&) {
    throw;
  } catch (const std::exception&) {
    throw ConfigError("--tau: expected RE,IM");
  }
}

const Rank2Bundle& need_rank2(const SpecObject& s, const std::string& what) {
  if (const auto* e = std::get_if<Rank2Bundle>(&s)) return *e;
  throw ConfigError(what + ": a rank 2 bundle spec (repr or sum) is required");
}

void require_specs(const Job& job, std::size_t n) {
  if (job.specs.size() != n)
    throw ConfigError(job.command + ": expected " + std::to_string(n) + " --spec argument" + (n == 1 ? "" : "s"));
}

void require_json(const Job& job) {
  if (job.format != "json") throw ConfigError(job.command + ": only json output is available");
}

json pair_json(cplx z) { return json::array({clean(z.real()), clean(z.imag())}); }

json matrix_json(const ModularMatrix& m) { return json::array({json::array({m.a, m.b}), json::array({m.c, m.d})}); }

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json header(const Job& job) {
  json j;
  j["command"] = job.command;
  return j;
}

Outcome finish(json j, bool pass) {
  j["pass"] = pass;
  return {dump(j), pass};
}

// ---------------------------------------------------------------------------

Outcome cmd_reduce_tau(const Job& job) {
  require_json(job);
  if (job.tau.empty()) throw ConfigError("reduce-tau: --tau is required");
  const Tau tau = parse_tau_flag(job.tau);
  const Reduction r = reduce_tau(tau);
  json j = header(job);
  j["tau"] = pair_json(tau.value());
  j["tau_reduced"] = pair_json(r.reduced.value());
  j["matrix"] = matrix_json(r.matrix);
  const bool ok = in_fundamental_domain(r.reduced) &&
                  std::abs(mobius_apply(r.matrix, tau).value() - r.reduced.value()) <= 1e-12 * (1 + std::abs(tau.value()));
  return finish(j, ok);
}

Outcome cmd_classify(const Job& job) {
  require_json(job);
  require_specs(job, 1);
  const SpecObject s = ingest_spec_argument(job.specs[0]);
  const Rank2Bundle& e = need_rank2(s, "classify");
  json j = header(job);
  j["bundle"] = serialize_spec(s);
  j["type"] = to_string(e.type());
  j["description"] = describe(e);
  j["has_nonconstant"] = has_nonconstant(e);
  j["admits_flat_kahler"] = admits_flat_kahler(e);
  return finish(j, true);
}

Outcome witness_report(const Job& job, bool biholo) {
  require_json(job);
  require_specs(job, 2);
  const SpecObject s1 = ingest_spec_argument(job.specs[0]), s2 = ingest_spec_argument(job.specs[1]);
  const Rank2Bundle& e = need_rank2(s1, job.command);
  const Rank2Bundle& f = need_rank2(s2, job.command);
  const double tol = job.tol.value_or(1e-10);
  const int n = samples_or(job, 100);
  const std::uint64_t seed = resolve_seed(job);
  std::optional<IsoWitness> w;
  try {
    w = biholo ? total_spaces_biholomorphic(e, f) : bundles_isomorphic(e, f);
  } catch (const std::invalid_argument& ex) {
    throw ConfigError(job.command + ": " + ex.what());
  }
  json j = header(job);
  j["bundles"] = json::array({serialize_spec(s1), serialize_spec(s2)});
  j[biholo ? "biholomorphic" : "isomorphic"] = w.has_value();
  bool pass = true;
  if (w) {
    const double defect = verify_intertwining(*w, e, f, n, seed);
    json wj;
    wj["description"] = w->description();
    wj["multiplier"] = pair_json(w->multiplier());
    wj["translation"] = pair_json(w->translation());
    wj["matrix"] = matrix_json(w->matrix());
    j["witness"] = wj;
    const CheckResult c{"intertwining", n, defect, tol, defect <= tol, {}};
    j["checks"] = json::array({to_json(c)});
    pass = c.pass;
  } else {
    j["witness"] = nullptr;
    j["checks"] = json::array();
  }
  return finish(j, pass);
}

CheckResult basis_invariance(const SpecObject& s, const BasisReport& b, int n, std::uint64_t seed, double tol) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0), im(0.2, 3.0);
  const auto* e = std::get_if<Rank2Bundle>(&s);
  const auto* f = std::get_if<FuchsianSpec>(&s);
  double worst = 0.0;
  for (int i = 0; i < n; ++i) {
    Point3 x;
    x << cplx(u(rng), f ? im(rng) : u(rng)), cplx(u(rng), u(rng)), cplx(u(rng), u(rng));
    Point3 g1, g2;
    if (f) {
      std::tie(g1, g2) = fuchsian_deck(f->theta[0], f->theta[1], x);
    } else {
      g1 = e->deck(1, 0, x);
      g2 = e->deck(0, 1, x);
    }
    for (const Monomial& m : b.monomials) {
      const cplx v = m.evaluate(x);
      const double scale = 1.0 + std::abs(v);
      worst = std::max({worst, std::abs(m.evaluate(g1) - v) / scale, std::abs(m.evaluate(g2) - v) / scale});
    }
  }
  return {"invariance", n, worst, tol, worst <= tol, {}};
}

Outcome cmd_holo_basis(const Job& job) {
  require_specs(job, 1);
  if (job.degree < 0 || job.degree > 200) throw ConfigError("--degree must be in [0, 200]");
  const SpecObject s = ingest_spec_argument(job.specs[0]);
  BasisReport b;
  bool checkable = false;
  if (const auto* f = std::get_if<FuchsianSpec>(&s)) {
    b = basis_fuchsian(f->theta[0], f->theta[1], job.degree);
    checkable = true;
  } else {
    const Rank2Bundle& e = need_rank2(s, "holo-basis");
    b = basis_for(e, job.degree);
    checkable = e.type() == BundleType::III;
  }
  std::vector<CheckResult> checks;
  if (checkable) checks.push_back(basis_invariance(s, b, samples_or(job, 100), resolve_seed(job), job.tol.value_or(1e-9)));
  const bool pass = all_pass(checks);
  if (job.format == "csv") return {basis_csv(b), pass};
  json j = header(job);
  j["bundle"] = serialize_spec(s);
  j["degree"] = job.degree;
  j["total_dim"] = b.total_dim;
  j["basis"] = to_json(b);
  json cj = json::array();
  for (const auto& c : checks) cj.push_back(to_json(c));
  j["checks"] = cj;
  return finish(j, pass);
}

std::vector<std::string> split_suite(const std::string& s, const std::string& fallback) {
  std::vector<std::string> out;
  std::stringstream ss(s.empty() ? fallback : s);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(item);
  if (out.empty()) throw ConfigError("--suite: empty check list");
  return out;
}

Outcome cmd_metric_check(const Job& job) {
  require_specs(job, 1);
  const SpecObject s = ingest_spec_argument(job.specs[0]);
  const Rank2Bundle& e = need_rank2(s, "metric-check");
  const MetricField g = build_metric_for(e);
  const auto names = split_suite(job.suite, "det,ricci,gauduchon,invariance,posdef");
  const int n = samples_or(job, 200);
  const auto pts = sample_points(3, e.tau(), n, resolve_seed(job));
  std::vector<CheckResult> checks;
  for (const std::string& name : names) {
    auto tol = [&](double fallback) { return job.tol.value_or(fallback); };
    if (name == "det") {
      checks.push_back(sweep(name, pts, [&](const Eigen::VectorXcd& p) { return det_defect(g, p); }, tol(1e-10)));
    } else if (name == "ricci") {
      checks.push_back(sweep(name, pts, [&](const Eigen::VectorXcd& p) { return chern_ricci_defect(g, p); }, tol(1e-6)));
    } else if (name == "gauduchon") {
      checks.push_back(sweep(name, pts, [&](const Eigen::VectorXcd& p) { return gauduchon_defect(g, p); }, tol(1e-6)));
    } else if (name == "invariance") {
      checks.push_back(
          sweep(name, pts, [&](const Eigen::VectorXcd& p) { return deck_invariance_defect(g, p); }, tol(1e-10)));
    } else if (name == "kahler") {
      checks.push_back(sweep(name, pts, [&](const Eigen::VectorXcd& p) { return kahler_defect(g, p); }, tol(1e-8)));
    } else if (name == "posdef") {
      double lo = std::numeric_limits<double>::infinity();
      for (const auto& p : pts) lo = std::min(lo, min_eigenvalue(g, p));
      checks.push_back({name, n, -lo, 0.0, lo > 0.0, "max_defect is minus the smallest eigenvalue"});
    } else {
      throw ConfigError("--suite: unknown check '" + name + "'");
    }
  }
  const bool pass = all_pass(checks);
  if (job.format == "csv") return {checks_csv(checks), pass};
  json j = header(job);
  j["bundle"] = serialize_spec(s);
  j["metric"] = g.label();
  j["seed"] = resolve_seed(job);
  json cj = json::array();
  for (const auto& c : checks) cj.push_back(to_json(c));
  j["checks"] = cj;
  return finish(j, pass);
}

Outcome cmd_bi_check(const Job& job) {
  require_specs(job, 1);
  const SpecObject s = ingest_spec_argument(job.specs[0]);
  const auto* l = std::get_if<LineBundleAH>(&s);
  if (!l) throw ConfigError("bi-check: a line spec is required");
  const SurfaceFunction u = SurfaceFunction::cigar();
  if (job.format == "csv") return {grid_csv(curvature_grid(u, 5.0, 21)), true};
  const BiNonnegResult r = admits_bi_nonneg(*l);
  json j = header(job);
  j["bundle"] = serialize_spec(s);
  j["admits"] = r.admits;
  j["family"] = r.family == BiFamily::ZkSymmetric ? "zk-symmetric" : r.family == BiFamily::Rotational ? "rotational" : "none";
  if (r.family == BiFamily::ZkSymmetric) j["k"] = r.k;
  bool pass = true;
  json cj = json::array();
  if (r.admits) {
    const long k = r.family == BiFamily::ZkSymmetric ? r.k : 1;
    std::function<cplx(cplx)> h = [](cplx) { return cplx(0.0); };
    if (r.family == BiFamily::ZkSymmetric) h = [k](cplx x) { return std::pow(x, static_cast<int>(k)); };
    const BiCandidateReport rep = validate_bi_candidate(l->theta(), k, u, h, samples_or(job, 200), resolve_seed(job));
    j["candidate"] = r.family == BiFamily::ZkSymmetric ? "u = 1/(1+|xi|^2), h = xi^" + std::to_string(k)
                                                       : std::string("u = 1/(1+|xi|^2), h = 0");
    for (const auto& c : rep.checks) cj.push_back(to_json(c));
    pass = rep.pass;
  }
  j["checks"] = cj;
  return finish(j, pass);
}

Outcome cmd_calabi(const Job& job) {
  require_specs(job, 1);
  const ProfileSpec ps = ingest_profile(load_json_argument(job.specs[0]));
  if (!(ps.t_max >= 10.0) || ps.t_max > 1e300) throw ConfigError("profile.t_max must be in [10, 1e300]");
  std::vector<CheckResult> checks;
  std::optional<GrowthReport> rep;
  try {
    rep = hadamard_order(ps.profile, decade_grid(1.0, ps.t_max));
    checks.push_back({"positivity", static_cast<int>(rep->grid.size()), 0.0, 0.0, true, {}});
  } catch (const ProfileError& e) {
    checks.push_back({"positivity", 0, 1.0, 0.0, false, std::string(e.what()) + " at t = " + std::to_string(e.t())});
  }
  const bool pass = all_pass(checks);
  if (job.format == "csv") return {rep ? growth_csv(*rep) : std::string("t,d,ratio\n"), pass};
  json j = header(job);
  j["profile"] = ps.profile.label();
  j["t_max"] = ps.t_max;
  if (rep) {
    j["diverges"] = rep->diverges;
    j["estimated_order"] = clean(rep->estimated_order);
    j["direction"] = rep->direction;
    json grid = json::array(), ratios = json::array();
    for (const auto& [t, d] : rep->grid) grid.push_back(json::array({clean(t), clean(d)}));
    for (const auto& [x, r] : rep->ratios) ratios.push_back(json::array({clean(x), clean(r)}));
    j["grid"] = grid;
    j["ratios"] = ratios;
    if (rep->certificate) {
      json c;
      c["fitted_c"] = clean(rep->certificate->fitted_c);
      c["verified"] = rep->certificate->verified;
      j["certificate"] = c;
    } else {
      j["certificate"] = nullptr;
    }
  }
  json cj = json::array();
  for (const auto& c : checks) cj.push_back(to_json(c));
  j["checks"] = cj;
  return finish(j, pass);
}

Outcome cmd_od_check(const Job& job) {
  require_json(job);
  require_specs(job, 1);
  if (job.degree < 0 || job.degree > 12) throw ConfigError("--degree must be in [0, 12]");
  const SpecObject s = ingest_spec_argument(job.specs[0]);
  const Rank2Bundle& e = need_rank2(s, "od-check");
  const OdGrowthReport r = verify_Od_growth(e, job.degree, samples_or(job, 200), resolve_seed(job));
  json j = header(job);
  j["bundle"] = serialize_spec(s);
  const json rj = to_json(r);
  for (const auto& [k, v] : rj.items()) j[k] = v;
  return finish(j, r.pass);
}

struct Command {
  const char* name;
  const char* help;
  Outcome (*run)(const Job&);
  std::vector<std::string> options;
};

const std::vector<Command>& commands() {
  static const std::vector<Command> list{
      {"reduce-tau", "reduce tau to the fundamental domain", cmd_reduce_tau, {"tau"}},
      {"classify", "classify a rank 2 bundle", cmd_classify, {"spec"}},
      {"iso", "decide bundle isomorphism", [](const Job& j) { return witness_report(j, false); },
       {"spec", "samples", "seed", "tol"}},
      {"biholo", "decide total-space biholomorphism", [](const Job& j) { return witness_report(j, true); },
       {"spec", "samples", "seed", "tol"}},
      {"holo-basis", "enumerate polynomial holomorphic functions", cmd_holo_basis,
       {"spec", "degree", "samples", "seed", "tol"}},
      {"metric-check", "verify the attached Hermitian metric", cmd_metric_check,
       {"spec", "suite", "samples", "seed", "tol"}},
      {"bi-check", "nonnegative bisectional curvature families", cmd_bi_check, {"spec", "samples", "seed"}},
      {"calabi", "fiber distance and growth of a radial profile", cmd_calabi, {"spec"}},
      {"od-check", "polynomial growth degree matching", cmd_od_check, {"spec", "degree", "samples", "seed"}},
  };
  return list;
}

void add_options(CLI::App* sub, Job& job, const std::vector<std::string>& opts) {
  for (const std::string& o : opts) {
    if (o == "spec") sub->add_option("--spec", job.specs, "bundle or profile spec: file path or inline JSON");
    if (o == "tau") sub->add_option("--tau", job.tau, "tau as RE,IM");
    if (o == "degree") sub->add_option("--degree", job.degree, "degree bound (default 3)");
    if (o == "suite") sub->add_option("--suite", job.suite, "comma separated checks");
    if (o == "tol") sub->add_option("--tol", job.tol, "tolerance override");
    if (o == "seed") sub->add_option("--seed", job.seed, "RNG seed (default BUNDLELAB_SEED or 0xE11)");
    if (o == "samples") sub->add_option("--samples", job.samples, "sample count");
  }
  sub->add_option("--out", job.out, "write the report to a file");
  sub->add_option("--format", job.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  sub->add_flag("--timing", job.timing, "report wall time");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Job job;
  CLI::App app{"bundlelab: rank 2 bundles over elliptic curves and their total spaces"};
  app.name("bundlelab");
  app.require_subcommand(1);
  std::map<CLI::App*, const Command*> by_app;
  for (const Command& c : commands()) {
    CLI::App* sub = app.add_subcommand(c.name, c.help);
    add_options(sub, job, c.options);
    by_app[sub] = &c;
  }
  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, err, err);
    return 2;
  }
  const Command* cmd = nullptr;
  for (const auto& [sub, c] : by_app)
    if (sub->parsed()) cmd = c;
  if (!cmd) return 2;
  job.command = cmd->name;

  const auto start = std::chrono::steady_clock::now();
  Outcome result;
  try {
    result = cmd->run(job);
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "failure: " << e.what() << "\n";
    return 1;
  }
  const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (job.timing) {
    err << "wall_time_s: " << wall << "\n";
    if (job.format == "json") {
      json j = json::parse(result.text);
      j["wall_time_s"] = wall;
      result.text = dump(j);
    }
  }
  if (job.out.empty()) {
    out << result.text;
  } else {
    std::ofstream f(job.out, std::ios::binary);
    if (!f) {
      err << "error: cannot write '" << job.out << "'\n";
      return 2;
    }
    f << result.text;
  }
  return result.pass ? 0 : 1;
}

}  // namespace bundlelab::cli
