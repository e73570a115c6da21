#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "bundlelab_cli/cli.hpp"

using namespace bundlelab;
using namespace bundlelab::cli;

namespace {

const char* kDps = R"({"tau":[0,1],"type":"repr","theta":[["rat",0,1],["rat",0,1]],"b":[[0,0],[1,0]]})";
const char* kTypeII =
    R"({"tau":[0,1],"type":"sum","degrees":[1,-1],"theta":[["rat",0,1],["rat",0,1],["rat",0,1],["rat",0,1]]})";

struct CliResult {
  int code;
  std::string out, err;
};

CliResult run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

json parse(const CliResult& r) { return json::parse(r.out); }

}  // namespace

TEST(CliSpec, DpsSpecIngestsToRepresentationBundle) {
  const SpecObject s = ingest_spec(json::parse(kDps));
  const auto& e = std::get<Rank2Bundle>(s);
  ASSERT_EQ(e.type(), BundleType::III);
  EXPECT_TRUE(e.as_iii().theta[0].is_zero());
  EXPECT_TRUE(e.as_iii().theta[1].is_zero());
  EXPECT_EQ(e.as_iii().b1, cplx(0.0));
  EXPECT_EQ(e.as_iii().b2, cplx(1.0));
  EXPECT_EQ(e.tau().value(), cplx(0.0, 1.0));
}

TEST(CliSpec, DegreeZeroPairIsTypeI) {
  const auto j = json::parse(
      R"({"tau":[0.2,1.3],"type":"sum","degrees":[0,0],"theta":[["rat",1,2],["rat",0,1],["irr",0.25],["rat",1,3]]})");
  EXPECT_EQ(std::get<Rank2Bundle>(ingest_spec(j)).type(), BundleType::I);
}

TEST(CliSpec, RoundTripPreservesRationalityTags) {
  const std::vector<std::string> specs{
      kDps,
      kTypeII,
      R"({"tau":[0.2,1.3],"type":"sum","degrees":[0,0],"theta":[["rat",1,2],["rat",0,1],["irr",0.4142135623730951],["rat",1,3]]})",
      R"({"tau":[-0.5,0.9],"type":"repr","theta":[["rat",1,4],["irr",0.7320508075688772]],"b":[[0,0],[0.5,-2]]})",
      R"({"tau":[0,2],"type":"line","degrees":[0],"theta":[["rat",2,3],["rat",0,1]]})",
      R"({"type":"fuchsian","theta":[["rat",1,2],["rat",0,1]]})",
  };
  for (const auto& text : specs) {
    const SpecObject s = ingest_spec(json::parse(text));
    const SpecObject back = ingest_spec(serialize_spec(s));
    EXPECT_TRUE(s == back) << text;
    EXPECT_EQ(serialize_spec(back).dump(), serialize_spec(s).dump()) << text;
  }
  const AngleParam r = ingest_angle(json::parse(R"(["rat",2,6])"), "x");
  EXPECT_TRUE(r.is_rational());
  EXPECT_EQ(r.numerator(), 1);
  EXPECT_EQ(r.denominator(), 3);
  EXPECT_FALSE(ingest_angle(json::parse(R"(["irr",0.5])"), "x").is_rational());
}

TEST(CliSpec, RejectsNonPositiveImaginaryTau) {
  EXPECT_THROW(ingest_spec(json::parse(R"({"tau":[0,0],"type":"line","degrees":[0],"theta":[["rat",0,1],["rat",0,1]]})")),
               ConfigError);
  EXPECT_THROW(ingest_spec(json::parse(R"({"tau":[1,-2],"type":"line","degrees":[0],"theta":[["rat",0,1],["rat",0,1]]})")),
               ConfigError);
}

TEST(CliSpec, SchemaViolationsNameTheField) {
  auto message = [](const char* text) {
    try {
      ingest_spec(json::parse(text));
    } catch (const ConfigError& e) {
      return std::string(e.what());
    }
    return std::string("no error");
  };
  EXPECT_NE(message(R"({"tau":[0,1],"type":"repr","theta":[["rat",0,1],["rat",0,1]],"b":[[0,0],[1,0]],"extra":1})")
                .find("extra"),
            std::string::npos);
  EXPECT_NE(message(R"({"tau":[0,1],"type":"repr","theta":[["rat",0,1],["rat",0,0]],"b":[[0,0],[1,0]]})").find("theta"),
            std::string::npos);
  EXPECT_NE(message(R"({"tau":[0,1],"type":"wedge"})").find("type"), std::string::npos);
  EXPECT_NE(message(R"({"tau":[0,1],"type":"sum","degrees":[1,1],"theta":[["rat",0,1],["rat",0,1],["rat",0,1],["rat",0,1]]})")
                .find("degrees"),
            std::string::npos);
}

TEST(CliRun, ReduceTauExample) {
  const CliResult r = run({"reduce-tau", "--tau", "1,1"});
  ASSERT_EQ(r.code, 0) << r.err;
  const json j = parse(r);
  EXPECT_EQ(j["command"], "reduce-tau");
  EXPECT_NEAR(j["tau_reduced"][0].get<double>(), 0.0, 1e-15);
  EXPECT_NEAR(j["tau_reduced"][1].get<double>(), 1.0, 1e-15);
  EXPECT_EQ(j["matrix"], json::parse("[[1,-1],[0,1]]"));
}

TEST(CliRun, HoloBasisOfDpsBundle) {
  const CliResult r = run({"holo-basis", "--spec", kDps, "--degree", "3"});
  ASSERT_EQ(r.code, 0) << r.err;
  const json j = parse(r);
  std::vector<std::string> forms;
  for (const auto& m : j["basis"]) forms.push_back(m["form"]);
  EXPECT_EQ(forms, (std::vector<std::string>{"1", "z2", "z2^2", "z2^3"}));
  EXPECT_EQ(j["total_dim"], 4);
}

TEST(CliRun, MetricCheckOnTypeIIPasses) {
  const CliResult r = run({"metric-check", "--spec", kTypeII, "--suite", "gauduchon,ricci,invariance"});
  ASSERT_EQ(r.code, 0) << r.err;
  const json j = parse(r);
  ASSERT_EQ(j["checks"].size(), 3u);
  for (const auto& c : j["checks"]) {
    EXPECT_TRUE(c["pass"].get<bool>());
    EXPECT_LT(c["max_defect"].get<double>(), 1e-6);
  }
}

TEST(CliRun, ToleranceViolationGivesExitOne) {
  const CliResult r = run({"metric-check", "--spec", kTypeII, "--suite", "gauduchon", "--tol", "0"});
  EXPECT_EQ(r.code, 1);
  EXPECT_FALSE(parse(r)["pass"].get<bool>());
}

TEST(CliRun, KahlerCheckFailsForNonKahlerMetric) {
  const char* spec = R"({"tau":[0,1],"type":"repr","theta":[["rat",0,1],["rat",0,1]],"b":[[1,0],[0,-1]]})";
  EXPECT_EQ(run({"metric-check", "--spec", spec, "--suite", "kahler"}).code, 1);
}

TEST(CliRun, SameSeedGivesIdenticalBytes) {
  const std::vector<std::string> a{"metric-check", "--spec", kTypeII, "--seed", "42", "--samples", "50"};
  EXPECT_EQ(run(a).out, run(a).out);
  const std::vector<std::string> b{"metric-check", "--spec", kTypeII, "--seed", "43", "--samples", "50"};
  EXPECT_NE(run(a).out, run(b).out);
}

TEST(CliRun, EnvironmentSeedIsTheFallback) {
  const std::vector<std::string> args{"metric-check", "--spec", kTypeII, "--samples", "20"};
  const std::vector<std::string> explicit_seed{"metric-check", "--spec", kTypeII, "--samples", "20", "--seed", "77"};
  setenv("BUNDLELAB_SEED", "77", 1);
  const std::string from_env = run(args).out;
  unsetenv("BUNDLELAB_SEED");
  EXPECT_EQ(from_env, run(explicit_seed).out);
  EXPECT_NE(from_env, run(args).out);
}

TEST(CliRun, ConfigErrorsGiveExitTwo) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"no-such-command"}).code, 2);
  EXPECT_EQ(run({"reduce-tau"}).code, 2);
  EXPECT_EQ(run({"reduce-tau", "--tau", "1,-1"}).code, 2);
  EXPECT_EQ(run({"reduce-tau", "--tau", "one"}).code, 2);
  EXPECT_EQ(run({"reduce-tau", "--tau", "0,1", "--format", "csv"}).code, 2);
  EXPECT_EQ(run({"holo-basis", "--spec", kDps, "--degree", "x"}).code, 2);
  EXPECT_EQ(run({"metric-check", "--spec", kTypeII, "--suite", "bogus"}).code, 2);
  EXPECT_EQ(run({"metric-check", "--spec", kTypeII, "--seed", "-3"}).code, 2);
  EXPECT_EQ(run({"iso", "--spec", kDps}).code, 2);
  EXPECT_EQ(run({"classify", "--spec", "/nonexistent/spec.json"}).code, 2);
}

TEST(CliRun, MalformedJsonReportsLocation) {
  const CliResult r = run({"classify", "--spec", R"({"tau":[0,1)"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("byte"), std::string::npos) << r.err;
}

TEST(CliRun, OutPathAndSpecFile) {
  const std::string spec_path = ::testing::TempDir() + "bundlelab_dps.json";
  const std::string out_path = ::testing::TempDir() + "bundlelab_out.json";
  std::ofstream(spec_path) << kDps;
  const CliResult r = run({"holo-basis", "--spec", spec_path, "--out", out_path});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(out_path);
  const std::string written((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  EXPECT_EQ(written, run({"holo-basis", "--spec", kDps}).out);
  std::remove(spec_path.c_str());
  std::remove(out_path.c_str());
}

TEST(CliRun, TimingOnlyWhenRequested) {
  const CliResult plain = run({"reduce-tau", "--tau", "0.3,0.2"});
  EXPECT_FALSE(parse(plain).contains("wall_time_s"));
  const CliResult timed = run({"reduce-tau", "--tau", "0.3,0.2", "--timing"});
  EXPECT_TRUE(parse(timed).contains("wall_time_s"));
  EXPECT_NE(timed.err.find("wall_time_s"), std::string::npos);
}

TEST(CliRun, IsoAndBiholoWitnesses) {
  const char* a = R"({"tau":[0,2],"type":"repr","theta":[["rat",0,1],["rat",0,1]],"b":[[0,0],[1,0]]})";
  const char* b = R"({"tau":[0,2],"type":"repr","theta":[["rat",0,1],["rat",0,1]],"b":[[0,0],[3,0]]})";
  const CliResult iso = run({"biholo", "--spec", a, "--spec", b});
  ASSERT_EQ(iso.code, 0) << iso.err;
  const json j = parse(iso);
  EXPECT_TRUE(j["biholomorphic"].get<bool>());
  EXPECT_LT(j["checks"][0]["max_defect"].get<double>(), 1e-10);
  const CliResult none = run({"biholo", "--spec", kDps, "--spec", kTypeII});
  EXPECT_EQ(none.code, 0);
  EXPECT_FALSE(parse(none)["biholomorphic"].get<bool>());
}

TEST(CliRun, CsvOutputs) {
  const CliResult basis = run({"holo-basis", "--spec", kDps, "--format", "csv"});
  EXPECT_EQ(basis.out, "p,q,dim,form\n0,0,1,1\n0,1,1,z2\n0,2,1,z2^2\n0,3,1,z2^3\n");
  const CliResult growth = run({"calabi", "--spec", R"({"profile":"euclidean","t_max":100})", "--format", "csv"});
  ASSERT_EQ(growth.code, 0) << growth.err;
  EXPECT_EQ(growth.out.rfind("t,d,ratio\n", 0), 0u);
}

TEST(CliRun, CalabiRejectsBadProfiles) {
  EXPECT_EQ(run({"calabi", "--spec", R"({"profile":"calabi_log","A":1,"B":0,"C":1})"}).code, 2);
  EXPECT_EQ(run({"calabi", "--spec", R"({"profile":"euclidean","t_max":5})"}).code, 2);
  EXPECT_EQ(run({"calabi", "--spec", R"({"profile":"euclidean","gamma":1})"}).code, 2);
}
