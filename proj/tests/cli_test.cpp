#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "ncc/cli.hpp"

using namespace ncc;
using namespace ncc::cli;

namespace {

std::string problem_path(const std::string& name) { return std::string(NCC_PROBLEMS_DIR) + "/" + name + ".json"; }

ProblemFile load(const std::string& name) {
  std::ifstream in(problem_path(name));
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_problem_text(buf.str());
}

json without_timing(json report) {
  report.erase("timing");
  return report;
}

struct Run {
  int code;
  std::string out, err;
};

Run run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "ncc");
  std::ostringstream out, err;
  int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

const std::vector<std::string> all_problems = {
    "e1", "e4", "constant3", "constant3_m2", "circle", "disjoint_pair", "duplicate_ideal", "three_lines",
    "explicit_interval", "explicit_not_functor"};

}  // namespace

TEST(Problem, EchoRoundTrips) {
  for (const auto& name : all_problems) {
    auto p = load(name);
    EXPECT_EQ(parse_problem(to_json(p)), p) << name;
    EXPECT_EQ(to_json(parse_problem(to_json(p))), to_json(p)) << name;
  }
}

TEST(Problem, RationalCoefficientsAreCanonical) {
  auto p = parse_problem(json::parse(R"({"algebra": {"dim": 1, "structure_constants": [[0, 0, 0, "2/2"]],
                                          "unit": ["4/4"]}})"));
  EXPECT_EQ(p.algebra->structure_constants[0].coeff, "1");
  EXPECT_EQ(to_json(p)["algebra"]["unit"][0], 1);
}

TEST(Problem, InputErrorsCarryLocations) {
  auto where = [](const std::string& text) {
    try {
      parse_problem_text(text);
    } catch (const InputError& e) {
      return e.where();
    }
    return std::string("no error");
  };
  EXPECT_EQ(where("{"), "json");
  EXPECT_EQ(where(R"({"bogus": 1})"), "problem");
  EXPECT_EQ(where(R"({"field": "R"})"), "field");
  EXPECT_EQ(where(R"({"field": {"Fp": 4}})"), "field");
  EXPECT_EQ(where(R"({"algebra": {"dim": 1, "structure_constants": [[0, 0, 1, 1]], "unit": [1]}})"),
            "algebra.structure_constants[0]");
  EXPECT_EQ(where(R"({"algebra": {"dim": 1, "structure_constants": [[0, 0, 0, "1/0"]], "unit": [1]}})"),
            "algebra.structure_constants[0]");
  EXPECT_EQ(where(R"({"algebra": {"dim": 1, "structure_constants": [], "unit": [1]}, "ideals": {"I": [[1]]},
                     "covering": ["J"]})"),
            "covering[0]");
  EXPECT_EQ(where(R"({"functor": {"kind": "cover", "N": 2, "overlaps": [[2, 1]]}})"), "functor.overlaps[0]");
  EXPECT_EQ(where(R"({"functor": {"kind": "ringed_default"}})"), "functor");
  EXPECT_EQ(where(R"({"options": {"n_max": 0}})"), "options.n_max");
}

TEST(Problem, FieldOverride) {
  EXPECT_EQ(parse_field_override("Q").p, 0u);
  EXPECT_EQ(parse_field_override("F5").p, 5u);
  EXPECT_EQ(parse_field_override("Fp:7").p, 7u);
  EXPECT_EQ(parse_field_override("11").p, 11u);
  EXPECT_THROW(parse_field_override("F9"), InputError);
  EXPECT_THROW(parse_field_override("R"), InputError);
}

TEST(Commands, CheckE1) {
  auto o = execute(Command::check, load("e1"));
  EXPECT_EQ(o.exit_code, 0);
  const auto& cov = o.report["results"]["covering"];
  EXPECT_EQ(cov["complete"], true);
  EXPECT_EQ(cov["dim_B"], 4);
  EXPECT_EQ(cov["tau_rank"], 1);
}

TEST(Commands, CheckDuplicateIdeal) {
  auto o = execute(Command::check, load("duplicate_ideal"));
  EXPECT_EQ(o.exit_code, 0);
  EXPECT_EQ(o.report["results"]["covering"]["is_covering"], false);
}

TEST(Commands, CechAndAmitsurOnE1) {
  auto p = load("e1");
  EXPECT_EQ(execute(Command::cech, p).report["results"]["cech"]["cohomology"], json({3, 0}));
  auto a = execute(Command::amitsur, p);
  EXPECT_EQ(a.exit_code, 0);
  EXPECT_EQ(a.report["results"]["amitsur"]["augmented"], json({0, 0, 0}));
  EXPECT_EQ(a.report["results"]["coring"]["coassociative"], true);
}

TEST(Commands, ConstantAndCover) {
  EXPECT_EQ(execute(Command::cech, load("constant3")).report["results"]["cech"]["cohomology"], json({1, 0, 0}));
  EXPECT_EQ(execute(Command::cech, load("constant3_m2")).report["results"]["cech"]["cohomology"], json({4, 0, 0}));
  auto o = execute(Command::oracle, load("circle"));
  EXPECT_EQ(o.exit_code, 0);
  EXPECT_EQ(o.report["results"]["nerve"], json({1, 1}));
  EXPECT_EQ(o.report["verification"]["oracle_match"]["status"], "pass");
}

TEST(Commands, VerifyPassesOnExamples) {
  for (const auto& name : {"e1", "e4", "three_lines"}) {
    auto o = execute(Command::verify, load(name));
    EXPECT_EQ(o.exit_code, 0) << name << "\n" << o.report.dump(2);
    EXPECT_EQ(o.report["verification"]["chain_map"]["status"], "pass") << name;
  }
}

TEST(Commands, VerifyReportsBrokenFunctor) {
  auto o = execute(Command::verify, load("explicit_not_functor"));
  EXPECT_EQ(o.exit_code, ExitCode::violation);
  EXPECT_EQ(o.report["status"], "violation");
  EXPECT_EQ(o.report["verification"]["functor_validation"]["status"], "fail");
  EXPECT_FALSE(o.report["verification"]["functor_validation"]["witness"].get<std::string>().empty());
}

TEST(Commands, MalformedAlgebraIsInputError) {
  auto o = execute(Command::check, load("malformed_associativity"));
  EXPECT_EQ(o.exit_code, ExitCode::input_error);
  EXPECT_NE(o.report["error"].get<std::string>().find("associativity"), std::string::npos);
}

TEST(Commands, MissingSectionsAreInputErrors) {
  EXPECT_EQ(execute(Command::check, load("circle")).exit_code, ExitCode::input_error);
  EXPECT_EQ(execute(Command::amitsur, load("constant3")).exit_code, ExitCode::input_error);
  EXPECT_EQ(execute(Command::oracle, load("e1")).exit_code, ExitCode::input_error);
}

TEST(Commands, DimensionCap) {
  auto p = load("e1");
  p.dim_cap = 8;
  auto o = execute(Command::amitsur, p);
  EXPECT_EQ(o.exit_code, ExitCode::resource_cap);
  EXPECT_EQ(o.report["status"], "resource_cap");
}

TEST(Commands, PrimeFieldResults) {
  auto p = load("e1");
  p.field = {5};
  auto o = execute(Command::verify, p);
  EXPECT_EQ(o.exit_code, 0);
  EXPECT_EQ(o.report["field"], "F5");
  EXPECT_EQ(o.report["results"]["cech"]["cohomology"], json({3, 0}));
}

TEST(Report, DeterministicApartFromTiming) {
  for (const auto& name : all_problems) {
    auto p = load(name);
    for (auto cmd : {Command::check, Command::cech, Command::verify}) {
      auto a = execute(cmd, p), b = execute(cmd, p);
      EXPECT_EQ(without_timing(a.report).dump(), without_timing(b.report).dump()) << name;
      EXPECT_EQ(a.exit_code, b.exit_code);
    }
  }
}

TEST(Report, EchoReparsesAndHashIsStable) {
  auto o = execute(Command::check, load("e1"));
  EXPECT_EQ(parse_problem(o.report["input"]["problem"]), load("e1"));
  auto o2 = execute(Command::check, parse_problem(o.report["input"]["problem"]));
  EXPECT_EQ(o.report["input"]["hash"], o2.report["input"]["hash"]);
  auto p = load("e1");
  p.n_max = 3;
  EXPECT_NE(execute(Command::check, p).report["input"]["hash"], o.report["input"]["hash"]);
}

TEST(Report, Fnv1aKnownValues) {
  EXPECT_EQ(fnv1a64(""), "cbf29ce484222325");
  EXPECT_EQ(fnv1a64("a"), "af63dc4c8601ec8c");
}

TEST(Cli, ExitCodesAndFormats) {
  auto r = run_cli({"check", "--input", problem_path("e1"), "--format", "json"});
  EXPECT_EQ(r.code, 0);
  auto j = json::parse(r.out);
  EXPECT_EQ(j["results"]["covering"]["complete"], true);

  r = run_cli({"check", "-i", problem_path("e1")});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("results.covering.complete"), std::string::npos);

  r = run_cli({"check", "-i", problem_path("malformed_associativity")});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("associativity"), std::string::npos);

  r = run_cli({"verify", "-i", problem_path("explicit_not_functor")});
  EXPECT_EQ(r.code, 1);

  r = run_cli({"amitsur", "-i", problem_path("e1"), "--dim-cap", "5"});
  EXPECT_EQ(r.code, 3);

  r = run_cli({"check", "-i", problem_path("does_not_exist")});
  EXPECT_EQ(r.code, 2);

  r = run_cli({"frobnicate"});
  EXPECT_EQ(r.code, 2);

  r = run_cli({"cech", "-i", problem_path("e1"), "--format", "yaml"});
  EXPECT_EQ(r.code, 2);
}

TEST(Cli, OverridesAndOutputFile) {
  auto out = std::filesystem::temp_directory_path() / "ncc_cli_test_report.json";
  auto r = run_cli({"amitsur", "-i", problem_path("e1"), "--n-max", "3", "--field-override", "F7", "--format", "json",
                    "-o", out.string()});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(out);
  auto j = json::parse(in);
  EXPECT_EQ(j["field"], "F7");
  EXPECT_EQ(j["results"]["amitsur"]["augmented"], json({0, 0, 0, 0}));
  EXPECT_EQ(j["input"]["problem"]["options"]["n_max"], 3);
  std::filesystem::remove(out);
}
