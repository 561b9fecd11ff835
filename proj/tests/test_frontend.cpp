#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "specz/cli.hpp"
#include "support.hpp"

using namespace specz;

namespace {

ErrorCode code_of(std::string_view text) {
  try {
    parse_session(text);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error for: " << text;
  return ErrorCode::InvalidArgument;
}

CheckReport run_one(std::string_view text) {
  Session s = parse_session(text);
  EXPECT_EQ(s.checks.size(), 1u);
  return run_check(s, s.checks.at(0));
}

}  // namespace

TEST(ParseSession, DocumentedExamples) {
  Session s = parse_session("ring Q(u)[x,y] order grevlex; ideal I = u*x^2 - 1;");
  EXPECT_EQ(s.ideals.size(), 1u);
  EXPECT_EQ(s.ideal("I").gens()[0], parse_poly(s.ring, "u*x^2 - 1"));

  try {
    parse_session("ring Q(u)[x,y];\nideal I = x +;");
    FAIL() << "expected a syntax error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::SyntaxError);
    EXPECT_NE(std::string(e.what()).find("2:14"), std::string::npos) << e.what();
  }
  EXPECT_EQ(code_of("ring Q(u)[x]; ideal I = x +"), ErrorCode::SyntaxError);
  EXPECT_EQ(code_of("ring Q(u)[x]; point a = (1, 2);"), ErrorCode::ArityMismatch);
}

TEST(ParseSession, Errors) {
  EXPECT_EQ(code_of("ideal I = x;"), ErrorCode::SyntaxError);
  EXPECT_EQ(code_of("ring Q[x]; ideal I = y;"), ErrorCode::UnknownName);
  EXPECT_EQ(code_of("ring Q[x]; ideal I = x; ideal I = x^2;"), ErrorCode::SyntaxError);
  EXPECT_EQ(code_of("ring Q[x]; ideal I = 2 x;"), ErrorCode::SyntaxError);
  EXPECT_EQ(code_of("ring Q[x]; module M = coker A;"), ErrorCode::UnknownName);
  EXPECT_EQ(code_of("ring Q[x,y]; matrix A = [[x, y], [x]];"), ErrorCode::ArityMismatch);
  EXPECT_EQ(code_of("ring Q[x]; ideal I = x; check ann-dim-2.6 I;"), ErrorCode::SyntaxError);
  EXPECT_EQ(code_of("ring Q[x]; ideal I = x; check dim-9.9 I seed 1;"), ErrorCode::UnknownName);
  EXPECT_EQ(code_of("ring Q[x]; ideal I = x; check ops-2.3 I seed 1;"), ErrorCode::ArityMismatch);
  EXPECT_EQ(code_of("ring Q[x]; ideal I = x; matrix A = [[x]]; check ops-2.3 I A seed 1;"),
            ErrorCode::SyntaxError);
  EXPECT_EQ(code_of("ring Q[x,y]; matrix A = [[x, y]]; matrix B = [[x, y]]; complex C = A, B;"),
            ErrorCode::ArityMismatch);
  EXPECT_EQ(code_of("ring Q[x]; ideal I = x / 0;"), ErrorCode::DenominatorVanishes);
}

TEST(ParseSession, RoundTrip) {
  const char* text =
      "# a comment\n"
      "ring Q(u,v)[x,y,z] order lex;\n"
      "ideal I = u*x^2 - 1/v, (u - 1)*y;\n"
      "ideal Z = 0;\n"
      "matrix A = [[x, (1/u)*y], [0, z^2]];\n"
      "matrix B = [[y], [-x]];\n"
      "module M = coker A;\n"
      "module F = free 2;\n"
      "module N = quotient I;\n"
      "point p = (1/2, -3);\n"
      "complex C = A;\n"
      "check ann-dim-2.6 M trials 3 seed 7 bound 50 at p;\n"
      "check ops-2.3 I Z seed 9;\n";
  Session s = parse_session(text);
  std::string once = print_session(s);
  Session t = parse_session(once);
  EXPECT_EQ(print_session(t), once);
  EXPECT_EQ(t.ideal("I"), s.ideal("I"));
  EXPECT_EQ(t.matrix("A"), s.matrix("A"));
  EXPECT_EQ(t.point("p"), s.point("p"));
  ASSERT_EQ(t.checks.size(), 2u);
  EXPECT_EQ(t.checks[0].trials, 3);
  EXPECT_EQ(t.checks[0].points, std::vector<std::string>{"p"});
  EXPECT_EQ(t.checks[1].seed, 9u);
  EXPECT_FALSE(t.checks[1].trials_given);
}

TEST(RunCheck, DocumentedExamples) {
  auto len = run_one("ring Q(u)[x,y]; ideal I = x^2 - u, y^2; check length-2.8 I seed 3;");
  EXPECT_EQ(len.status, CheckStatus::Pass) << len.reason;
  EXPECT_EQ(len.trials, 20);
  EXPECT_EQ(len.alphas.size(), 20u);

  auto koszul = run_one(
      "ring Q(u)[x,y]; matrix K1 = [[x, y + u]]; matrix K2 = [[-y - u], [x]]; complex C = K1, K2;"
      "check exact-2.2 C seed 5;");
  EXPECT_EQ(koszul.status, CheckStatus::Pass) << koszul.reason;

  auto freem = run_one("ring Q(u)[x,y]; module F = free 2; check ann-dim-2.6 F seed 1;");
  EXPECT_EQ(freem.status, CheckStatus::Pass) << freem.reason;
  EXPECT_EQ(freem.certificate, "1");
}

TEST(RunCheck, FailAtExceptionalPoint) {
  // at u = 0 the ideal (u*x^2 - 1) becomes the unit ideal
  const char* text = "ring Q(u)[x]; ideal I = u*x^2 - 1; point z = (0); check height-1.1 I seed 2 at z;";
  auto r = run_one(text);
  EXPECT_EQ(r.status, CheckStatus::Fail);
  EXPECT_EQ(r.trials, 1);
  ASSERT_TRUE(r.counterexample.has_value());
  EXPECT_TRUE(r.counterexample->on_certificate);
  EXPECT_EQ(r.counterexample->alpha, Point{Rational(0)});
  EXPECT_EQ(r.certificate, "(u)");

  // replay from the counterexample payload
  std::string replay;
  for (const auto& line : r.counterexample->inputs) replay += line + "\n";
  replay += "point w = " + point_str(r.counterexample->alpha) + ";\n";
  replay += "check height-1.1 I seed " + std::to_string(r.counterexample->seed) + " at w;\n";
  auto again = run_one(replay);
  EXPECT_EQ(again.status, CheckStatus::Fail);
  EXPECT_EQ(again.counterexample->detail, r.counterexample->detail);
}

TEST(RunCheck, ExplicitPointOffCertificatePasses) {
  auto r = run_one("ring Q(u)[x]; ideal I = u*x^2 - 1; point a = (4); check height-1.1 I seed 2 at a trials 2;");
  EXPECT_EQ(r.status, CheckStatus::Pass);
  EXPECT_EQ(r.trials, 3);
  EXPECT_EQ(r.alphas[0], Point{Rational(4)});
}

TEST(RunCheck, SkippedOnPrecondition) {
  auto r = run_one("ring Q(u)[x,y]; ideal I = x - u; check length-2.8 I seed 1;");
  EXPECT_EQ(r.status, CheckStatus::Skipped);
  EXPECT_FALSE(r.reason.empty());
  auto inh = run_one("ring Q(u)[x,y]; ideal I = x^2 - y; check depth-projdim-3.1 I seed 1;");
  EXPECT_EQ(inh.status, CheckStatus::Skipped);
  EXPECT_NE(inh.reason.find("NotHomogeneous"), std::string::npos);
}

TEST(Report, Json) {
  EXPECT_EQ(emit_report({}, ReportFormat::Json), "[]");
  Session s = parse_session("ring Q(u)[x,y]; ideal I = x^2 - u, y^2; check length-2.8 I trials 4 seed 11;");
  auto reports = run_session(s);
  auto j = nlohmann::json::parse(emit_report(reports, ReportFormat::Json));
  ASSERT_EQ(j.size(), 1u);
  for (const char* key : {"theorem", "status", "trials", "seed", "alpha_list", "certificate", "elapsed_ms",
                          "counterexample"})
    EXPECT_TRUE(j[0].contains(key)) << key;
  EXPECT_EQ(j[0]["status"], "PASS");
  EXPECT_EQ(j[0]["seed"], 11);
  EXPECT_EQ(j[0]["alpha_list"].size(), 4u);
  EXPECT_TRUE(j[0]["counterexample"].is_null());
  std::string text = emit_report(reports, ReportFormat::Text);
  EXPECT_NE(text.find("length-2.8"), std::string::npos);
  EXPECT_NE(text.find("PASS"), std::string::npos);
}

TEST(Report, FailEntryCarriesReplayData) {
  Session s = parse_session("ring Q(u)[x]; ideal I = u*x^2 - 1; point z = (0); check height-1.1 I seed 2 at z;");
  auto j = nlohmann::json::parse(emit_report(run_session(s), ReportFormat::Json));
  EXPECT_EQ(j[0]["status"], "FAIL");
  EXPECT_EQ(j[0]["counterexample"]["alpha"], nlohmann::json::array({"0"}));
  EXPECT_EQ(j[0]["counterexample"]["inputs"][1], "ideal I = u*x^2 - 1;");
}

TEST(Report, Deterministic) {
  const char* text =
      "ring Q(u,v)[x,y]; ideal I = x^2 - u*y, v*y^2; ideal J = x - v;"
      "check ops-2.3 I J trials 5 seed 42; check ann-dim-2.6 I trials 5 seed 42;";
  auto strip = [](std::vector<CheckReport> rs) {
    for (auto& r : rs) r.elapsed_ms = 0;
    return emit_report(rs, ReportFormat::Json);
  };
  std::string a = strip(run_session(parse_session(text)));
  std::string b = strip(run_session(parse_session(text)));
  EXPECT_EQ(a, b);
}

namespace {

struct CliRun {
  int code;
  std::string out, err;
};

CliRun cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(std::move(args), out, err);
  return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& text) {
  std::string path = ::testing::TempDir() + name;
  std::ofstream(path) << text;
  return path;
}

const char* kCliSession =
    "ring Q(u)[x,y];\n"
    "ideal I = u*x^2 - 1;\n"
    "ideal U = x, x + 1;\n"
    "module F = free 2;\n"
    "point z = (0);\n"
    "check ann-dim-2.6 F seed 1;\n";

}  // namespace

TEST(Cli, ExitCodes) {
  std::string path = write_temp("cli.ses", kCliSession);
  auto ok = cli({"check", "--theorem", "ann-dim-2.6", "--input", path, "--trials", "20", "--seed", "7"});
  EXPECT_EQ(ok.code, 0) << ok.err;
  EXPECT_NE(ok.out.find("PASS"), std::string::npos);

  auto spec = cli({"specialize", "--ideal", "I", "--alpha", "4", "--input", path});
  EXPECT_EQ(spec.code, 0) << spec.err;
  EXPECT_NE(spec.out.find("4*x^2 - 1"), std::string::npos);
  EXPECT_NE(spec.out.find("certificate: (u)"), std::string::npos);

  auto unit = cli({"invariant", "--what", "dim", "--object", "U", "--input", path});
  EXPECT_EQ(unit.code, 1);
  EXPECT_NE(unit.err.find("UnitIdeal"), std::string::npos);

  auto fail = cli({"check", "--theorem", "height-1.1", "--subjects", "I", "--seed", "3", "--alpha", "0",
                   "--input", path});
  EXPECT_EQ(fail.code, 1);
  EXPECT_NE(fail.out.find("FAIL"), std::string::npos);

  EXPECT_EQ(cli({"check", "--input", path + ".missing"}).code, 2);
  EXPECT_EQ(cli({"check", "--input", path, "--frobnicate"}).code, 2);
  EXPECT_EQ(cli({}).code, 2);
  EXPECT_EQ(cli({"check", "--theorem", "height-1.1", "--subjects", "I", "--input", path}).code, 2);
  EXPECT_EQ(cli({"invariant", "--what", "dim", "--object", "nope", "--input", path}).code, 2);
  EXPECT_EQ(cli({"specialize", "--ideal", "I", "--alpha", "1,2", "--input", path}).code, 2);
  std::string bad = write_temp("bad.ses", "ring Q[x]; ideal I = x +;");
  EXPECT_EQ(cli({"report", "--input", bad}).code, 2);
}

TEST(Cli, ReportJsonDeterministic) {
  std::string path = write_temp("det.ses",
                                "ring Q(u)[x,y]; ideal I = x^2 - u, y^2; ideal J = x*y - u;\n"
                                "check length-2.8 I seed 4; check ann-dim-2.6 J trials 6 seed 8;\n");
  auto a = cli({"report", "--input", path, "--format", "json", "--no-timings"});
  auto b = cli({"report", "--input", path, "--format", "json", "--no-timings"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  auto j = nlohmann::json::parse(a.out);
  EXPECT_EQ(j.size(), 2u);
  EXPECT_EQ(j[0]["elapsed_ms"], 0);

  std::string empty = write_temp("empty.ses", "ring Q[x];");
  auto e = cli({"report", "--input", empty, "--format", "json"});
  EXPECT_EQ(e.code, 0);
  EXPECT_EQ(e.out, "[]\n");
}

TEST(Cli, BundledSessions) {
  for (const char* name : {"/cusp.ses", "/ex.ses"}) {
    std::string path = std::string(SPECZ_SESSIONS_DIR) + name;
    auto r = cli({"report", "--input", path, "--format", "json", "--no-timings"});
    EXPECT_EQ(r.code, 0) << name << "\n" << r.out << r.err;
    for (const auto& entry : nlohmann::json::parse(r.out)) EXPECT_EQ(entry["status"], "PASS") << entry.dump();
  }
  std::string cusp = std::string(SPECZ_SESSIONS_DIR) + "/cusp.ses";
  auto spec = cli({"specialize", "--ideal", "I", "--alpha", "4", "--input", cusp});
  EXPECT_EQ(spec.code, 0);
  EXPECT_EQ(spec.out, "at (4):\n  4*x^2 - 1\ncertificate: (u)\n");
}
