#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

#include "locrep/errors.hpp"
#include "locrep/rep_spec.hpp"

using namespace locrep;

namespace {

struct Run {
  int status;
  std::string out;
};

Run run(const std::string& args) {
  std::string cmd = std::string(LOCREP_CLI) + " " + args + " 2>/dev/null";
  Run r{-1, {}};
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  int st = pclose(pipe);
  r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

}  // namespace

TEST_CASE("rep specs") {
  CHECK(parse_rep_spec("artin", 3) == LocalRep::artin(3));
  LocalRep b1 = parse_rep_spec("wada:B1", 4);
  CHECK(b1.strands() == 4);
  CHECK(b1.core(3) == AutF2::parse("B,a"));
  CHECK(parse_rep_spec("wada:A1:r=1", 3) == LocalRep::artin(3));
  CHECK(parse_rep_spec("wada:A1:r=2", 2).core(1) == AutF2::parse("aabAA,a"));
  CHECK(parse_rep_spec("cores:abA,a;abA,a;abA,a", 3) == LocalRep::artin(3));
  CHECK(parse_rep_spec("cores:B,a;b,A", 3).core(2) == AutF2::parse("b,A"));
  CHECK_THROWS_AS(parse_rep_spec("wada:D2", 3), PreconditionError);
  CHECK_THROWS_AS(parse_rep_spec("cores:abA,a", 3), StrandMismatch);
  CHECK_THROWS_AS(parse_rep_spec("cores:a,b;b,a", 3), PreconditionError);
  CHECK_THROWS_AS(parse_rep_spec("burau", 3), ParseError);
  CHECK(parse_rep_spec("artin", 1).strands() == 1);
}

TEST_CASE("cli verify") {
  Run r = run("verify --quad a,b,a,b");
  CHECK(r.status == 0);
  CHECK(r.out.find("valid: yes") != std::string::npos);
  CHECK(r.out.find("families: T ") != std::string::npos);
  r = run("verify --quad a,b,b,a");
  CHECK(r.status == 1);
  CHECK(r.out.find("fails M") != std::string::npos);
  CHECK(run("verify --quad a,b,?,a").status == 2);
  CHECK(run("verify --quad a,b,c,a").status == 2);
  CHECK(run("verify").status == 2);
  CHECK(run("verify --pair abA,a").status == 0);
  CHECK(run("verify --pair ab,ba").status == 1);
  CHECK(run("frobnicate").status == 2);
}

TEST_CASE("cli classify and json determinism") {
  Run a = run("classify --max-len 1 --json");
  Run b = run("classify --max-len 1 --json --jobs 3");
  CHECK(a.status == 0);
  CHECK(a.out == b.out);
  auto j = nlohmann::json::parse(a.out);
  CHECK(j["count"] == 7);
  CHECK(run("classify --max-len 1").out.find("canonical classes: 7") != std::string::npos);
}

TEST_CASE("cli invariant") {
  Run r = run("invariant --rep artin --n 2 --braid \"1 1 1\" --homs S3 --json");
  CHECK(r.status == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["generators"] == 2);
  CHECK(j["hom_counts"]["S3"] == 12);
  CHECK(j["abelianization"] == nlohmann::json::array({1, 0}));
  CHECK(run("invariant --rep artin --n 2 --braid \"1 1 1\" --homs S3 --json").out == r.out);
  CHECK(run("invariant --rep artin --n 2 --braid 3").status == 2);
  CHECK(run("invariant --rep wada:D2 --n 3 --braid 1").status == 1);
  CHECK(run("invariant --rep artin --n 2 --braid 1 --homs Q8").status == 1);
}

TEST_CASE("cli act, catalog, gamma, check-stab") {
  Run r = run("act --rep artin --n 3 --braid 1");
  CHECK(r.status == 0);
  CHECK(r.out == "x1 -> x1 x2 X1\nx2 -> x1\nx3 -> x3\n");
  r = run("catalog --family A1 --r 2 --all-decorations");
  CHECK(r.status == 0);
  CHECK(r.out.find("A1:r=2  aabAA,a,aabAA,a  valid") == 0);
  CHECK(run("catalog --family E7").status == 2);
  r = run("gamma --family D --dot gamma_test.dot");
  CHECK(r.status == 0);
  CHECK(r.out.find("matches figure: yes") != std::string::npos);
  std::remove("gamma_test.dot");
  r = run("check-stab --rep wada:D1");
  CHECK(r.out.find("holds-up-to-inversion") != std::string::npos);
}
