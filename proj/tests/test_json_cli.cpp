#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>

#include "satake/json_io.hpp"

using namespace satake;

namespace {

struct CommandResult {
  int exit_code = -1;
  std::string output;
};

// Runs the installed binary with stderr folded into stdout.
CommandResult run_cli(const std::string& args) {
  std::string cmd = std::string(SATAKE_CLI_BIN) + " " + args + " 2>&1";
  CommandResult res;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf;
  size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
    res.output.append(buf.data(), got);
  int status = pclose(pipe);
  res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return res;
}

}  // namespace

TEST_CASE("vector and exponent round trips") {
  Vec v = {Rat(1, 2), Rat(-3), Rat(0)};
  CHECK(vec_from_json(vec_to_json(v)) == v);
  std::vector<ExtRat> e = {ExtRat(Rat(2, 7)), ExtRat::neg_inf(), ExtRat(0)};
  CHECK(exps_from_json(exps_to_json(e)) == e);
}

TEST_CASE("cone round trip preserves the cone") {
  Cone c = Cone::from_ineqs(2, {{Rat(-1), Rat(0)}, {Rat(0), Rat(-1)}});
  Cone back = cone_from_json(cone_to_json(c));
  CHECK(back.equals(c));
  Cone half = Cone::from_ineqs(2, {{Rat(1), Rat(0)}});
  CHECK(cone_from_json(cone_to_json(half)).equals(half));
}

TEST_CASE("seminorm and sequence round trips") {
  DiagSeminorm x;
  x.exps = {ExtRat(Rat(1, 3)), ExtRat::neg_inf()};
  DiagSeminorm back = seminorm_from_json(seminorm_to_json(x));
  CHECK(back.exps == x.exps);
  CHECK(back.basis_tag == x.basis_tag);

  Json j{{"a", Json::array({"1", "2/3"})}, {"b", Json::array({"0", "-1"})}};
  LogAffineSequence s = sequence_from_json(j);
  CHECK(s.a == Vec{Rat(1), Rat(2, 3)});
  CHECK(s.b == Vec{Rat(0), Rat(-1)});
}

TEST_CASE("fan report shape") {
  RootDatum rd = RootDatum::build("A2");
  Fan f = build_fan_Ft(rd, {});
  Json j = fan_report_json(rd, f, nullptr);
  CHECK(j["num_cones"] == 13);
  CHECK(j["num_maximal"] == 6);
  CHECK(j["cones_by_dim"]["2"] == 6);
  CHECK(j["cones_by_dim"]["1"] == 6);
  CHECK(j["degenerate"] == false);
}

TEST_CASE("cli: fan reports and determinism") {
  CommandResult r = run_cli("fan --root-system A2");
  REQUIRE(r.exit_code == 0);
  Json j = Json::parse(r.output);
  CHECK(j["num_cones"] == 13);

  CommandResult r2 = run_cli("fan --root-system A2 --type 2");
  REQUIRE(r2.exit_code == 0);
  CHECK(Json::parse(r2.output)["num_cones"] == 7);

  // byte-for-byte deterministic
  CHECK(run_cli("fan --root-system B2 --check --samples 50").output ==
        run_cli("fan --root-system B2 --check --samples 50").output);
}

TEST_CASE("cli: weight and admissibility reports") {
  CommandResult r = run_cli("weights --root-system A2 --highest-weight 1,0");
  REQUIRE(r.exit_code == 0);
  CHECK(Json::parse(r.output)["num_weights"] == 3);

  r = run_cli("admissible --root-system A2 --highest-weight 1,0");
  REQUIRE(r.exit_code == 0);
  Json j = Json::parse(r.output);
  CHECK(j["tau"] == "{2}");
  CHECK(j["t_rho_check"] == "{1}");
  CHECK(j["subsets"].size() == 4);
}

TEST_CASE("cli: embedding comparison succeeds") {
  CommandResult r = run_cli("embed --root-system A2 --highest-weight 1,0");
  REQUIRE(r.exit_code == 0);
  CHECK(Json::parse(r.output)["fan_match"] == true);
}

TEST_CASE("cli: sequence and seminorm subcommands") {
  CommandResult r = run_cli("classify-seq --a 5,0 --b 1,1");
  REQUIRE(r.exit_code == 0);
  Json j = Json::parse(r.output);
  CHECK(j["limit_exps"] == Json::array({"0", "-5"}));

  r = run_cli("seminorm --exps 0,2,-inf");
  REQUIRE(r.exit_code == 0);
  j = Json::parse(r.output);
  CHECK(j["canonical"]["exps"] == Json::array({"1", "-1", "-inf"}));
  CHECK(j["kernel"] == Json::array({2}));
}

TEST_CASE("cli: exit codes") {
  CHECK(run_cli("--help").exit_code == 0);
  CHECK(run_cli("fan --root-system Z9").exit_code == 2);
  CHECK(run_cli("fan --root-system A2 --type 5").exit_code == 2);
  CHECK(run_cli("seminorm --exps -inf").exit_code == 2);
  CHECK(run_cli("nonsense").exit_code == 2);
}

TEST_CASE("cli: relevancy subcommand") {
  CommandResult r = run_cli("relevant --root-system A2 --type 2 --subset ''");
  REQUIRE(r.exit_code == 0);
  Json j = Json::parse(r.output);
  CHECK(j["relevant"] == false);
  CHECK(j["smallest_relevant"] == "{2}");
  CHECK(j["cone_chain_ok"] == true);
}
