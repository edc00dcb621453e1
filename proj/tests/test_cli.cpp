#include <doctest.h>

#include <cmath>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "qwalk/cli.hpp"

using namespace qwalk;
using json = nlohmann::ordered_json;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> result;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) result.push_back(line);
  return result;
}

double row_value(const json& doc, std::size_t row, const std::string& column) {
  const auto& cols = doc.at("columns");
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c] == column) return doc.at("rows").at(row).at(c).get<double>();
  }
  FAIL("missing column " << column);
  return 0.0;
}

}  // namespace

TEST_CASE("presets") {
  CHECK(max_abs_diff(cli::preset_coin("hadamard").matrix(), Coin::hadamard().matrix()) == 0.0);
  CHECK(cli::preset_coin("identity").branch() == CoinBranch::BZero);
  CHECK(cli::preset_coin("flip").branch() == CoinBranch::AZero);
  const double h = 1.0 / std::sqrt(2.0);
  CHECK(std::abs(cli::preset_qubit("symmetric").beta() - cplx(0.0, h)) < 1e-16);
  CHECK(cli::preset_qubit("left").alpha() == cplx(1.0));
  CHECK(cli::preset_qubit("right").beta() == cplx(1.0));
  CHECK_THROWS_AS(cli::preset_coin("nope"), Error);
}

TEST_CASE("coin and qubit parsing") {
  const Coin b0 = cli::parse_coin("1,0,0,0,0,0,1,0", 1e-9);
  CHECK(b0.branch() == CoinBranch::BZero);
  CHECK_THROWS_AS(cli::parse_coin("1,2,3", 1e-9), Error);
  CHECK_THROWS_AS(cli::parse_coin("1,0,1,0,1,0,1,0", 1e-9), Error);
  CHECK_THROWS_AS(cli::parse_coin("1,0,0,0,0,0,1,x", 1e-9), Error);
  // Four-digit entries are unitary to about 1e-5, inside a looser tolerance.
  CHECK_NOTHROW(cli::parse_coin("0.7071,0,0.7071,0,0.7071,0,-0.7071,0", 1e-4));
  const Qubit q = cli::parse_qubit("0.7071,0,0.7071,0");
  CHECK(std::abs(std::norm(q.alpha()) + std::norm(q.beta()) - 1.0) < 1e-15);
  CHECK_THROWS_AS(cli::parse_qubit("0,0,0,0"), Error);
}

TEST_CASE("dist on the Hadamard symmetric walk") {
  const auto r = run_cli({"dist", "--preset-coin", "hadamard", "--preset-qubit", "symmetric", "-n", "4", "--format",
                          "json"});
  REQUIRE(r.code == cli::kExitOk);
  const json doc = json::parse(r.out);
  CHECK(doc.at("command") == "dist");
  CHECK(doc.at("self_check") == "pass");
  REQUIRE(doc.at("rows").size() == 5);
  const double expected[] = {1.0 / 16, 6.0 / 16, 2.0 / 16, 6.0 / 16, 1.0 / 16};
  for (std::size_t i = 0; i < 5; ++i) {
    CHECK(std::abs(row_value(doc, i, "p_engine") - expected[i]) < 1e-12);
    CHECK(std::abs(row_value(doc, i, "p_closed") - expected[i]) < 1e-12);
  }
}

TEST_CASE("dist at n = 0 and on a b = 0 coin") {
  const auto zero = run_cli({"dist", "-n", "0", "--format", "json"});
  REQUIRE(zero.code == cli::kExitOk);
  const json z = json::parse(zero.out);
  REQUIRE(z.at("rows").size() == 1);
  CHECK(z.at("rows")[0][0] == 0);
  CHECK(std::abs(z.at("rows")[0][1].get<double>() - 1.0) < 1e-15);
  CHECK(z.at("rows")[0][2].is_null());

  const auto b0 = run_cli({"dist", "--coin", "1,0,0,0,0,0,1,0", "--qubit", "0.6,0,0,0.8", "-n", "5", "--format", "json"});
  REQUIRE(b0.code == cli::kExitOk);
  const json d = json::parse(b0.out);
  REQUIRE(d.at("rows").size() == 2);
  CHECK(d.at("rows")[0][0] == -5);
  CHECK(std::abs(d.at("rows")[0][1].get<double>() - 0.36) < 1e-15);
  CHECK(d.at("rows")[1][0] == 5);
  CHECK(std::abs(d.at("rows")[1][1].get<double>() - 0.64) < 1e-15);
  // No closed-form columns for a degenerate coin.
  CHECK(d.at("columns").size() == 2);
}

TEST_CASE("charfn rows") {
  const auto r = run_cli({"charfn", "-n", "4", "--xi", "0," + std::to_string(std::numbers::pi / 2), "--format", "json"});
  REQUIRE(r.code == cli::kExitOk);
  const json doc = json::parse(r.out);
  CHECK(std::abs(row_value(doc, 0, "re_closed") - 1.0) < 1e-12);
  CHECK(std::abs(row_value(doc, 0, "im_closed")) < 1e-12);
  CHECK(std::abs(row_value(doc, 1, "re_closed") + 0.5) < 1e-6);

  const auto b0 = run_cli({"charfn", "--preset-coin", "identity", "--preset-qubit", "left", "-n", "3", "--xi", "0.7",
                           "--format", "json"});
  REQUIRE(b0.code == cli::kExitOk);
  const json d = json::parse(b0.out);
  CHECK(std::abs(row_value(d, 0, "re_closed") - std::cos(2.1)) < 1e-12);
  CHECK(std::abs(row_value(d, 0, "im_closed") + std::sin(2.1)) < 1e-12);
}

TEST_CASE("moments and symmetry commands") {
  const auto m = run_cli({"moments", "-n", "4", "-m", "2", "--preset-qubit", "symmetric", "--preset-coin", "hadamard",
                          "--format", "json"});
  REQUIRE(m.code == cli::kExitOk);
  const json md = json::parse(m.out);
  CHECK(std::abs(row_value(md, 1, "closed_form") - 5.0) < 1e-12);

  const auto asym = run_cli({"symmetry", "--preset-coin", "hadamard", "--qubit", "0.7071,0,0.7071,0", "--format", "json"});
  REQUIRE(asym.code == cli::kExitOk);
  const json ad = json::parse(asym.out);
  CHECK(ad.at("summary").at("in_phi_perp") == false);
  CHECK(ad.at("summary").at("distribution_symmetric") == false);

  // re,im encoding: this is (1, i)/sqrt(2), the symmetric state.
  const auto sym = run_cli({"symmetry", "--preset-coin", "hadamard", "--qubit", "0.7071,0,0,0.7071", "--format", "json"});
  REQUIRE(sym.code == cli::kExitOk);
  CHECK(json::parse(sym.out).at("summary").at("in_phi_perp") == true);
}

TEST_CASE("limit command") {
  const auto r = run_cli({"limit", "--preset-coin", "hadamard", "--preset-qubit", "symmetric", "--grid", "21",
                          "--format", "json"});
  REQUIRE(r.code == cli::kExitOk);
  const json doc = json::parse(r.out);
  REQUIRE(doc.at("rows").size() == 21);
  CHECK(std::abs(row_value(doc, 10, "x")) < 1e-15);
  CHECK(std::abs(row_value(doc, 10, "density") - 1.0 / std::numbers::pi) < 1e-15);
  CHECK(std::abs(doc.at("summary").at("sd").get<double>() - 0.54119) < 1e-4);
}

TEST_CASE("converge and oracle commands") {
  const auto c = run_cli({"converge", "--n-list", "50,100", "--format", "json"});
  REQUIRE(c.code == cli::kExitOk);
  const json cd = json::parse(c.out);
  CHECK(row_value(cd, 1, "ks_smoothed") < row_value(cd, 0, "ks_smoothed"));

  const auto o = run_cli({"oracle", "--preset-qubit", "right", "--n-cap", "10"});
  CHECK(o.code == cli::kExitOk);
  CHECK(lines(o.out).size() == 11);
  CHECK(run_cli({"oracle", "--n-cap", "15"}).code == cli::kExitParse);
}

TEST_CASE("parse errors exit with code 2") {
  CHECK(run_cli({"dist", "--coin", "1,2,3", "-n", "4"}).code == cli::kExitParse);
  CHECK(run_cli({"dist"}).code == cli::kExitParse);
  CHECK(run_cli({"bogus"}).code == cli::kExitParse);
  CHECK(run_cli({"dist", "-n", "4", "--format", "xml"}).code == cli::kExitParse);
  CHECK(run_cli({"dist", "-n", "4", "--preset-coin", "hadamard", "--coin", "1,0,0,0,0,0,1,0"}).code == cli::kExitParse);
  const auto bad = run_cli({"dist", "--coin", "1,0,1,0,1,0,1,0", "-n", "3"});
  CHECK(bad.code == cli::kExitParse);
  CHECK(bad.out.empty());
  CHECK_FALSE(bad.err.empty());
}

TEST_CASE("self-check failures exit with code 3") {
  // Accepted under a loose tolerance but not unitary, so the engine drifts
  // away from the closed form.
  const auto r = run_cli({"dist", "-n", "6", "--coin", "0.7080,0,0.7071,0,0.7071,0,-0.7071,0", "--coin-tol", "1e-2",
                          "--format", "json"});
  CHECK(r.code == cli::kExitSelfCheck);
  CHECK(json::parse(r.out).at("self_check") == "fail");
  CHECK_FALSE(r.err.empty());
}

TEST_CASE("output is deterministic and JSON round-trips bit-exactly") {
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"dist", "-n", "37", "--preset-qubit", "right", "--format", "json"},
        std::vector<std::string>{"limit", "--grid", "33", "--format", "json"},
        std::vector<std::string>{"charfn", "-n", "12", "--format", "json"}}) {
    const auto first = run_cli(args);
    const auto second = run_cli(args);
    REQUIRE(first.code == cli::kExitOk);
    CHECK(first.out == second.out);
    const json doc = json::parse(first.out);
    CHECK(doc.dump() + "\n" == first.out);
  }
  const auto csv1 = run_cli({"dist", "-n", "21"});
  const auto csv2 = run_cli({"dist", "-n", "21"});
  CHECK(csv1.out == csv2.out);
}

TEST_CASE("CSV layout") {
  const auto r = run_cli({"dist", "-n", "2"});
  REQUIRE(r.code == cli::kExitOk);
  const auto ls = lines(r.out);
  REQUIRE(ls.size() == 4);
  CHECK(ls[0] == "k,p_engine,p_closed,abs_diff,total_probability");

  cli::Table t;
  t.command = "x";
  t.columns = {"name"};
  t.rows = {{std::string("a,\"b\"")}, {0.1}};
  const auto csv = lines(cli::to_csv(t));
  CHECK(csv[1] == "\"a,\"\"b\"\"\"");
  CHECK(csv[2] == "0.10000000000000001");
}
