#include "qwalk/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "qwalk/analytic.hpp"
#include "qwalk/limit.hpp"
#include "qwalk/paths.hpp"
#include "qwalk/symmetry.hpp"
#include "qwalk/walk.hpp"

namespace qwalk::cli {

namespace {

constexpr double kDistTol = 1e-8;
constexpr double kCharFnTol = 1e-8;
constexpr double kMomentRelTol = 1e-9;
constexpr double kOracleTol = 1e-9;
constexpr double kNormalizationTol = 1e-8;
constexpr double kDefaultCoinTol = 1e-9;

std::vector<double> parse_reals(const std::string& text, std::size_t expected, const char* what) {
  std::vector<double> values;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size() || !std::isfinite(v)) {
      throw Error(ErrorKind::InvalidArgument, std::string("bad number '") + item + "' in " + what);
    }
    values.push_back(v);
  }
  if (values.size() != expected) {
    throw Error(ErrorKind::InvalidArgument, std::string(what) + " needs " + std::to_string(expected) +
                                                " comma-separated reals, got " + std::to_string(values.size()));
  }
  return values;
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char ch : s) {
    if (ch == '"') quoted += '"';
    quoted += ch;
  }
  return quoted + "\"";
}

std::string cell_text(const Cell& cell) {
  struct Visitor {
    std::string operator()(std::monostate) const { return ""; }
    std::string operator()(std::int64_t v) const { return std::to_string(v); }
    std::string operator()(double v) const { return format_double(v); }
    std::string operator()(bool v) const { return v ? "true" : "false"; }
    std::string operator()(const std::string& v) const { return csv_field(v); }
  };
  return std::visit(Visitor{}, cell);
}

nlohmann::json cell_json(const Cell& cell) {
  struct Visitor {
    nlohmann::json operator()(std::monostate) const { return nullptr; }
    nlohmann::json operator()(std::int64_t v) const { return v; }
    nlohmann::json operator()(double v) const { return v; }
    nlohmann::json operator()(bool v) const { return v; }
    nlohmann::json operator()(const std::string& v) const { return v; }
  };
  return std::visit(Visitor{}, cell);
}

Cell int_cell(int v) { return static_cast<std::int64_t>(v); }

}  // namespace

Coin preset_coin(const std::string& name) {
  if (name == "hadamard") return Coin::hadamard();
  if (name == "identity") return validate_coin(Mat2::identity());
  if (name == "flip") return validate_coin({0.0, 1.0, 1.0, 0.0});
  throw Error(ErrorKind::InvalidArgument, "unknown coin preset '" + name + "'");
}

Qubit preset_qubit(const std::string& name) {
  const double h = 1.0 / std::sqrt(2.0);
  if (name == "symmetric") return make_qubit(h, cplx(0.0, h));
  if (name == "left") return make_qubit(1.0, 0.0);
  if (name == "right") return make_qubit(0.0, 1.0);
  throw Error(ErrorKind::InvalidArgument, "unknown qubit preset '" + name + "'");
}

Coin parse_coin(const std::string& text, double tol) {
  const auto v = parse_reals(text, 8, "--coin");
  return validate_coin({cplx(v[0], v[1]), cplx(v[2], v[3]), cplx(v[4], v[5]), cplx(v[6], v[7])}, tol);
}

Qubit parse_qubit(const std::string& text) {
  const auto v = parse_reals(text, 4, "--qubit");
  const cplx alpha(v[0], v[1]), beta(v[2], v[3]);
  const double norm = std::sqrt(std::norm(alpha) + std::norm(beta));
  if (!(norm > 0.0)) throw Error(ErrorKind::InvalidArgument, "--qubit must be a nonzero vector");
  return make_qubit(alpha / norm, beta / norm, 1e-12);
}

std::string to_csv(const Table& table) {
  std::string out;
  auto line = [&out](const std::vector<std::string>& fields) {
    for (std::size_t i = 0; i < fields.size(); ++i) {
      if (i) out += ',';
      out += fields[i];
    }
    out += '\n';
  };
  std::vector<std::string> header;
  for (const auto& c : table.columns) header.push_back(csv_field(c));
  for (const auto& [key, value] : table.summary) header.push_back(csv_field(key));
  line(header);
  for (const auto& row : table.rows) {
    std::vector<std::string> fields;
    for (const auto& cell : row) fields.push_back(cell_text(cell));
    for (const auto& [key, value] : table.summary) fields.push_back(cell_text(value));
    line(fields);
  }
  return out;
}

std::string to_json(const Table& table) {
  nlohmann::ordered_json doc;
  doc["command"] = table.command;
  doc["columns"] = table.columns;
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : table.rows) {
    nlohmann::json r = nlohmann::json::array();
    for (const auto& cell : row) r.push_back(cell_json(cell));
    rows.push_back(std::move(r));
  }
  doc["rows"] = std::move(rows);
  nlohmann::ordered_json summary = nlohmann::ordered_json::object();
  for (const auto& [key, value] : table.summary) summary[key] = cell_json(value);
  doc["summary"] = std::move(summary);
  doc["self_check"] = table.self_check_ok ? "pass" : "fail";
  return doc.dump() + "\n";
}

Table cmd_dist(const RunConfig& config, int n) {
  if (n < 0) throw Error(ErrorKind::InvalidArgument, "-n must be >= 0");
  Table t;
  t.command = "dist";
  const Distribution engine = distribution(config.coin, config.qubit, n);
  const bool with_closed_form = config.coin.generic();
  t.columns = {"k", "p_engine"};
  if (with_closed_form) {
    t.columns.push_back("p_closed");
    t.columns.push_back("abs_diff");
  }

  if (n == 0) {
    t.rows.push_back({int_cell(0), engine.at(0)});
    if (with_closed_form) {
      t.rows.back().push_back(std::monostate{});
      t.rows.back().push_back(std::monostate{});
    }
  } else {
    const auto params = WalkParams::make(config.coin, config.qubit);
    std::vector<double> closed;
    if (with_closed_form) closed = closed_form_distribution(params, n).probs();
    for (int k = -n; k <= n; k += 2) {
      const std::size_t slot = static_cast<std::size_t>((k + n) / 2);
      const double pe = engine.probs()[slot];
      if (!with_closed_form) {
        if (pe != 0.0) t.rows.push_back({int_cell(k), pe});
        continue;
      }
      const double diff = std::abs(pe - closed[slot]);
      if (pe == 0.0 && closed[slot] == 0.0) continue;
      if (diff > kDistTol) t.self_check_ok = false;
      t.rows.push_back({int_cell(k), pe, closed[slot], diff});
    }
  }
  t.summary.push_back({"total_probability", engine.total()});
  return t;
}

Table cmd_charfn(const RunConfig& config, int n, const std::vector<double>& xi_grid) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "-n must be >= 1");
  Table t;
  t.command = "charfn";
  t.columns = {"xi", "re_closed", "im_closed", "re_direct", "im_direct", "abs_diff"};
  const auto params = WalkParams::make(config.coin, config.qubit);
  const Distribution dist = distribution(config.coin, config.qubit, n);
  for (double xi : xi_grid) {
    const cplx closed = char_fn(params, n, xi);
    cplx direct = 0.0;
    for (int k = -n; k <= n; k += 2) direct += std::polar(dist.at(k), xi * k);
    const double diff = std::abs(closed - direct);
    if (diff > kCharFnTol) t.self_check_ok = false;
    t.rows.push_back({xi, closed.real(), closed.imag(), direct.real(), direct.imag(), diff});
  }
  return t;
}

Table cmd_moments(const RunConfig& config, int n, int m_max) {
  if (n < 1 || m_max < 1) throw Error(ErrorKind::InvalidArgument, "moments need -n >= 1 and -m >= 1");
  Table t;
  t.command = "moments";
  t.columns = {"m", "closed_form", "direct_sum", "abs_diff"};
  const auto params = WalkParams::make(config.coin, config.qubit);
  const Distribution dist = distribution(config.coin, config.qubit, n);
  for (int m = 1; m <= m_max; ++m) {
    const double closed = moment(params, n, m);
    double direct = 0.0;
    for (int k = -n; k <= n; k += 2) direct += std::pow(static_cast<double>(k), m) * dist.at(k);
    const double diff = std::abs(closed - direct);
    if (diff > kMomentRelTol * std::max(1.0, std::pow(static_cast<double>(n), m))) t.self_check_ok = false;
    t.rows.push_back({int_cell(m), closed, direct, diff});
  }
  return t;
}

Table cmd_symmetry(const RunConfig& config, int n_max) {
  if (n_max < 3) throw Error(ErrorKind::InvalidArgument, "--n-max must be >= 3");
  Table t;
  t.command = "symmetry";
  t.columns = {"n", "max_asymmetry", "mean"};
  const SymmetryVerdict verdict = verify_symmetry(config.coin, config.qubit, n_max);
  const auto params = WalkParams::make(config.coin, config.qubit);
  for (const auto& record : verdict.evidence) {
    double mean = 0.0;
    if (config.coin.generic()) {
      mean = moment(params, record.n, 1);
    } else {
      const Distribution d = distribution(config.coin, config.qubit, record.n);
      for (int k = -record.n; k <= record.n; k += 2) mean += k * d.at(k);
    }
    t.rows.push_back({int_cell(record.n), record.max_asymmetry, mean});
  }
  const bool symmetric = verdict.symmetric();
  const bool zero_mean = mean_zero_check(config.coin, config.qubit, n_max);
  if (config.coin.generic()) {
    const bool perp = verdict.in_phi_perp;
    t.summary.push_back({"in_phi_perp", perp});
    t.self_check_ok = perp == symmetric && symmetric == zero_mean;
  } else {
    t.summary.push_back({"in_phi_perp", std::monostate{}});
  }
  t.summary.push_back({"distribution_symmetric", symmetric});
  t.summary.push_back({"zero_mean", zero_mean});
  return t;
}

Table cmd_limit(const RunConfig& config, int grid) {
  if (grid < 1) throw Error(ErrorKind::InvalidArgument, "--grid must be >= 1");
  Table t;
  t.command = "limit";
  const Coin& coin = config.coin;
  if (coin.branch() == CoinBranch::BZero) {
    const TwoPointLimit w = two_point_limit(config.qubit);
    t.columns = {"x", "mass"};
    t.rows.push_back({-1.0, w.p_minus});
    t.rows.push_back({1.0, w.p_plus});
    t.summary.push_back({"mean", w.moment(1)});
    t.summary.push_back({"second_moment", w.moment(2)});
    return t;
  }
  if (coin.branch() == CoinBranch::AZero) {
    // |X_n| <= 1, so X_n / n collapses onto 0.
    t.columns = {"x", "mass"};
    t.rows.push_back({0.0, 1.0});
    t.summary.push_back({"mean", 0.0});
    t.summary.push_back({"second_moment", 0.0});
    return t;
  }

  const LimitDensity ld(coin, config.qubit);
  t.columns = {"x", "density", "cdf"};
  const double a = ld.abs_a();
  for (int i = 0; i < grid; ++i) {
    const double x = -a + 2.0 * a * (i + 0.5) / grid;
    t.rows.push_back({x, density(ld, x), limit_cdf(ld, x)});
  }
  const double mean = limit_moment(ld, 1);
  const double second = limit_moment(ld, 2);
  const double norm_quad = limit_cdf(ld, a);
  const double norm_hyper = normalization_via_hypergeometric(ld);
  t.summary.push_back({"lambda", ld.lambda()});
  t.summary.push_back({"mean", mean});
  t.summary.push_back({"second_moment", second});
  t.summary.push_back({"sd", std::sqrt(second - mean * mean)});
  t.summary.push_back({"normalization_quadrature", norm_quad});
  t.summary.push_back({"normalization_hypergeometric", norm_hyper});
  t.self_check_ok = std::abs(norm_quad - 1.0) < kNormalizationTol && std::abs(norm_hyper - 1.0) < kNormalizationTol;
  return t;
}

Table cmd_converge(const RunConfig& config, const std::vector<int>& n_list) {
  Table t;
  t.command = "converge";
  t.columns = {"n", "ks", "ks_next", "ks_smoothed"};
  for (int n : n_list) {
    const ConvergenceReport r = ks_convergence(config.coin, config.qubit, {n, n + 1});
    const double ks = r.points[0].ks, next = r.points[1].ks;
    t.rows.push_back({int_cell(n), ks, next, 0.5 * (ks + next)});
  }
  return t;
}

Table cmd_oracle(const RunConfig& config, int n_cap) {
  if (n_cap < 1) throw Error(ErrorKind::InvalidArgument, "--n-cap must be >= 1");
  if (n_cap > kEnumerationCap) {
    throw Error(ErrorKind::CapExceeded, "--n-cap above enumeration cap " + std::to_string(kEnumerationCap));
  }
  Table t;
  t.command = "oracle";
  t.columns = {"n", "xi_enum_vs_closed", "xi_enum_vs_pqrs", "prob_engine_vs_closed"};
  const Coin& coin = config.coin;
  const auto params = WalkParams::make(coin, config.qubit);
  for (int n = 1; n <= n_cap; ++n) {
    double closed_diff = 0.0, pqrs_diff = 0.0;
    for (int l = 0; l <= n; ++l) {
      const StepCount sc{l, n - l};
      const Mat2 brute = enumerate_xi(coin, sc);
      pqrs_diff = std::max(pqrs_diff, max_abs_diff(brute, pqrs_coefficients(coin, sc).matrix()));
      if (coin.generic() || l == 0 || l == n) {
        closed_diff = std::max(closed_diff, max_abs_diff(brute, closed_form_xi(coin, sc)));
      }
    }
    Cell prob_cell = std::monostate{};
    double worst = std::max(closed_diff, pqrs_diff);
    if (coin.generic()) {
      const Distribution engine = distribution(coin, config.qubit, n);
      const Distribution closed = closed_form_distribution(params, n);
      double prob_diff = 0.0;
      for (int k = -n; k <= n; k += 2) prob_diff = std::max(prob_diff, std::abs(engine.at(k) - closed.at(k)));
      prob_cell = prob_diff;
      worst = std::max(worst, prob_diff);
    }
    if (worst > kOracleTol) t.self_check_ok = false;
    t.rows.push_back({int_cell(n), closed_diff, pqrs_diff, prob_cell});
  }
  return t;
}

namespace {

std::vector<double> default_xi_grid(int points) {
  std::vector<double> grid;
  for (int i = 0; i < points; ++i) {
    grid.push_back(points == 1 ? 0.0 : std::numbers::pi * i / (points - 1));
  }
  return grid;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact simulation and closed forms for the two-state quantum walk on the line", "qwalk"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string coin_preset, coin_text, qubit_preset, qubit_text, format_text = "csv";
  double coin_tol = kDefaultCoinTol;
  auto* coin_opt = app.add_option("--preset-coin", coin_preset, "hadamard | identity | flip");
  app.add_option("--coin", coin_text, "a,b,c,d as re,im pairs (row-major)")->excludes(coin_opt);
  auto* qubit_opt = app.add_option("--preset-qubit", qubit_preset, "symmetric | left | right");
  app.add_option("--qubit", qubit_text, "alpha,beta as re,im pairs")->excludes(qubit_opt);
  app.add_option("--coin-tol", coin_tol, "unitarity tolerance for --coin")->capture_default_str();
  app.add_option("--format", format_text, "csv | json")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();

  int n = 0;
  int m_max = 4;
  int n_max = 10;
  int grid = 21;
  int n_cap = 12;
  int xi_points = 9;
  std::vector<double> xi_list;
  std::vector<int> n_list{50, 100, 200, 400};

  auto* dist = app.add_subcommand("dist", "engine vs explicit distribution");
  dist->add_option("-n", n, "time")->required();
  auto* charfn = app.add_subcommand("charfn", "characteristic function vs direct sum");
  charfn->add_option("-n", n, "time")->required();
  charfn->add_option("--xi", xi_list, "explicit xi values")->delimiter(',');
  charfn->add_option("--xi-points", xi_points, "uniform grid on [0, pi]")->capture_default_str();
  auto* moments = app.add_subcommand("moments", "closed-form moments vs direct sums");
  moments->add_option("-n", n, "time")->required();
  moments->add_option("-m", m_max, "highest moment")->capture_default_str();
  auto* symmetry = app.add_subcommand("symmetry", "symmetry classification");
  symmetry->add_option("--n-max", n_max, "largest time checked")->capture_default_str();
  auto* limit = app.add_subcommand("limit", "limit density on a grid");
  limit->add_option("--grid", grid, "number of midpoint grid points")->capture_default_str();
  auto* converge = app.add_subcommand("converge", "KS distance to the limit law");
  converge->add_option("--n-list", n_list, "times")->delimiter(',');
  auto* oracle = app.add_subcommand("oracle", "enumeration vs closed forms");
  oracle->add_option("--n-cap", n_cap, "largest time")->capture_default_str();

  std::vector<std::string> argv_storage{"qwalk"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_storage) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitParse;
  }

  RunConfig config;
  try {
    if (!coin_preset.empty()) config.coin = preset_coin(coin_preset);
    if (!coin_text.empty()) config.coin = parse_coin(coin_text, coin_tol);
    if (!qubit_preset.empty()) config.qubit = preset_qubit(qubit_preset);
    if (!qubit_text.empty()) config.qubit = parse_qubit(qubit_text);
    config.format = format_text == "json" ? Format::Json : Format::Csv;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitParse;
  }

  Table table;
  try {
    if (dist->parsed()) {
      table = cmd_dist(config, n);
    } else if (charfn->parsed()) {
      table = cmd_charfn(config, n, xi_list.empty() ? default_xi_grid(xi_points) : xi_list);
    } else if (moments->parsed()) {
      table = cmd_moments(config, n, m_max);
    } else if (symmetry->parsed()) {
      table = cmd_symmetry(config, n_max);
    } else if (limit->parsed()) {
      table = cmd_limit(config, grid);
    } else if (converge->parsed()) {
      table = cmd_converge(config, n_list);
    } else {
      table = cmd_oracle(config, n_cap);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.kind() == ErrorKind::SelfCheckFailed ? kExitSelfCheck : kExitParse;
  }

  out << (config.format == Format::Json ? to_json(table) : to_csv(table));
  if (!table.self_check_ok) {
    err << "self-check failed\n";
    return kExitSelfCheck;
  }
  return kExitOk;
}

}  // namespace qwalk::cli
