#pragma once

#include <cmath>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "qwalk/coin.hpp"

namespace qwalk::cli {

// Exit-code contract.
inline constexpr int kExitOk = 0;
inline constexpr int kExitParse = 2;
inline constexpr int kExitSelfCheck = 3;

enum class Format { Csv, Json };

struct RunConfig {
  Coin coin = Coin::hadamard();
  Qubit qubit = make_qubit(1.0 / std::sqrt(2.0), cplx(0.0, 1.0 / std::sqrt(2.0)));
  Format format = Format::Csv;
};

// Presets: coins "hadamard", "identity" (b = 0), "flip" (a = 0); qubits
// "symmetric" = (1, i)/sqrt(2), "left" = (1, 0), "right" = (0, 1).
Coin preset_coin(const std::string& name);
Qubit preset_qubit(const std::string& name);

// "re,im,re,im,re,im,re,im" in row-major a, b, c, d order, validated within tol.
Coin parse_coin(const std::string& text, double tol);

// "re,im,re,im"; a nonzero vector is rescaled to unit norm.
Qubit parse_qubit(const std::string& text);

using Cell = std::variant<std::monostate, std::int64_t, double, bool, std::string>;

struct Table {
  std::string command;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  std::vector<std::pair<std::string, Cell>> summary;
  bool self_check_ok = true;
};

// Header row, then one line per row; summary entries become constant
// trailing columns. Doubles use 17 significant digits.
std::string to_csv(const Table& table);

// {"command", "columns", "rows", "summary", "self_check"}.
std::string to_json(const Table& table);

Table cmd_dist(const RunConfig& config, int n);
Table cmd_charfn(const RunConfig& config, int n, const std::vector<double>& xi_grid);
Table cmd_moments(const RunConfig& config, int n, int m_max);
Table cmd_symmetry(const RunConfig& config, int n_max);
Table cmd_limit(const RunConfig& config, int grid);
Table cmd_converge(const RunConfig& config, const std::vector<int>& n_list);
Table cmd_oracle(const RunConfig& config, int n_cap);

// Full command-line entry point; returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qwalk::cli
