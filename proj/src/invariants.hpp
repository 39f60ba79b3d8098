#pragma once

#include "modular.hpp"

#include <string>
#include <vector>

namespace vok {

// Modular-invariant candidates of L_{sl9}(3,0), indexed over C_{9,3} in the
// ModularData label order.  Family names follow the classification table:
// A, D1, D3, D9, E, Eprime, Eprimeprime, optionally conjugated (prefix C).
enum class InvariantFamily { A, D1, D3, D9, E, Eprime, Eprimeprime };

std::optional<InvariantFamily> parse_family(const std::string& name);
std::string family_name(InvariantFamily f, bool conjugated);

using IntMatrix = std::vector<std::vector<long long>>;

IntMatrix build_invariant(InvariantFamily f, bool conjugated, const ModularData& a83);

struct InvariantReport {
  std::string family;
  bool nonneg = false;
  bool vacuum_one = false;       // X_00 == 1
  double s_residual = 0;         // ||XS - SX||_max
  double t_residual = 0;         // ||XT - TX||_max
  bool commutes_S = false;
  bool commutes_T = false;
  bool physical = false;         // X_ij != 0 -> X_ii != 0 and X_jj != 0
  std::vector<int> vacuum_row_support;  // label indices with X_0b != 0
};

InvariantReport check_invariant(const IntMatrix& X, const ModularData& md,
                                double tol, const std::string& name);

}  // namespace vok
