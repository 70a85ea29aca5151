#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "hallpost/bounds.hpp"

namespace hallpost::cli {

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

enum class Spacing { Linear, Log };

/// A coupling sweep for one model (ratio and figure commands).
struct SweepSpec {
  Model model = Model::Calogero1D;
  int n = 5;
  std::optional<int> dim;
  double g_min = 0.0;
  double g_max = 20.0;
  int points = 81;
  Spacing spacing = Spacing::Linear;

  void validate() const;
  std::vector<double> grid() const;
};

/// Runs one command line (without the program name). Output goes to `out`
/// unless --out is given; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hallpost::cli
