#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

namespace starcong::cli {

struct CommandConfig {
  enum class Command { Pattern, Codim, Verify, Greedy, Reduce, Split, Suite };
  enum class Format { Ascii, Json };

  Command command = Command::Verify;
  std::string spec_path;
  std::string matrix_path;
  double tol = 1e-9;       // rank tolerance
  std::uint64_t seed = 0;
  int trials = 1;
  int max_n = 4;
  double norm = -1.0;      // absolute ||E||_F target; < 0 means 1e-3 * ||A_can||_F
  Format format = Format::Ascii;
};

// Exit codes: 0 ok, 1 parse failure, 2 precondition violation,
// 3 numerical degeneracy, 4 check failed.
int run(const CommandConfig& config, std::ostream& out, std::ostream& err);

}  // namespace starcong::cli
