#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

namespace bimeasure::cli {

enum class Command { Decompose, Integrate, Pushforward, FindInvariant, Verify, Gen };

std::optional<Command> command_from_string(std::string_view s);
std::string_view to_string(Command c);

inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 2;
inline constexpr int kExitCheckFailed = 3;

struct RunConfig {
  Command command = Command::Verify;
  std::string input_path;   ///< empty or "-" reads stdin
  std::uint64_t seed = 0;
  double tol = 1e-9;
  std::size_t cases = 1000;
  std::string output_path;  ///< empty or "-" writes stdout
  std::string suite = "*";
  bool timings = false;     ///< verify: add wall times to the report

  // gen
  std::string kind;
  std::size_t atoms = 4;
  std::string knots;        ///< "x0:y0,x1:y1,..."; empty selects the tent map
};

/**
 * Executes one command. The JSON result goes to `out` (or the output file),
 * diagnostics to `err`. Returns 0 when every reported check passes, 2 for
 * malformed input and 3 when a check or internal invariant fails.
 */
int run(const RunConfig& config, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace bimeasure::cli
