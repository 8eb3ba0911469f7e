#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace rankstab::cli {

enum class Command { Barcode, Bottleneck, Rank, MatchDist, VerifyExternal, VerifyInternal };
enum class Format { Json, Csv };

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;

/// Environment variable holding the default line grid, e.g. "16x8".
inline constexpr const char* kGridEnv = "RANKSTAB_GRID";

struct RunConfig {
  Command command = Command::Barcode;
  std::vector<std::string> inputs;
  /// Lines as "m1,...,mn:b1,...,bn"; canonicalized after parsing.
  std::optional<std::string> line;
  std::optional<std::string> other_line;
  std::vector<std::string> extra_lines;
  std::optional<std::string> u;
  std::optional<std::string> v;
  std::optional<std::size_t> degree;
  /// "<directions>x<offsets>"; falls back to $RANKSTAB_GRID, then 16x8.
  std::optional<std::string> grid;
  std::optional<std::string> construction;
  std::optional<double> epsilon;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> write_partner;
  std::optional<std::string> output;
  Format format = Format::Json;
};

struct RunResult {
  int exit_code = kExitOk;
  /// Serialized result; also written to `RunConfig::output` when set.
  std::string output;
  std::string diagnostics;
};

/// Executes one subcommand. Never throws: input and usage problems map to
/// exit code 2 with a diagnostic naming the file and line.
RunResult run(const RunConfig& config);

/// Parses argv into a RunConfig, runs it and writes to the given streams.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace rankstab::cli
