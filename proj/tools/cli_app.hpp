#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace cgp::cli {

enum class Command { unitary, channel, protocol, sample, scaling, moments, scan, agp, fixtures };
enum class Format { json, csv };

inline constexpr int kExitOk = 0;
inline constexpr int kExitNumerical = 1;
inline constexpr int kExitInput = 2;

struct RunConfig {
  Command command = Command::unitary;
  std::optional<int> dim;
  std::optional<std::size_t> samples;
  std::uint64_t seed = 0;
  int bins = 100;
  int steps = 10;
  std::vector<int> dims;
  std::vector<double> spectrum;
  std::optional<std::string> input_path;
  std::optional<std::string> output_path;
  std::optional<std::string> dump_path;
  Format format = Format::json;
  unsigned threads = 0;
  bool monte_carlo = false;
  /// Built-in generator name (see fixtures::by_name).
  std::optional<std::string> fixture;
  /// 1-based row labels for the fourier-rowswap generator.
  std::optional<std::pair<int, int>> rowswap;
};

/// Executes a parsed configuration. Results go to `out`, diagnostics to `err`.
/// Returns 0 on success, 2 for invalid input, 1 for numerical failure.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv (CLI11) and calls run(). Parse errors return 2.
int run_command_line(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cgp::cli
