#pragma once

#include <json.hpp>

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace gu3::cli {

inline constexpr int kSchemaVersion = 1;

enum ExitCode : int {
  kOk = 0,
  kInternal = 1,
  kValidation = 2,
  kResource = 3,
  kVerification = 4,
};

/// Parsed flags of one invocation. "auto" fields are resolved by validate(), after
/// which the struct is what gets echoed into the output manifest.
struct RunConfig {
  std::string subcommand;
  std::int64_t p = 0;
  std::int64_t q = 0;
  std::string variant = "auto";
  int l_max = 3;
  std::string mode = "auto";
  std::optional<double> tol;
  std::uint64_t seed = 1;
  std::size_t cap = 10'000'000;
  std::size_t samples = 1000;
  int syllables = 10;
  int k = 6;
  int basis = 40;
  bool bfs = false;
  std::string in_path;
  std::string out_path;
  std::string edges_path;
  std::string vertices_path;
  unsigned threads = 0;  // 0: available parallelism; not part of the echoed config

  /// Resolves defaults and checks ranges; throws ValidationError.
  void validate();
  nlohmann::json to_json() const;
};

/// Runs one invocation. args excludes the program name. The navigate subcommand reads
/// its matrix from `in` unless --in is given; results go to `out` unless --out is given.
int dispatch(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

/// main() adapter over the process streams.
int run_main(int argc, char** argv);

}  // namespace gu3::cli
