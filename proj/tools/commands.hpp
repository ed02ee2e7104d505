#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace cohere::cli {

enum ExitCode : int {
  kOk = 0,
  kInvalidArgs = 2,
  kParseError = 3,
  kInvalidState = 4,
  kInvalidBasis = 5,
  kSuiteFailed = 6,
  kWrongDimension = 7,
  kComputeError = 8,
};

inline constexpr std::uint64_t kDefaultSeed = 42;

/// --seed if given, else COHERE_SEED if set and numeric, else 42.
std::uint64_t resolve_seed(std::optional<std::uint64_t> flag);

struct ComputeArgs {
  std::string state_path;
  std::optional<std::string> basis_path;
  std::string measure = "all";    // ed | mod-k | mod-f | all
  std::string method = "closed";  // closed | variational
  std::uint64_t seed = kDefaultSeed;
};

struct VerifyArgs {
  std::string suite = "all";
  std::vector<int> dims{2, 3, 4};
  std::optional<int> trials;
  std::uint64_t seed = kDefaultSeed;
  std::optional<double> tol;
  int grid = 101;
  std::optional<std::string> out_path;
};

struct FringeArgs {
  std::string state_path;
  int samples = 360;
  std::optional<std::string> out_path;
};

struct PrboxArgs {
  int grid = 101;
  std::optional<std::string> out_path;
};

struct EntropyArgs {
  std::string state_path;
  std::uint64_t seed = kDefaultSeed;
};

int cmd_compute(const ComputeArgs& args, std::ostream& out, std::ostream& err);
int cmd_verify(const VerifyArgs& args, std::ostream& out, std::ostream& err);
int cmd_fringe(const FringeArgs& args, std::ostream& out, std::ostream& err);
int cmd_prbox(const PrboxArgs& args, std::ostream& out, std::ostream& err);
int cmd_entropy(const EntropyArgs& args, std::ostream& out, std::ostream& err);

/// Parses argv and dispatches to the verbs above.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Shortest representation that parses back to the same double.
std::string format_shortest(double v);

}  // namespace cohere::cli
