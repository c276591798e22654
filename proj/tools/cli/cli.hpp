#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "starblock/classifier.hpp"
#include "starblock/oracle.hpp"

namespace starblock::cli {

enum ExitCode : int {
  kInXp = 0,
  kNotInXp = 1,
  kSylowNotCyclic = 2,  // also p not dividing |G|
  kOutOfScope = 3,
  kConflict = 4,
  kDisagreement = 5,
  kUndecided = 6,
  kUsage = 64,
  kDataError = 65,
  kNoInput = 66,
};

enum class Output { Text, Json };

struct CliConfig {
  std::string data_dir;
  std::uint64_t element_cap = 1'000'000;
  std::uint64_t orbit_cap = 10'000'000;
  std::uint64_t seed = perm::kDefaultSeed;
  Output output = Output::Text;
};

// Environment variable overriding the generator-file directory.
inline constexpr const char* kDataDirEnv = "STARBLOCK_DATA_DIR";

std::string default_data_dir();

int exit_code(classify::Status s);
int exit_code(const oracle::CrossCheckReport& r);

// Runs one command line (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace starblock::cli
