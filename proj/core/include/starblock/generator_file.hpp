#pragma once

#include <optional>
#include <string>
#include <vector>

#include "starblock/permgroup.hpp"

namespace starblock::perm {

inline constexpr const char* kGeneratorFormat = "starblock-generators/1";

class GeneratorFileError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// JSON record: {"format": "starblock-generators/1", "name": ..., "degree": N,
// "expected_order": "<decimal>", "generators": [[1-based images], ...]}.
// "format", "name" and "expected_order" are optional.
struct GeneratorFile {
  std::string name;
  std::size_t degree = 0;
  std::vector<Perm> generators;  // 0-based
  std::optional<Natural> expected_order;
};

GeneratorFile parse_generator_file(const std::string& text);
std::string write_generator_file(const GeneratorFile& file);
GeneratorFile read_generator_file(const std::string& path);

// Reads the file and verifies expected_order against the stabilizer chain.
PermGroup load_generators(const std::string& path);

}  // namespace starblock::perm
