#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace starblock::classify {

struct Rule {
  std::string id;
  std::string anchor;  // verbatim statement the rule encodes
  std::string summary;
  std::string warning;  // attached to verdicts that cite the rule
};

// Immutable catalog of every rule a justification may cite.
const std::vector<Rule>& rule_catalog();

// Throws std::out_of_range for unknown ids.
const Rule& rule(std::string_view id);

}  // namespace starblock::classify
