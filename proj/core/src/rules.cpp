#include "starblock/rules.hpp"

#include <map>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace starblock::classify {
namespace detail {
extern const char* const kRulesJson;
}

namespace {

struct Catalog {
  std::vector<Rule> rules;
  std::map<std::string, std::size_t, std::less<>> index;
};

const Catalog& catalog() {
  static const Catalog c = [] {
    Catalog out;
    const auto doc = nlohmann::json::parse(detail::kRulesJson);
    for (const auto& r : doc.at("rules")) {
      out.index.emplace(r.at("id").get<std::string>(), out.rules.size());
      out.rules.push_back({r.at("id"), r.at("anchor"), r.at("summary"), r.value("warning", "")});
    }
    return out;
  }();
  return c;
}

}  // namespace

const std::vector<Rule>& rule_catalog() { return catalog().rules; }

const Rule& rule(std::string_view id) {
  const auto& c = catalog();
  auto it = c.index.find(id);
  if (it == c.index.end()) throw std::out_of_range("unknown rule '" + std::string(id) + "'");
  return c.rules[it->second];
}

}  // namespace starblock::classify
