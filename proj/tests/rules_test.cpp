#include <gtest/gtest.h>

#include <fstream>
#include <set>
#include <sstream>

#include "starblock/classifier.hpp"
#include "starblock/rules.hpp"

namespace {

using namespace starblock;

std::string read_all(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

TEST(RuleCatalog, IdsAreUniqueAndResolvable) {
  std::set<std::string> ids;
  for (const auto& r : classify::rule_catalog()) {
    EXPECT_TRUE(ids.insert(r.id).second) << r.id;
    EXPECT_FALSE(r.anchor.empty()) << r.id;
    EXPECT_FALSE(r.summary.empty()) << r.id;
    EXPECT_EQ(&classify::rule(r.id), &r);
  }
  EXPECT_THROW(classify::rule("no.such.rule"), std::out_of_range);
}

TEST(RuleCatalog, AnchorsAreVerbatimQuotes) {
  const std::string source = read_all(STARBLOCK_ANCHOR_SOURCE);
  if (source.empty()) GTEST_SKIP() << "anchor source not available at " << STARBLOCK_ANCHOR_SOURCE;
  for (const auto& r : classify::rule_catalog()) {
    EXPECT_NE(source.find(r.anchor), std::string::npos) << r.id << ": " << r.anchor;
  }
}

TEST(RuleCatalog, EveryCitedRuleExistsWithItsAnchor) {
  classify::SweepSpec spec;
  spec.families.insert(std::begin(catalog::kAllFamilies), std::end(catalog::kAllFamilies));
  spec.n_max = 8;
  spec.q_max = 64;
  spec.exp_max = 2;
  spec.p_max = 200;
  spec.order_cap = arith::ipow(10, 30);
  std::set<std::string> cited;
  for (const auto& row : classify::sweep(spec)) {
    ASSERT_FALSE(row.verdict.justification.empty());
    for (const auto& j : row.verdict.justification) {
      const auto& r = classify::rule(j.rule_id);
      EXPECT_EQ(j.anchor, r.anchor) << j.rule_id;
      cited.insert(j.rule_id);
    }
  }
  EXPECT_GT(cited.size(), 30u);
}

TEST(RuleCatalog, NormalizationStepsCiteKnownRules) {
  for (const char* text : {"Omega(3,7)", "PSp(4,2)", "PSU(2,5)", "POmega(-,4,3)", "POmega(+,6,2)",
                           "POmega(-,6,2)", "G2(2)'", "Sp(4,4)", "SL(3,2)"}) {
    for (const auto& step : catalog::normalize(catalog::parse_group(text)).steps) {
      EXPECT_NO_THROW(classify::rule(step.rule_id)) << text << " " << step.rule_id;
    }
  }
}

}  // namespace
