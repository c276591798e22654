#pragma once

#include <optional>
#include <string>
#include <vector>

#include "starblock/classifier.hpp"
#include "starblock/permgroup.hpp"

namespace starblock::oracle {

using arith::Natural;
using catalog::GroupId;
using perm::Budget;
using perm::PermGroup;

class OracleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Tri { Yes, No, Undecided };
std::string tri_name(Tri t);
Tri parse_tri(const std::string& s);

struct EdgeMeasurement {
  Natural e;
  Natural m;
  Natural sylow_order;
  Natural normalizer_order;
  Natural centralizer_order;
  Natural sylow_count;  // |G : N_G(P)|
  perm::Perm generator;
};

// Throws OracleError when the Sylow subgroup is not (certified) cyclic and
// perm::BudgetExceeded when an orbit leaves the budget.
EdgeMeasurement measure_e_m(const PermGroup& G, const Natural& p, const Budget& budget = {});

enum class Check { Passed, VacuousPass, Failed, Undecided };
std::string check_name(Check c);

struct StarNecessary {
  Natural e;
  bool e_even = false;
  bool centralizer_odd = false;
  std::optional<unsigned> involution_classes;
  Check involutions = Check::Undecided;  // VacuousPass when |C_G(P)| is even

  bool passes() const { return e_even && (involutions == Check::Passed || involutions == Check::VacuousPass); }
};

StarNecessary check_star_necessary(const PermGroup& G, const Natural& p, const Budget& budget = {});

struct DivisibilityPair {
  std::string label;
  const PermGroup* normal;  // H
  const PermGroup* group;   // G
  Natural p;
};

struct DivisibilityResult {
  std::string label;
  Natural p;
  std::optional<Natural> e_normal;
  std::optional<Natural> e_group;
  bool divides = false;
  bool equal = false;
  std::string error;  // precondition violation or budget exhaustion
};

std::vector<DivisibilityResult> check_divisibility(const std::vector<DivisibilityPair>& pairs,
                                                   const Budget& budget = {});

struct Measured {
  Tri cyclic = Tri::Undecided;
  Natural sylow_order = 1;
  std::optional<Natural> e;
  std::optional<Natural> m;
  std::optional<unsigned> involution_classes;
  std::optional<bool> centralizer_P_odd;

  friend bool operator==(const Measured&, const Measured&) = default;
};

struct CrossCheckReport {
  GroupId group;
  Natural p;
  Measured measured;
  classify::Verdict claimed;
  std::vector<std::string> agreements;
  std::vector<std::string> disagreements;
  std::vector<std::string> undecided;

  friend bool operator==(const CrossCheckReport&, const CrossCheckReport&) = default;
};

// Throws OracleError when rep's order differs from the catalog order of g.
CrossCheckReport crosscheck(const GroupId& g, const PermGroup& rep, const Natural& p,
                            const Budget& budget = {});

}  // namespace starblock::oracle
