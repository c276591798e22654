#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "starblock/catalog.hpp"

namespace starblock::classify {

using arith::Natural;
using catalog::GroupId;

enum class Status { InXp, NotInXp, SylowNotCyclic, PNotDividingOrder, OutOfScope, Conflict };
enum class Shape { Star, Line, Unknown };

std::string status_name(Status s);
std::string shape_name(Shape s);
Status parse_status(const std::string& s);
Shape parse_shape(const std::string& s);

struct Justification {
  std::string rule_id;
  std::string anchor;

  friend bool operator==(const Justification&, const Justification&) = default;
};

struct Verdict {
  Status status = Status::OutOfScope;
  std::optional<Natural> e;
  std::optional<Natural> m;
  Shape shape = Shape::Unknown;
  std::vector<Justification> justification;
  std::vector<std::string> warnings;

  const std::string& terminal_rule() const { return justification.back().rule_id; }

  friend bool operator==(const Verdict&, const Verdict&) = default;
};

class ClassifyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Cyclicity { Cyclic, NotCyclic, PNotDividing, Undetermined, OutOfScope };

struct SylowInfo {
  Cyclicity kind = Cyclicity::Undetermined;
  Natural order = 1;  // |P|
  unsigned exponent = 0;
  std::string rule_id;
};

// Decides whether a Sylow p-subgroup of the (normalized) group is cyclic.
SylowInfo sylow_cyclic(const GroupId& g, const Natural& p);

struct EdgeFormula {
  Natural e;
  Natural m;
  std::string rule_id;
};

// e and m where the classification pins e down exactly.
std::optional<EdgeFormula> edges_formula(const GroupId& g, const Natural& p);

Verdict in_Xp(const GroupId& g, const Natural& p);

// Throws ClassifyError when the verdict breaks a structural invariant.
void check_invariants(const GroupId& g, const Natural& p, const Verdict& v);

struct ObstructionReport {
  GroupId quotient;
  Natural p;
  Verdict verdict;
  bool obstructs = false;  // no group with this simple quotient lies in X_p
  std::string statement;
};

// Throws ClassifyError when the quotient is not simple non-abelian.
ObstructionReport theorem2_necessary(const GroupId& quotient, const Natural& p);

struct SweepSpec {
  std::set<catalog::Family> families;
  unsigned n_max = 10;
  Natural q_max = 32;
  unsigned exp_max = 2;  // twisted families: q = r^(2k+1), k <= exp_max
  Natural p_max = 100;
  Natural order_cap = Natural(1000000000000ULL);
  bool simple_only = false;
};

struct SweepRow {
  GroupId group;
  Natural p;
  Verdict verdict;
};

std::vector<SweepRow> sweep(const SweepSpec& spec);

}  // namespace starblock::classify
