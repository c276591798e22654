#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "starblock/arith.hpp"

namespace starblock::catalog {

using arith::Factored;
using arith::Natural;

enum class Family {
  Cyclic,
  Alternating,
  Symmetric,
  GL,
  SL,
  PSL,
  Sp,
  PSp,
  GU,
  SU,
  PSU,
  SO_odd,
  GO_odd,
  Omega_odd,
  GO_even,
  SO_even,
  Omega_even,
  POmega_even,
  CSO_even,
  E6,
  twistedE6,
  E7,
  E8,
  F4,
  twistedF4,
  TitsGroup,
  G2,
  twistedG2,
  threeD4,
  Suzuki,
  Sporadic,
};

inline constexpr Family kAllFamilies[] = {
    Family::Cyclic,     Family::Alternating, Family::Symmetric, Family::GL,
    Family::SL,         Family::PSL,         Family::Sp,        Family::PSp,
    Family::GU,         Family::SU,          Family::PSU,       Family::SO_odd,
    Family::GO_odd,     Family::Omega_odd,   Family::GO_even,   Family::SO_even,
    Family::Omega_even, Family::POmega_even, Family::CSO_even,  Family::E6,
    Family::twistedE6,  Family::E7,          Family::E8,        Family::F4,
    Family::twistedF4,  Family::TitsGroup,   Family::G2,        Family::twistedG2,
    Family::threeD4,    Family::Suzuki,      Family::Sporadic,
};

enum class Sign { Plus, Minus };

// Parameter conventions:
//  n      degree for Cyclic/Alternating/Symmetric/linear/unitary families,
//         half dimension m for Sp/PSp and all orthogonal families, 0 otherwise.
//  q      field size; for unitary families the field has q^2 elements;
//         for twistedG2 it is the field size 3^(2k+1).
//  twist  k with q = 2^(2k+1) (Suzuki, twistedF4) or q = 3^(2k+1) (twistedG2).
struct GroupId {
  Family family = Family::Cyclic;
  unsigned n = 0;
  Natural q = 0;
  std::optional<Sign> sign;
  std::string sporadic;
  unsigned twist = 0;
  bool derived = false;  // G2(2)'

  friend bool operator==(const GroupId&, const GroupId&) = default;
};

// Stable ordering: family enum order, then parameters.
bool operator<(const GroupId& a, const GroupId& b);

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, std::size_t pos)
      : std::runtime_error(msg + " at position " + std::to_string(pos)), position(pos) {}
  std::size_t position;
};

class InvalidGroup : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

GroupId parse_group(std::string_view text);
std::string to_string(const GroupId& g);
std::string family_name(Family f);

// Throws InvalidGroup on constraint violations (including the trivial group).
void validate(const GroupId& g);

// Convenience constructors; these validate.
GroupId cyclic(unsigned n);
GroupId alternating(unsigned n);
GroupId symmetric(unsigned n);
GroupId linear(Family f, unsigned n, const Natural& q);
GroupId orthogonal_even(Family f, Sign s, unsigned m, const Natural& q);
GroupId sporadic(const std::string& name);

Factored order(const GroupId& g);

// |G| without factoring; cheap enough for enumeration bounds.
Natural order_value(const GroupId& g);

// Cyclotomic data of a Lie-type group: multiplicities of Phi_k(q) in the
// order polynomial before central divisors. Absent for non-Lie families and
// for Suzuki/Ree groups, whose tori are not indexed by Phi_k alone.
struct CyclotomicProfile {
  Natural q;
  std::map<unsigned, unsigned> phi;

  unsigned multiplicity(unsigned k) const {
    auto it = phi.find(k);
    return it == phi.end() ? 0 : it->second;
  }
};
std::optional<CyclotomicProfile> cyclotomic_profile(const GroupId& g);

// Phi_k(q) as an integer.
Natural cyclotomic_value(unsigned k, const Natural& q);

// Characteristic of the defining field, when the group is of Lie type.
std::optional<Natural> characteristic(const GroupId& g);

// Suzuki: r = 2^(k+1). Ree: (Q, R) = (3^(2k+1), 3^(k+1)).
Natural suzuki_r(const GroupId& g);
std::pair<Natural, Natural> ree_qr(const GroupId& g);

struct Rewrite {
  std::string rule_id;
  GroupId from;
  GroupId to;
};

struct Normalized {
  GroupId canonical;
  std::vector<Rewrite> steps;
};

Normalized normalize(const GroupId& g);

enum class Simplicity { Simple, NotSimple, SimpleExceptParams };

struct SimplicityNote {
  Simplicity status = Simplicity::Simple;
  std::vector<std::string> exceptions;
  std::string reason;
};

SimplicityNote simplicity_note(const GroupId& g);
SimplicityNote simplicity_note(Family f);
bool is_simple(const GroupId& g);

// Known solvability for catalog members.
bool is_solvable(const GroupId& g);

struct SporadicEntry {
  std::string name;
  std::vector<arith::PrimePower> factors;
  std::string decimal;
};
const std::vector<SporadicEntry>& sporadic_table();

}  // namespace starblock::catalog
