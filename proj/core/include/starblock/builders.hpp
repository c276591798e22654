#pragma once

#include <optional>
#include <string>

#include "starblock/catalog.hpp"
#include "starblock/permgroup.hpp"

namespace starblock::perm {

class BuildError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A permutation representation together with the catalog group it realizes.
// Construction asserts that the chain order equals the catalog order.
struct Built {
  PermGroup group;
  std::optional<catalog::GroupId> id;
  std::string name;
};

Built alternating(unsigned n);
Built symmetric(unsigned n);
Built cyclic_regular(unsigned n);

// Moebius action on the q + 1 points of the projective line; point q is infinity.
Built psl2_action(std::uint32_t q);
Built pgl2_action(std::uint32_t q);

// GL and SL act on the nonzero vectors of the natural module (faithful);
// SU (n = 3) and Sp (n even) act on its projective points, realizing PSU and PSp.
// SO (n and q odd) acts on the singular projective points of a split quadratic form.
enum class MatrixFamily { GL, SL, SU, Sp, SO };
Built matrix_action(MatrixFamily family, unsigned n, std::uint32_t q);

// Builder for a catalog group when one exists; the group is normalized first.
std::optional<Built> build_for(const catalog::GroupId& g);

}  // namespace starblock::perm
