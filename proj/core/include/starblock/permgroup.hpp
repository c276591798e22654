#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "starblock/perm.hpp"

namespace starblock::perm {

using arith::Factored;

inline constexpr std::uint64_t kDefaultSeed = 20240607;

struct Budget {
  std::uint64_t element_cap = 1'000'000;  // full element enumeration
  std::uint64_t orbit_cap = 10'000'000;   // conjugacy orbits and conjugate sets
  std::uint64_t random_tries = 20'000;
  std::uint64_t seed = kDefaultSeed;
};

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Search { Found, Absent, Undecided };

struct PPartSearch {
  Search outcome = Search::Undecided;
  std::optional<Perm> element;
  Natural p_part = 1;
};

class PermGroup {
 public:
  // Throws PermError on empty or mismatched generators and on the trivial group.
  PermGroup(std::size_t degree, std::vector<Perm> generators);

  std::size_t degree() const { return degree_; }
  const std::vector<Perm>& generators() const { return gens_; }

  const Factored& order() const;
  bool contains(const Perm& x) const;
  const std::vector<Point>& base() const;
  std::vector<std::size_t> transversal_sizes() const;

  // Uniform element drawn through the stabilizer chain.
  Perm random_element(std::mt19937_64& rng) const;

  // Visits elements until visit returns false; BudgetExceeded when |G| exceeds the cap.
  void for_each_element(const std::function<bool(const Perm&)>& visit, std::uint64_t cap) const;

  // Element of order |G|_p if one exists; p must divide |G|.
  PPartSearch element_of_full_p_part(const Natural& p, const Budget& budget = {}) const;

  Natural class_size(const Perm& x, const Budget& budget = {}) const;
  Factored centralizer_order(const Perm& x, const Budget& budget = {}) const;
  // Number of conjugates of the cyclic subgroup <x>.
  Natural cyclic_subgroup_conjugates(const Perm& x, const Budget& budget = {}) const;
  Factored cyclic_subgroup_normalizer_order(const Perm& x, const Budget& budget = {}) const;
  unsigned involution_class_count(const Budget& budget = {}) const;

 private:
  struct Chain;
  const Chain& chain() const;
  std::vector<Point> base_image(const Perm& x) const;
  Perm from_base_image(const std::vector<Point>& image) const;
  std::vector<Point> min_generator_key(const Perm& x) const;

  std::size_t degree_;
  std::vector<Perm> gens_;
  struct Lazy;
  std::shared_ptr<Lazy> lazy_;
};

}  // namespace starblock::perm
