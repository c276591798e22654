#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "starblock/arith.hpp"

namespace starblock::perm {

using arith::Natural;
using Point = std::uint32_t;

class PermError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Permutations act on the right: (a * b)(x) = b(a(x)), and x^g = g(x).
class Perm {
 public:
  Perm() = default;
  explicit Perm(std::vector<Point> images);

  static Perm identity(std::size_t degree);
  // Cycles are given on 0-based points.
  static Perm from_cycles(std::size_t degree, const std::vector<std::vector<Point>>& cycles);

  std::size_t degree() const { return images_.size(); }
  Point operator()(Point x) const { return images_[x]; }
  const std::vector<Point>& images() const { return images_; }

  bool is_identity() const;
  Perm inverse() const;
  Perm pow(std::int64_t k) const;
  Perm pow(const Natural& k) const;
  Natural order() const;
  std::vector<std::vector<Point>> cycles() const;  // nontrivial cycles only
  std::string to_string() const;

  // g^-1 * this * g
  Perm conjugate_by(const Perm& g) const;

  friend Perm operator*(const Perm& a, const Perm& b);
  friend bool operator==(const Perm&, const Perm&) = default;
  friend auto operator<=>(const Perm&, const Perm&) = default;

 private:
  struct Unchecked {};
  Perm(std::vector<Point> images, Unchecked) : images_(std::move(images)) {}

  std::vector<Point> images_;
};

}  // namespace starblock::perm
