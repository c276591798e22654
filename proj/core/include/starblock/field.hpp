#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace starblock::perm {

class FieldError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// GF(q), q = r^k. Elements are indices 0..q-1 encoding the coordinate vector
// (c_0, ..., c_{k-1}) over GF(r) as sum c_i r^i, i.e. the residue class of
// c_0 + c_1 x + ... modulo the defining polynomial. 0 and 1 are the field's
// zero and one.
class Field {
 public:
  using Elem = std::uint32_t;

  // Uses the built-in defining polynomial (q <= 32) or residues when q is prime.
  explicit Field(std::uint32_t q);

  // Monic modulus over GF(r), coefficients from constant term upwards.
  Field(std::uint32_t r, std::vector<std::uint32_t> modulus);

  std::uint32_t size() const { return q_; }
  std::uint32_t characteristic() const { return r_; }
  unsigned degree() const { return k_; }
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem mul(Elem a, Elem b) const;
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::uint64_t e) const;

  // Generator of the multiplicative group (the smallest index that works).
  Elem primitive() const { return exp_[1]; }
  Elem from_int(std::int64_t n) const;
  bool is_square(Elem a) const;

  std::vector<std::uint32_t> coords(Elem a) const;
  Elem from_coords(const std::vector<std::uint32_t>& c) const;

 private:
  void build();
  Elem poly_mul(Elem a, Elem b) const;

  std::uint32_t q_ = 0;
  std::uint32_t r_ = 0;
  unsigned k_ = 0;
  std::vector<std::uint32_t> modulus_;
  std::vector<Elem> exp_;          // exp_[i] = g^i, i in [0, q-1)
  std::vector<std::uint32_t> log_;  // log_[exp_[i]] = i; log_[0] unused
};

// Built-in defining polynomial for q = r^k <= 32, k >= 2.
std::vector<std::uint32_t> default_modulus(std::uint32_t q);

}  // namespace starblock::perm
