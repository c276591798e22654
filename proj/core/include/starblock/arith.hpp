#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace starblock::arith {

using Natural = boost::multiprecision::cpp_int;

class ArithError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class FactorizationBudgetExceeded : public ArithError {
 public:
  using ArithError::ArithError;
};

struct PrimePower {
  Natural prime;
  unsigned exponent = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// A natural number kept together with its prime factorization.
class Factored {
 public:
  Factored() : value_(1) {}

  // Builds from (prime, exponent) pairs in any order; merges duplicates.
  // Primality of the supplied bases is checked.
  static Factored from_factors(std::vector<PrimePower> factors);
  static Factored prime_power(const Natural& p, unsigned k);

  const Natural& value() const { return value_; }
  const std::vector<PrimePower>& factors() const { return factors_; }

  unsigned valuation(const Natural& p) const;
  bool divides(const Factored& other) const;

  Factored operator*(const Factored& rhs) const;
  Factored& operator*=(const Factored& rhs);
  // Exact division; throws ArithError when rhs does not divide *this.
  Factored divided_by(const Factored& rhs) const;
  Factored pow(unsigned k) const;

  // "2^6 * 5 * 7 * 13", or "1".
  std::string to_string() const;

  friend bool operator==(const Factored& a, const Factored& b) {
    return a.factors_ == b.factors_;
  }

 private:
  void recompute_value();

  Natural value_;
  std::vector<PrimePower> factors_;
};

struct FactorBudget {
  // Inputs wider than this are refused outright.
  unsigned max_bits = 512;
  // Total Pollard-Brent iterations across all cofactors.
  std::uint64_t max_rho_iterations = 50'000'000;
};

// Miller-Rabin with the first twelve prime bases. Deterministic below
// 3.3 * 10^24 and in particular for every 64-bit input.
bool is_prime(const Natural& n);
bool is_prime_u64(std::uint64_t n);

Factored factorize(const Natural& n, const FactorBudget& budget = {});

Natural powmod(Natural base, Natural exp, const Natural& mod);
Natural gcd(const Natural& a, const Natural& b);
Natural ipow(const Natural& base, unsigned k);

// Smallest d >= 1 with q^d = 1 mod p, for an odd prime p not dividing q.
std::uint64_t mult_order(const Natural& q, const Natural& p);

// (p^a, a) where p^a exactly divides n.
std::pair<Natural, unsigned> p_part(const Factored& n, const Natural& p);

// (r, k) with q = r^k and r prime, when q is a prime power.
std::optional<std::pair<Natural, unsigned>> prime_power_split(const Natural& q);

// Decimal rendering and parsing; parse throws ArithError on bad input.
std::string to_decimal(const Natural& n);
Natural parse_natural(const std::string& text);

}  // namespace starblock::arith
