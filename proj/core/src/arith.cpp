#include "starblock/arith.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace starblock::arith {
namespace {

constexpr std::uint64_t kTrialLimit = 1'000'000;
constexpr unsigned kBases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

__extension__ typedef unsigned __int128 u128;

std::uint64_t mulmod64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t powmod64(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = mulmod64(r, b, m);
    b = mulmod64(b, b, m);
    e >>= 1;
  }
  return r;
}

std::uint64_t gcd64(std::uint64_t a, std::uint64_t b) {
  while (b) {
    a %= b;
    std::swap(a, b);
  }
  return a;
}

bool fits64(const Natural& n) { return msb(n) < 64; }

const std::vector<std::uint32_t>& small_primes() {
  static const std::vector<std::uint32_t> primes = [] {
    std::vector<bool> sieve(kTrialLimit + 1, true);
    std::vector<std::uint32_t> out;
    for (std::uint64_t i = 2; i <= kTrialLimit; ++i) {
      if (!sieve[i]) continue;
      out.push_back(static_cast<std::uint32_t>(i));
      for (std::uint64_t j = i * i; j <= kTrialLimit; j += i) sieve[j] = false;
    }
    return out;
  }();
  return primes;
}

// Brent's variant of Pollard rho on 64-bit n (odd composite).
std::uint64_t rho64(std::uint64_t n, std::uint64_t& iterations, std::uint64_t limit) {
  for (std::uint64_t c = 1;; ++c) {
    std::uint64_t y = 2, x = 2, g = 1, q = 1, ys = 2;
    std::uint64_t r = 1;
    const std::uint64_t m = 128;
    auto f = [&](std::uint64_t v) { return (mulmod64(v, v, n) + c) % n; };
    do {
      x = y;
      for (std::uint64_t i = 0; i < r; ++i) y = f(y);
      std::uint64_t k = 0;
      do {
        ys = y;
        for (std::uint64_t i = 0; i < std::min(m, r - k); ++i) {
          y = f(y);
          q = mulmod64(q, x > y ? x - y : y - x, n);
        }
        g = gcd64(q, n);
        k += m;
        iterations += m;
        if (iterations > limit) {
          throw FactorizationBudgetExceeded("factorization budget exceeded");
        }
      } while (k < r && g == 1);
      r <<= 1;
    } while (g == 1);
    if (g == n) {
      do {
        ys = f(ys);
        g = gcd64(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

Natural rho_big(const Natural& n, std::uint64_t& iterations, std::uint64_t limit) {
  for (unsigned c = 1;; ++c) {
    Natural y = 2, x = 2, g = 1, q = 1, ys = 2;
    std::uint64_t r = 1;
    const std::uint64_t m = 128;
    auto f = [&](const Natural& v) { return Natural((v * v + c) % n); };
    do {
      x = y;
      for (std::uint64_t i = 0; i < r; ++i) y = f(y);
      std::uint64_t k = 0;
      do {
        ys = y;
        for (std::uint64_t i = 0; i < std::min(m, r - k); ++i) {
          y = f(y);
          Natural diff = x > y ? Natural(x - y) : Natural(y - x);
          q = (q * diff) % n;
        }
        g = gcd(q, n);
        k += m;
        iterations += m;
        if (iterations > limit) {
          throw FactorizationBudgetExceeded("factorization budget exceeded");
        }
      } while (k < r && g == 1);
      r <<= 1;
    } while (g == 1);
    if (g == n) {
      do {
        ys = f(ys);
        g = gcd(x > ys ? Natural(x - ys) : Natural(ys - x), n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void split_into(const Natural& n, std::map<Natural, unsigned>& out,
                std::uint64_t& iterations, const FactorBudget& budget) {
  if (n == 1) return;
  if (is_prime(n)) {
    ++out[n];
    return;
  }
  Natural d;
  if (fits64(n)) {
    d = rho64(static_cast<std::uint64_t>(n), iterations, budget.max_rho_iterations);
  } else {
    d = rho_big(n, iterations, budget.max_rho_iterations);
  }
  split_into(d, out, iterations, budget);
  split_into(n / d, out, iterations, budget);
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (unsigned b : kBases) {
    if (n % b == 0) return n == b;
  }
  std::uint64_t d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (unsigned b : kBases) {
    std::uint64_t x = powmod64(b, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned r = 1; r < s; ++r) {
      x = mulmod64(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

bool is_prime(const Natural& n) {
  if (n < 2) return false;
  if (fits64(n)) return is_prime_u64(static_cast<std::uint64_t>(n));
  for (unsigned b : kBases) {
    if (n % b == 0) return false;
  }
  Natural d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  const Natural nm1 = n - 1;
  for (unsigned b : kBases) {
    Natural x = powmod(b, d, n);
    if (x == 1 || x == nm1) continue;
    bool composite = true;
    for (unsigned r = 1; r < s; ++r) {
      x = (x * x) % n;
      if (x == nm1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

Natural powmod(Natural base, Natural exp, const Natural& mod) {
  return boost::multiprecision::powm(base, exp, mod);
}

Natural gcd(const Natural& a, const Natural& b) { return boost::multiprecision::gcd(a, b); }

Natural ipow(const Natural& base, unsigned k) { return boost::multiprecision::pow(base, k); }

Factored factorize(const Natural& n, const FactorBudget& budget) {
  if (n < 1) throw ArithError("factorize: input must be at least 1");
  if (msb(n) + 1 > budget.max_bits) {
    throw FactorizationBudgetExceeded("factorization budget exceeded");
  }
  std::map<Natural, unsigned> found;
  Natural rest = n;
  for (std::uint32_t p : small_primes()) {
    if (Natural(p) * p > rest) break;
    while (rest % p == 0) {
      rest /= p;
      ++found[p];
    }
  }
  std::uint64_t iterations = 0;
  if (rest > 1) {
    if (rest <= Natural(kTrialLimit) * kTrialLimit || is_prime(rest)) {
      ++found[rest];
    } else {
      split_into(rest, found, iterations, budget);
    }
  }
  std::vector<PrimePower> factors;
  for (auto& [p, k] : found) factors.push_back({p, k});
  return Factored::from_factors(std::move(factors));
}

Factored Factored::from_factors(std::vector<PrimePower> factors) {
  std::map<Natural, unsigned> merged;
  for (auto& f : factors) {
    if (f.exponent == 0) continue;
    if (!is_prime(f.prime)) {
      throw ArithError("Factored: " + to_decimal(f.prime) + " is not prime");
    }
    merged[f.prime] += f.exponent;
  }
  Factored out;
  for (auto& [p, k] : merged) out.factors_.push_back({p, k});
  out.recompute_value();
  return out;
}

Factored Factored::prime_power(const Natural& p, unsigned k) {
  return from_factors({{p, k}});
}

void Factored::recompute_value() {
  value_ = 1;
  for (const auto& f : factors_) value_ *= ipow(f.prime, f.exponent);
}

unsigned Factored::valuation(const Natural& p) const {
  for (const auto& f : factors_) {
    if (f.prime == p) return f.exponent;
  }
  return 0;
}

bool Factored::divides(const Factored& other) const {
  for (const auto& f : factors_) {
    if (other.valuation(f.prime) < f.exponent) return false;
  }
  return true;
}

Factored Factored::operator*(const Factored& rhs) const {
  Factored out = *this;
  out *= rhs;
  return out;
}

Factored& Factored::operator*=(const Factored& rhs) {
  std::vector<PrimePower> merged;
  merged.reserve(factors_.size() + rhs.factors_.size());
  auto a = factors_.begin();
  auto b = rhs.factors_.begin();
  while (a != factors_.end() || b != rhs.factors_.end()) {
    if (b == rhs.factors_.end() || (a != factors_.end() && a->prime < b->prime)) {
      merged.push_back(*a++);
    } else if (a == factors_.end() || b->prime < a->prime) {
      merged.push_back(*b++);
    } else {
      merged.push_back({a->prime, a->exponent + b->exponent});
      ++a;
      ++b;
    }
  }
  factors_ = std::move(merged);
  value_ *= rhs.value_;
  return *this;
}

Factored Factored::divided_by(const Factored& rhs) const {
  if (!rhs.divides(*this)) {
    throw ArithError("divided_by: " + rhs.to_string() + " does not divide " + to_string());
  }
  Factored out;
  for (const auto& f : factors_) {
    unsigned k = f.exponent - rhs.valuation(f.prime);
    if (k) out.factors_.push_back({f.prime, k});
  }
  out.value_ = value_ / rhs.value_;
  return out;
}

Factored Factored::pow(unsigned k) const {
  Factored out;
  if (k == 0) return out;
  out.factors_ = factors_;
  for (auto& f : out.factors_) f.exponent *= k;
  out.recompute_value();
  return out;
}

std::string Factored::to_string() const {
  if (factors_.empty()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const auto& f : factors_) {
    if (!first) os << " * ";
    first = false;
    os << f.prime;
    if (f.exponent > 1) os << '^' << f.exponent;
  }
  return os.str();
}

std::uint64_t mult_order(const Natural& q, const Natural& p) {
  if (p == 2) throw ArithError("mult_order: p must be an odd prime");
  if (!is_prime(p)) throw ArithError("mult_order: " + to_decimal(p) + " is not prime");
  if (q % p == 0) throw ArithError("order undefined: p divides q");
  if (!fits64(p)) throw ArithError("mult_order: p too large");
  const std::uint64_t pp = static_cast<std::uint64_t>(p);
  const std::uint64_t qq = static_cast<std::uint64_t>(q % p);
  std::uint64_t d = pp - 1;
  const Factored phi = factorize(Natural(pp - 1));
  for (const auto& f : phi.factors()) {
    const std::uint64_t r = static_cast<std::uint64_t>(f.prime);
    for (unsigned i = 0; i < f.exponent && d % r == 0; ++i) {
      if (powmod64(qq, d / r, pp) != 1) break;
      d /= r;
    }
  }
  return d;
}

std::pair<Natural, unsigned> p_part(const Factored& n, const Natural& p) {
  unsigned a = n.valuation(p);
  return {ipow(p, a), a};
}

std::optional<std::pair<Natural, unsigned>> prime_power_split(const Natural& q) {
  if (q < 2) return std::nullopt;
  Factored f = factorize(q);
  if (f.factors().size() != 1) return std::nullopt;
  return std::make_pair(f.factors()[0].prime, f.factors()[0].exponent);
}

std::string to_decimal(const Natural& n) { return n.str(); }

Natural parse_natural(const std::string& text) {
  if (text.empty() ||
      !std::all_of(text.begin(), text.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    throw ArithError("not a decimal natural: '" + text + "'");
  }
  return Natural(text);
}

}  // namespace starblock::arith
