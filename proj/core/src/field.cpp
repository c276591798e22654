#include "starblock/field.hpp"

#include <string>

namespace starblock::perm {
namespace {

constexpr std::uint32_t kMaxFieldSize = 1u << 20;

struct TableEntry {
  std::uint32_t q;
  std::vector<std::uint32_t> modulus;
};

const std::vector<TableEntry>& modulus_table() {
  static const std::vector<TableEntry> table = {
      {4, {1, 1, 1}},          {8, {1, 1, 0, 1}},    {9, {2, 2, 1}},
      {16, {1, 1, 0, 0, 1}},   {25, {2, 4, 1}},      {27, {1, 2, 0, 1}},
      {32, {1, 0, 1, 0, 0, 1}},
  };
  return table;
}

bool is_small_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

}  // namespace

std::vector<std::uint32_t> default_modulus(std::uint32_t q) {
  for (const auto& e : modulus_table()) {
    if (e.q == q) return e.modulus;
  }
  throw FieldError("no built-in defining polynomial for GF(" + std::to_string(q) + ")");
}

Field::Field(std::uint32_t q) {
  if (q < 2 || q > kMaxFieldSize) throw FieldError("unsupported field size " + std::to_string(q));
  if (is_small_prime(q)) {
    r_ = q;
    modulus_ = {0, 1};
  } else {
    modulus_ = default_modulus(q);
    std::uint32_t r = 2;
    while (q % r) ++r;
    r_ = r;
  }
  build();
}

Field::Field(std::uint32_t r, std::vector<std::uint32_t> modulus) : r_(r), modulus_(std::move(modulus)) {
  if (!is_small_prime(r)) throw FieldError("characteristic " + std::to_string(r) + " is not prime");
  if (modulus_.size() < 2 || modulus_.back() != 1) throw FieldError("modulus must be monic of degree >= 1");
  for (auto c : modulus_) {
    if (c >= r) throw FieldError("modulus coefficient out of range");
  }
  build();
}

void Field::build() {
  k_ = static_cast<unsigned>(modulus_.size() - 1);
  std::uint64_t q = 1;
  for (unsigned i = 0; i < k_; ++i) {
    q *= r_;
    if (q > kMaxFieldSize) throw FieldError("field too large");
  }
  q_ = static_cast<std::uint32_t>(q);
  log_.assign(q_, 0);
  // A primitive element exists exactly when the quotient ring is a field.
  for (Elem g = 1; g < q_; ++g) {
    exp_.assign(1, 1);
    Elem x = g;
    while (x != 1 && exp_.size() < q_) {
      exp_.push_back(x);
      x = poly_mul(x, g);
    }
    if (x == 1 && exp_.size() == q_ - 1) {
      for (std::uint32_t i = 0; i < exp_.size(); ++i) log_[exp_[i]] = i;
      if (q_ == 2) exp_.push_back(1);  // keeps primitive() valid
      return;
    }
  }
  throw FieldError("modulus is not irreducible (no primitive element)");
}

std::vector<std::uint32_t> Field::coords(Elem a) const {
  std::vector<std::uint32_t> c(k_);
  for (unsigned i = 0; i < k_; ++i) {
    c[i] = a % r_;
    a /= r_;
  }
  return c;
}

Field::Elem Field::from_coords(const std::vector<std::uint32_t>& c) const {
  Elem out = 0;
  for (unsigned i = k_; i-- > 0;) out = out * r_ + (i < c.size() ? c[i] % r_ : 0);
  return out;
}

Field::Elem Field::poly_mul(Elem a, Elem b) const {
  const auto x = coords(a);
  const auto y = coords(b);
  std::vector<std::uint64_t> prod(2 * k_, 0);
  for (unsigned i = 0; i < k_; ++i) {
    for (unsigned j = 0; j < k_; ++j) prod[i + j] = (prod[i + j] + std::uint64_t(x[i]) * y[j]) % r_;
  }
  for (unsigned d = 2 * k_ - 1; d >= k_; --d) {
    const std::uint64_t c = prod[d];
    if (c == 0) continue;
    for (unsigned i = 0; i <= k_; ++i) {
      prod[d - k_ + i] = (prod[d - k_ + i] + (r_ - c) * modulus_[i]) % r_;
    }
  }
  std::vector<std::uint32_t> low(prod.begin(), prod.begin() + k_);
  return from_coords(low);
}

Field::Elem Field::add(Elem a, Elem b) const {
  if (k_ == 1) return (a + b) % r_;
  Elem out = 0, place = 1;
  while (a || b) {
    out += ((a % r_ + b % r_) % r_) * place;
    a /= r_;
    b /= r_;
    place *= r_;
  }
  return out;
}

Field::Elem Field::neg(Elem a) const {
  if (k_ == 1) return (r_ - a) % r_;
  Elem out = 0, place = 1;
  while (a) {
    out += ((r_ - a % r_) % r_) * place;
    a /= r_;
    place *= r_;
  }
  return out;
}

Field::Elem Field::sub(Elem a, Elem b) const { return add(a, neg(b)); }

Field::Elem Field::mul(Elem a, Elem b) const {
  if (a == 0 || b == 0) return 0;
  return exp_[(std::uint64_t(log_[a]) + log_[b]) % (q_ - 1)];
}

Field::Elem Field::inv(Elem a) const {
  if (a == 0) throw FieldError("inverse of zero");
  return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

Field::Elem Field::pow(Elem a, std::uint64_t e) const {
  if (e == 0) return 1;
  if (a == 0) return 0;
  return exp_[(std::uint64_t(log_[a]) * (e % (q_ - 1))) % (q_ - 1)];
}

Field::Elem Field::from_int(std::int64_t n) const {
  const std::int64_t r = r_;
  return static_cast<Elem>(((n % r) + r) % r);
}

bool Field::is_square(Elem a) const {
  if (a == 0 || r_ == 2) return true;
  return log_[a] % 2 == 0;
}

}  // namespace starblock::perm
