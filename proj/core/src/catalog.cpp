#include "starblock/catalog.hpp"

#include <algorithm>
#include <mutex>
#include <tuple>

namespace starblock::catalog {
namespace {

using arith::factorize;
using arith::gcd;
using arith::ipow;

bool is_even_orthogonal(Family f) {
  switch (f) {
    case Family::GO_even:
    case Family::SO_even:
    case Family::Omega_even:
    case Family::POmega_even:
    case Family::CSO_even:
      return true;
    default:
      return false;
  }
}

bool is_odd_orthogonal(Family f) {
  return f == Family::SO_odd || f == Family::GO_odd || f == Family::Omega_odd;
}

bool uses_q(Family f) {
  switch (f) {
    case Family::Cyclic:
    case Family::Alternating:
    case Family::Symmetric:
    case Family::TitsGroup:
    case Family::Sporadic:
      return false;
    default:
      return true;
  }
}

bool uses_n(Family f) {
  switch (f) {
    case Family::Cyclic:
    case Family::Alternating:
    case Family::Symmetric:
    case Family::GL:
    case Family::SL:
    case Family::PSL:
    case Family::Sp:
    case Family::PSp:
    case Family::GU:
    case Family::SU:
    case Family::PSU:
      return true;
    default:
      return is_odd_orthogonal(f) || is_even_orthogonal(f);
  }
}

int sign_value(Sign s) { return s == Sign::Plus ? 1 : -1; }

// Multiplicities of cyclotomic factors of an order polynomial.
class PhiBag {
 public:
  void q_minus_1(unsigned k) {
    for (unsigned j = 1; j <= k; ++j) {
      if (k % j == 0) ++phi_[j];
    }
  }
  void q_plus_1(unsigned k) {
    for (unsigned j = 1; j <= 2 * k; ++j) {
      if ((2 * k) % j == 0 && k % j != 0) ++phi_[j];
    }
  }
  void q_pow_minus_sign(unsigned k, int eps) {
    if (eps > 0) {
      q_minus_1(k);
    } else {
      q_plus_1(k);
    }
  }
  void add(unsigned k, unsigned mult = 1) { phi_[k] += mult; }
  const std::map<unsigned, unsigned>& map() const { return phi_; }

 private:
  std::map<unsigned, unsigned> phi_;
};

struct Formula {
  unsigned q_exp = 0;
  PhiBag phi;
  std::vector<Natural> atoms;
  Natural mult = 1;
  Natural div = 1;
};

Formula lie_formula(const GroupId& g) {
  Formula f;
  const Natural& q = g.q;
  const unsigned n = g.n;
  switch (g.family) {
    case Family::GL:
    case Family::SL:
    case Family::PSL:
      f.q_exp = n * (n - 1) / 2;
      for (unsigned i = g.family == Family::GL ? 1 : 2; i <= n; ++i) f.phi.q_minus_1(i);
      if (g.family == Family::PSL) f.div = gcd(Natural(n), q - 1);
      break;
    case Family::Sp:
    case Family::PSp:
      f.q_exp = n * n;
      for (unsigned i = 1; i <= n; ++i) f.phi.q_minus_1(2 * i);
      if (g.family == Family::PSp) f.div = gcd(Natural(2), q - 1);
      break;
    case Family::GU:
    case Family::SU:
    case Family::PSU:
      f.q_exp = n * (n - 1) / 2;
      for (unsigned i = g.family == Family::GU ? 1 : 2; i <= n; ++i) {
        f.phi.q_pow_minus_sign(i, i % 2 == 0 ? 1 : -1);
      }
      if (g.family == Family::PSU) f.div = gcd(Natural(n), q + 1);
      break;
    case Family::SO_odd:
    case Family::GO_odd:
    case Family::Omega_odd:
      f.q_exp = n * n;
      for (unsigned i = 1; i <= n; ++i) f.phi.q_minus_1(2 * i);
      if (g.family == Family::GO_odd) f.mult = gcd(Natural(2), q - 1);
      if (g.family == Family::Omega_odd) f.div = gcd(Natural(2), q - 1);
      break;
    case Family::GO_even:
    case Family::SO_even:
    case Family::Omega_even:
    case Family::POmega_even:
    case Family::CSO_even: {
      const int eps = sign_value(*g.sign);
      f.q_exp = n * (n - 1);
      f.phi.q_pow_minus_sign(n, eps);
      for (unsigned i = 1; i < n; ++i) f.phi.q_minus_1(2 * i);
      f.mult = 2;
      const Natural g2 = gcd(Natural(2), q - 1);
      const Natural qm_eps = eps > 0 ? Natural(ipow(q, n) - 1) : Natural(ipow(q, n) + 1);
      if (g.family == Family::SO_even) f.div = g2;
      if (g.family == Family::Omega_even) f.div = 2 * g2;
      if (g.family == Family::POmega_even) f.div = 2 * gcd(Natural(4), qm_eps);
      if (g.family == Family::CSO_even) {
        f.div = g2;
        f.phi.q_minus_1(1);
      }
      break;
    }
    case Family::E6:
      f.q_exp = 36;
      for (unsigned d : {2, 5, 6, 8, 9, 12}) f.phi.q_minus_1(d);
      f.div = gcd(Natural(3), q - 1);
      break;
    case Family::twistedE6:
      f.q_exp = 36;
      for (unsigned d : {2, 6, 8, 12}) f.phi.q_minus_1(d);
      f.phi.q_plus_1(5);
      f.phi.q_plus_1(9);
      f.div = gcd(Natural(3), q + 1);
      break;
    case Family::E7:
      f.q_exp = 63;
      for (unsigned d : {2, 6, 8, 10, 12, 14, 18}) f.phi.q_minus_1(d);
      f.div = gcd(Natural(2), q - 1);
      break;
    case Family::E8:
      f.q_exp = 120;
      for (unsigned d : {2, 8, 12, 14, 18, 20, 24, 30}) f.phi.q_minus_1(d);
      break;
    case Family::F4:
      f.q_exp = 24;
      for (unsigned d : {2, 6, 8, 12}) f.phi.q_minus_1(d);
      break;
    case Family::G2:
      f.q_exp = 6;
      f.phi.q_minus_1(2);
      f.phi.q_minus_1(6);
      if (g.derived) f.div = 2;
      break;
    case Family::threeD4:
      // q^12 (q^8+q^4+1)(q^6-1)(q^2-1)
      f.q_exp = 12;
      f.phi.add(3);
      f.phi.add(6);
      f.phi.add(12);
      f.phi.q_minus_1(6);
      f.phi.q_minus_1(2);
      break;
    case Family::twistedF4:
      // q^12 (q^6+1)(q^4-1)(q^3+1)(q-1)
      f.q_exp = 12;
      f.phi.q_plus_1(6);
      f.phi.q_minus_1(4);
      f.phi.q_plus_1(3);
      f.phi.q_minus_1(1);
      break;
    case Family::Suzuki: {
      const Natural r = suzuki_r(g);
      f.q_exp = 2;
      f.phi.q_minus_1(1);
      f.atoms = {q + r + 1, q - r + 1};
      break;
    }
    case Family::twistedG2: {
      auto [Q, R] = ree_qr(g);
      f.q_exp = 3;
      f.phi.q_minus_1(1);
      f.phi.q_plus_1(1);
      f.atoms = {Q + R + 1, Q - R + 1};
      break;
    }
    default:
      throw InvalidGroup("not a Lie-type family: " + family_name(g.family));
  }
  return f;
}

Factored factorial(unsigned n) {
  Factored out;
  for (unsigned i = 2; i <= n; ++i) out *= factorize(Natural(i));
  return out;
}

const Factored& cached_factorization(const Natural& n) {
  static std::mutex mu;
  static std::map<Natural, Factored> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, factorize(n)).first;
  return it->second;
}

Factored evaluate(const GroupId& g, const Formula& f) {
  Factored out;
  if (f.q_exp) out *= cached_factorization(g.q).pow(f.q_exp);
  for (auto [k, mult] : f.phi.map()) {
    out *= cached_factorization(cyclotomic_value(k, g.q)).pow(mult);
  }
  for (const auto& a : f.atoms) out *= cached_factorization(a);
  out *= factorize(f.mult);
  return out.divided_by(factorize(f.div));
}

Factored order_unchecked(const GroupId& g) {
  switch (g.family) {
    case Family::Cyclic:
      return factorize(Natural(g.n));
    case Family::Alternating:
      return factorial(g.n).divided_by(factorize(Natural(2)));
    case Family::Symmetric:
      return factorial(g.n);
    case Family::TitsGroup:
      return Factored::from_factors({{2, 11}, {3, 3}, {5, 2}, {13, 1}});
    case Family::Sporadic:
      for (const auto& e : sporadic_table()) {
        if (e.name == g.sporadic) return Factored::from_factors(e.factors);
      }
      throw InvalidGroup("unknown sporadic group '" + g.sporadic + "'");
    default:
      return evaluate(g, lie_formula(g));
  }
}

Natural value_unchecked(const GroupId& g) {
  Natural out = 1;
  switch (g.family) {
    case Family::Cyclic:
      return g.n;
    case Family::Alternating:
    case Family::Symmetric:
      for (unsigned i = 2; i <= g.n; ++i) out *= i;
      return g.family == Family::Alternating ? Natural(out / 2) : out;
    case Family::TitsGroup:
    case Family::Sporadic:
      return order_unchecked(g).value();
    default:
      break;
  }
  const Formula f = lie_formula(g);
  out = ipow(g.q, f.q_exp);
  for (auto [k, mult] : f.phi.map()) out *= ipow(cyclotomic_value(k, g.q), mult);
  for (const auto& a : f.atoms) out *= a;
  return out * f.mult / f.div;
}

std::optional<std::pair<Natural, unsigned>> twisted_exponent(const Natural& q, unsigned base) {
  auto split = arith::prime_power_split(q);
  if (!split || split->first != base || split->second % 2 == 0) return std::nullopt;
  return std::make_pair(split->first, (split->second - 1) / 2);
}

std::size_t sporadic_index(const std::string& name) {
  const auto& t = sporadic_table();
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (t[i].name == name) return i;
  }
  return t.size();
}

GroupId make(Family f, unsigned n, const Natural& q) {
  GroupId g;
  g.family = f;
  g.n = n;
  g.q = q;
  if (f == Family::Suzuki || f == Family::twistedF4) {
    if (auto t = twisted_exponent(q, 2)) g.twist = t->second;
  }
  if (f == Family::twistedG2) {
    if (auto t = twisted_exponent(q, 3)) g.twist = t->second;
  }
  return g;
}

}  // namespace

bool operator<(const GroupId& a, const GroupId& b) {
  auto sign_key = [](const std::optional<Sign>& s) { return s ? (*s == Sign::Plus ? 1 : 2) : 0; };
  auto ka = std::make_tuple(static_cast<int>(a.family), sporadic_index(a.sporadic), a.n, a.twist);
  auto kb = std::make_tuple(static_cast<int>(b.family), sporadic_index(b.sporadic), b.n, b.twist);
  if (ka != kb) return ka < kb;
  if (a.q != b.q) return a.q < b.q;
  if (sign_key(a.sign) != sign_key(b.sign)) return sign_key(a.sign) < sign_key(b.sign);
  return a.derived < b.derived;
}

std::string family_name(Family f) {
  switch (f) {
    case Family::Cyclic: return "Cyclic";
    case Family::Alternating: return "Alternating";
    case Family::Symmetric: return "Symmetric";
    case Family::GL: return "GL";
    case Family::SL: return "SL";
    case Family::PSL: return "PSL";
    case Family::Sp: return "Sp";
    case Family::PSp: return "PSp";
    case Family::GU: return "GU";
    case Family::SU: return "SU";
    case Family::PSU: return "PSU";
    case Family::SO_odd: return "SO_odd";
    case Family::GO_odd: return "GO_odd";
    case Family::Omega_odd: return "Omega_odd";
    case Family::GO_even: return "GO_even";
    case Family::SO_even: return "SO_even";
    case Family::Omega_even: return "Omega_even";
    case Family::POmega_even: return "POmega_even";
    case Family::CSO_even: return "CSO_even";
    case Family::E6: return "E6";
    case Family::twistedE6: return "twistedE6";
    case Family::E7: return "E7";
    case Family::E8: return "E8";
    case Family::F4: return "F4";
    case Family::twistedF4: return "twistedF4";
    case Family::TitsGroup: return "TitsGroup";
    case Family::G2: return "G2";
    case Family::twistedG2: return "twistedG2";
    case Family::threeD4: return "threeD4";
    case Family::Suzuki: return "Suzuki";
    case Family::Sporadic: return "Sporadic";
  }
  return "?";
}

Natural cyclotomic_value(unsigned k, const Natural& q) {
  if (k == 0) throw arith::ArithError("cyclotomic_value: k must be positive");
  // Phi_k(q) = prod_{d | k} (q^d - 1)^{mu(k/d)}
  Natural num = 1, den = 1;
  for (unsigned d = 1; d <= k; ++d) {
    if (k % d) continue;
    unsigned m = k / d;
    int mu = 1;
    for (unsigned p = 2; p * p <= m; ++p) {
      if (m % p) continue;
      m /= p;
      if (m % p == 0) {
        mu = 0;
        break;
      }
      mu = -mu;
    }
    if (mu != 0 && m > 1) mu = -mu;
    if (mu == 1) num *= ipow(q, d) - 1;
    if (mu == -1) den *= ipow(q, d) - 1;
  }
  return num / den;
}

Natural suzuki_r(const GroupId& g) { return ipow(Natural(2), g.twist + 1); }

std::pair<Natural, Natural> ree_qr(const GroupId& g) {
  return {ipow(Natural(3), 2 * g.twist + 1), ipow(Natural(3), g.twist + 1)};
}

void validate(const GroupId& g) {
  const std::string name = family_name(g.family);
  if (is_even_orthogonal(g.family) != g.sign.has_value()) {
    throw InvalidGroup(name + ": sign is required exactly for even orthogonal families");
  }
  if (g.family == Family::Sporadic) {
    if (sporadic_index(g.sporadic) == sporadic_table().size()) {
      throw InvalidGroup("unknown sporadic group '" + g.sporadic + "'");
    }
  } else if (!g.sporadic.empty()) {
    throw InvalidGroup(name + ": unexpected sporadic name");
  }
  if (uses_q(g.family)) {
    if (!arith::prime_power_split(g.q)) {
      throw InvalidGroup(name + ": " + arith::to_decimal(g.q) + " is not a prime power");
    }
  }
  unsigned min_n = 0;
  switch (g.family) {
    case Family::Cyclic: min_n = 2; break;
    case Family::Alternating: min_n = 3; break;
    case Family::Symmetric: min_n = 2; break;
    case Family::GL:
    case Family::SL:
    case Family::PSL:
    case Family::GU:
    case Family::SU:
    case Family::PSU: min_n = 2; break;
    default: min_n = uses_n(g.family) ? 1 : 0; break;
  }
  if (uses_n(g.family) && g.n < min_n) {
    throw InvalidGroup(name + ": degree parameter must be at least " + std::to_string(min_n));
  }
  if (g.family == Family::Suzuki || g.family == Family::twistedF4 ||
      g.family == Family::twistedG2) {
    const unsigned base = g.family == Family::twistedG2 ? 3 : 2;
    auto t = twisted_exponent(g.q, base);
    if (!t || t->second != g.twist) {
      throw InvalidGroup(name + ": q must be " + std::to_string(base) + "^(2n+1)");
    }
    if (g.family != Family::twistedF4 && g.twist < 1) {
      throw InvalidGroup(name + ": q must be " + std::to_string(base) + "^(2n+1) with n >= 1");
    }
  }
  if (g.derived && !(g.family == Family::G2 && g.q == 2)) {
    throw InvalidGroup("derived subgroup notation is only supported for G2(2)'");
  }
  if (value_unchecked(g) == 1) {
    throw InvalidGroup(to_string(g) + " is the trivial group");
  }
}

GroupId cyclic(unsigned n) {
  GroupId g = make(Family::Cyclic, n, 0);
  validate(g);
  return g;
}

GroupId alternating(unsigned n) {
  GroupId g = make(Family::Alternating, n, 0);
  validate(g);
  return g;
}

GroupId symmetric(unsigned n) {
  GroupId g = make(Family::Symmetric, n, 0);
  validate(g);
  return g;
}

GroupId linear(Family f, unsigned n, const Natural& q) {
  GroupId g = make(f, n, q);
  validate(g);
  return g;
}

GroupId orthogonal_even(Family f, Sign s, unsigned m, const Natural& q) {
  GroupId g = make(f, m, q);
  g.sign = s;
  validate(g);
  return g;
}

GroupId sporadic(const std::string& name) {
  GroupId g;
  g.family = Family::Sporadic;
  g.sporadic = name;
  validate(g);
  return g;
}

Factored order(const GroupId& g) {
  validate(g);
  return order_unchecked(g);
}

Natural order_value(const GroupId& g) {
  validate(g);
  return value_unchecked(g);
}

std::optional<CyclotomicProfile> cyclotomic_profile(const GroupId& g) {
  switch (g.family) {
    case Family::Cyclic:
    case Family::Alternating:
    case Family::Symmetric:
    case Family::TitsGroup:
    case Family::Sporadic:
    case Family::Suzuki:
    case Family::twistedG2:
      return std::nullopt;
    default:
      break;
  }
  return CyclotomicProfile{g.q, lie_formula(g).phi.map()};
}

std::optional<Natural> characteristic(const GroupId& g) {
  if (!uses_q(g.family)) return std::nullopt;
  return arith::prime_power_split(g.q)->first;
}

Normalized normalize(const GroupId& input) {
  Normalized out{input, {}};
  auto step = [&](const char* rule, GroupId to) {
    out.steps.push_back({rule, out.canonical, to});
    out.canonical = std::move(to);
  };
  for (bool changed = true; changed;) {
    changed = false;
    const GroupId g = out.canonical;
    const bool q_even = uses_q(g.family) && g.q % 2 == 0;
    const Family f = g.family;
    if (f == Family::Omega_odd && !q_even && g.n == 1) {
      step("normalize.omega3", make(Family::PSL, 2, g.q));
    } else if (f == Family::Omega_odd && !q_even && g.n == 2) {
      step("normalize.omega5", make(Family::PSp, 2, g.q));
    } else if (is_odd_orthogonal(f) && q_even) {
      step("normalize.omega-odd-even-q", make(Family::PSp, g.n, g.q));
    } else if (f == Family::Sp && q_even) {
      step("normalize.sp-even-q", make(Family::PSp, g.n, g.q));
    } else if (f == Family::Sp && g.n == 1) {
      step("normalize.sp2", make(Family::SL, 2, g.q));
    } else if (f == Family::PSp && g.n == 1) {
      step("normalize.sp2", make(Family::PSL, 2, g.q));
    } else if (f == Family::PSp && g.n == 2 && g.q == 2) {
      step("normalize.sp4-2", make(Family::Symmetric, 6, 0));
    } else if (f == Family::PSU && g.n == 2) {
      step("normalize.psu2", make(Family::PSL, 2, g.q));
    } else if (f == Family::SU && g.n == 2) {
      step("normalize.su2", make(Family::SL, 2, g.q));
    } else if (f == Family::POmega_even && g.n == 2 && *g.sign == Sign::Minus) {
      step("normalize.pomega4-minus", make(Family::PSL, 2, g.q * g.q));
    } else if (f == Family::POmega_even && g.n == 3) {
      if (*g.sign == Sign::Plus) {
        step("normalize.pomega6-plus", make(Family::PSL, 4, g.q));
      } else {
        step("normalize.pomega6-minus", make(Family::PSU, 4, g.q));
      }
    } else if (f == Family::G2 && g.derived) {
      step("normalize.g2-2", make(Family::PSU, 3, 3));
    } else if (f == Family::GL && g.q == 2) {
      step("normalize.gl-2", make(Family::SL, g.n, 2));
    } else if (f == Family::SL && gcd(Natural(g.n), g.q - 1) == 1) {
      step("normalize.sl-center", make(Family::PSL, g.n, g.q));
    } else if (f == Family::SU && gcd(Natural(g.n), g.q + 1) == 1) {
      step("normalize.su-center", make(Family::PSU, g.n, g.q));
    } else if (f == Family::Omega_even) {
      const Natural qm = ipow(g.q, g.n);
      const Natural qm_eps = *g.sign == Sign::Plus ? Natural(qm - 1) : Natural(qm + 1);
      if (q_even || gcd(Natural(4), qm_eps) == 2) {
        GroupId to = make(Family::POmega_even, g.n, g.q);
        to.sign = g.sign;
        step("normalize.omega-even-center", to);
      }
    }
    changed = !(out.canonical == g);
  }
  return out;
}

namespace {

SimplicityNote note(Simplicity s, std::string reason, std::vector<std::string> exceptions = {}) {
  return SimplicityNote{s, std::move(exceptions), std::move(reason)};
}

}  // namespace

SimplicityNote simplicity_note(Family f) {
  switch (f) {
    case Family::Cyclic:
      return note(Simplicity::SimpleExceptParams, "simple exactly for prime order");
    case Family::Alternating:
      return note(Simplicity::SimpleExceptParams, "simple except n = 4", {"A4"});
    case Family::PSL:
      return note(Simplicity::SimpleExceptParams, "simple except two small cases",
                  {"PSL(2,2)", "PSL(2,3)"});
    case Family::PSp:
      return note(Simplicity::SimpleExceptParams, "simple for m >= 2 except PSp(4,2)",
                  {"PSp(4,2)"});
    case Family::PSU:
      return note(Simplicity::SimpleExceptParams, "simple for n >= 3 except PSU(3,2)",
                  {"PSU(3,2)"});
    case Family::Omega_odd:
      return note(Simplicity::SimpleExceptParams, "simple for m >= 3 with q odd");
    case Family::POmega_even:
      return note(Simplicity::SimpleExceptParams, "simple for m >= 3 and for the minus type m = 2");
    case Family::G2:
      return note(Simplicity::SimpleExceptParams, "simple except G2(2)", {"G2(2)"});
    case Family::twistedF4:
      return note(Simplicity::SimpleExceptParams, "simple except 2F4(2)", {"2F4(2)"});
    case Family::E6:
    case Family::twistedE6:
    case Family::E7:
    case Family::E8:
    case Family::F4:
    case Family::threeD4:
    case Family::Suzuki:
    case Family::twistedG2:
    case Family::TitsGroup:
    case Family::Sporadic:
      return note(Simplicity::Simple, "simple for all admissible parameters");
    default:
      return note(Simplicity::SimpleExceptParams, "non-simple in general; simple only where isomorphic to a simple group");
  }
}

SimplicityNote simplicity_note(const GroupId& input) {
  validate(input);
  const GroupId g = normalize(input).canonical;
  const auto exceptions = simplicity_note(g.family).exceptions;
  auto simple = [&](const char* why) { return note(Simplicity::Simple, why, exceptions); };
  auto not_simple = [&](const char* why) { return note(Simplicity::NotSimple, why, exceptions); };
  const Natural ord = order_unchecked(g).value();
  switch (g.family) {
    case Family::Cyclic:
      return arith::is_prime(ord) ? simple("cyclic of prime order") : not_simple("cyclic of composite order");
    case Family::Alternating:
      return g.n == 4 ? not_simple("A4 has a normal Klein four-group") : simple("alternating group");
    case Family::Symmetric:
      return g.n == 2 ? simple("S2 has prime order") : not_simple("A_n has index 2");
    case Family::PSL:
      return g.n == 2 && g.q <= 3 ? not_simple("solvable") : simple("projective special linear group");
    case Family::PSp:
      return simple("projective symplectic group, m >= 2");
    case Family::PSU:
      return g.n == 3 && g.q == 2 ? not_simple("PSU(3,2) is solvable")
                                  : simple("projective special unitary group, n >= 3");
    case Family::Omega_odd:
      return simple("odd-dimensional orthogonal group, m >= 3, q odd");
    case Family::POmega_even:
      if (g.n == 1) {
        return arith::is_prime(ord) ? simple("cyclic of prime order") : not_simple("abelian of composite order");
      }
      return g.n == 2 ? not_simple("POmega(+,4,q) is a central product") : simple("projective orthogonal group, m >= 4");
    case Family::G2:
      return g.q == 2 ? not_simple("G2(2)' has index 2") : simple("exceptional group");
    case Family::twistedF4:
      return g.twist == 0 ? not_simple("the Tits group has index 2") : simple("exceptional group");
    case Family::E6:
    case Family::twistedE6:
    case Family::E7:
    case Family::E8:
    case Family::F4:
    case Family::threeD4:
    case Family::Suzuki:
    case Family::twistedG2:
    case Family::TitsGroup:
    case Family::Sporadic:
      return simple("simple group");
    default:
      return not_simple("has a non-trivial center or a proper normal subgroup of small index");
  }
}

bool is_simple(const GroupId& g) { return simplicity_note(g).status == Simplicity::Simple; }

bool is_solvable(const GroupId& input) {
  const GroupId g = normalize(input).canonical;
  switch (g.family) {
    case Family::Cyclic:
      return true;
    case Family::Alternating:
    case Family::Symmetric:
      return g.n <= 4;
    case Family::GL:
    case Family::SL:
    case Family::PSL:
      return g.n == 2 && g.q <= 3;
    case Family::GU:
    case Family::SU:
    case Family::PSU:
      return (g.n == 2 && g.q <= 3) || (g.n == 3 && g.q == 2);
    case Family::Sp:
    case Family::PSp:
      return g.n == 1 && g.q <= 3;
    case Family::SO_odd:
    case Family::GO_odd:
    case Family::Omega_odd:
      return g.n == 1 && g.q <= 3;
    case Family::GO_even:
    case Family::SO_even:
    case Family::Omega_even:
    case Family::POmega_even:
    case Family::CSO_even:
      return g.n == 1 || (g.n == 2 && *g.sign == Sign::Plus && g.q <= 3);
    default:
      return false;
  }
}

}  // namespace starblock::catalog
