#include <algorithm>

#include "starblock/classifier.hpp"

namespace starblock::classify {
namespace {

using catalog::Family;
using catalog::Sign;

std::vector<Natural> prime_powers_upto(const Natural& q_max) {
  std::vector<Natural> out;
  for (Natural q = 2; q <= q_max; ++q) {
    if (arith::prime_power_split(q)) out.push_back(q);
  }
  return out;
}

class Enumerator {
 public:
  explicit Enumerator(const SweepSpec& spec) : spec_(spec), qs_(prime_powers_upto(spec.q_max)) {}

  std::vector<GroupId> run() {
    for (Family f : catalog::kAllFamilies) {
      if (spec_.families.count(f)) family(f);
    }
    return std::move(groups_);
  }

 private:
  // Adds g when valid and within the order cap; false once the cap is exceeded.
  bool offer(GroupId g) {
    Natural ord;
    try {
      ord = catalog::order_value(g);
    } catch (const catalog::InvalidGroup&) {
      return true;
    }
    if (ord > spec_.order_cap) return false;
    if (spec_.simple_only && !catalog::is_simple(g)) return true;
    groups_.push_back(std::move(g));
    return true;
  }

  GroupId make(Family f, unsigned n, const Natural& q, std::optional<Sign> sign = std::nullopt) {
    GroupId g;
    g.family = f;
    g.n = n;
    g.q = q;
    g.sign = sign;
    return g;
  }

  void over_q(Family f, unsigned n, std::optional<Sign> sign = std::nullopt) {
    for (const auto& q : qs_) {
      if (!offer(make(f, n, q, sign))) break;
    }
  }

  void twisted(Family f, unsigned base, unsigned first) {
    for (unsigned k = first; k <= spec_.exp_max; ++k) {
      GroupId g = make(f, 0, arith::ipow(Natural(base), 2 * k + 1));
      g.twist = k;
      if (!offer(g)) break;
    }
  }

  void family(Family f) {
    switch (f) {
      case Family::Cyclic:
      case Family::Alternating:
      case Family::Symmetric:
        for (unsigned n = 1; n <= spec_.n_max; ++n) {
          if (!offer(make(f, n, 0))) break;
        }
        return;
      case Family::GL:
      case Family::SL:
      case Family::PSL:
      case Family::GU:
      case Family::SU:
      case Family::PSU:
      case Family::Sp:
      case Family::PSp:
      case Family::SO_odd:
      case Family::GO_odd:
      case Family::Omega_odd:
        for (unsigned n = 1; n <= spec_.n_max; ++n) over_q(f, n);
        return;
      case Family::GO_even:
      case Family::SO_even:
      case Family::Omega_even:
      case Family::POmega_even:
      case Family::CSO_even:
        for (unsigned n = 1; n <= spec_.n_max; ++n) {
          over_q(f, n, Sign::Plus);
          over_q(f, n, Sign::Minus);
        }
        return;
      case Family::Suzuki:
        twisted(f, 2, 1);
        return;
      case Family::twistedF4:
        twisted(f, 2, 0);
        return;
      case Family::twistedG2:
        twisted(f, 3, 1);
        return;
      case Family::TitsGroup:
        offer(make(f, 0, 0));
        return;
      case Family::Sporadic:
        for (const auto& e : catalog::sporadic_table()) {
          GroupId g = make(f, 0, 0);
          g.sporadic = e.name;
          offer(g);
        }
        return;
      default:
        over_q(f, 0);
        return;
    }
  }

  const SweepSpec& spec_;
  std::vector<Natural> qs_;
  std::vector<GroupId> groups_;
};

}  // namespace

std::vector<SweepRow> sweep(const SweepSpec& spec) {
  std::vector<GroupId> groups = Enumerator(spec).run();
  std::stable_sort(groups.begin(), groups.end());
  std::vector<SweepRow> rows;
  for (const auto& g : groups) {
    const arith::Factored ord = catalog::order(g);
    for (const auto& pp : ord.factors()) {
      if (pp.prime > spec.p_max) break;
      rows.push_back({g, pp.prime, in_Xp(g, pp.prime)});
    }
  }
  return rows;
}

}  // namespace starblock::classify
