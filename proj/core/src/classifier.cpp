#include "starblock/classifier.hpp"

#include <algorithm>

#include "starblock/rules.hpp"

namespace starblock::classify {
namespace {

using catalog::Family;
using catalog::Sign;

bool is_linear(Family f) { return f == Family::GL || f == Family::SL || f == Family::PSL; }
bool is_unitary(Family f) { return f == Family::GU || f == Family::SU || f == Family::PSU; }
bool is_symplectic(Family f) { return f == Family::Sp || f == Family::PSp; }

bool is_odd_orthogonal(Family f) {
  return f == Family::SO_odd || f == Family::GO_odd || f == Family::Omega_odd;
}

bool is_even_orthogonal(Family f) {
  return f == Family::GO_even || f == Family::SO_even || f == Family::Omega_even ||
         f == Family::POmega_even || f == Family::CSO_even;
}

bool is_exceptional(Family f) {
  switch (f) {
    case Family::E6:
    case Family::twistedE6:
    case Family::E7:
    case Family::E8:
    case Family::F4:
    case Family::twistedF4:
    case Family::G2:
    case Family::threeD4:
      return true;
    default:
      return false;
  }
}

Justification cite(std::string_view id) {
  const Rule& r = rule(id);
  return {r.id, r.anchor};
}

bool divides(const Natural& p, const Natural& x) { return x % p == 0; }

// e with the rules that pin it, for the families where it is known exactly.
struct EdgeCalc {
  Natural e;
  std::vector<std::string> chain;
  Shape shape = Shape::Line;
};

std::optional<EdgeCalc> edge_calc(const GroupId& g, const Natural& p, const SylowInfo& s) {
  if (s.kind != Cyclicity::Cyclic) return std::nullopt;
  const Natural n = g.n;
  switch (g.family) {
    case Family::Symmetric:
      return EdgeCalc{s.order - 1, {"symmetric"}};
    case Family::Alternating:
      if (p == 2) return std::nullopt;
      if (p == n || p + 1 == n) return EdgeCalc{(p - 1) / 2, {"alternating.edges", "line.normal-subgroup"}};
      return EdgeCalc{p - 1, {"alternating.edges", "line.normal-subgroup"}};
    default:
      break;
  }
  if (!is_linear(g.family) || p == 2) return std::nullopt;
  if (divides(p, g.q)) {
    if (g.family == Family::GL) return EdgeCalc{p - 1, {"line.lemma", "gl.defining"}};
    return EdgeCalc{(p - 1) / 2, {"sl.defining"}};
  }
  const Natural d = arith::mult_order(g.q, p);
  if (g.family == Family::GL) return EdgeCalc{d, {"gl.edges", "line.lemma"}};
  if (d == 1) {
    if (g.n != 2) return std::nullopt;
    return EdgeCalc{2, {g.family == Family::SL ? "sl.split" : "psl2.split"}};
  }
  return EdgeCalc{d, {"gl.edges", "gl-sl.edges", "sl.via-gl"}};
}

class VerdictBuilder {
 public:
  void cite(std::string_view id) {
    const Rule& r = rule(id);
    v_.justification.push_back({r.id, r.anchor});
    if (!r.warning.empty() &&
        std::find(v_.warnings.begin(), v_.warnings.end(), r.warning) == v_.warnings.end()) {
      v_.warnings.push_back(r.warning);
    }
  }
  void cite_all(const std::vector<Justification>& js) {
    for (const auto& j : js) cite(j.rule_id);
  }
  void edges(const EdgeCalc& c, const Natural& sylow_order) {
    for (const auto& id : c.chain) cite(id);
    v_.e = c.e;
    v_.m = (sylow_order - 1) / c.e;
    v_.shape = c.shape;
  }
  Verdict finish(Status s, std::string_view terminal) {
    if (v_.justification.empty() || v_.justification.back().rule_id != terminal) cite(terminal);
    v_.status = s;
    if (s == Status::InXp) v_.shape = Shape::Star;
    return std::move(v_);
  }
  Verdict& raw() { return v_; }

 private:
  Verdict v_;
};

Verdict star_if(VerdictBuilder& b, bool star, std::string_view terminal) {
  return b.finish(star ? Status::InXp : Status::NotInXp, terminal);
}

// H is normal in G of p'-index: H outside the class puts G outside too.
Verdict via_normal_subgroup(VerdictBuilder& b, const GroupId& h, const Natural& p) {
  const Verdict sub = in_Xp(h, p);
  if (sub.status != Status::NotInXp) return b.finish(Status::OutOfScope, "scope.unclassified");
  b.cite_all(sub.justification);
  return b.finish(Status::NotInXp, "coprime-index");
}

bool sporadic_listed(const std::string& name, const Natural& p) {
  return (name == "M11" && p == 5) || (name == "J1" && (p == 3 || p == 5)) ||
         (name == "J3" && p == 5);
}

}  // namespace

std::string status_name(Status s) {
  switch (s) {
    case Status::InXp: return "InXp";
    case Status::NotInXp: return "NotInXp";
    case Status::SylowNotCyclic: return "SylowNotCyclic";
    case Status::PNotDividingOrder: return "PNotDividingOrder";
    case Status::OutOfScope: return "OutOfScope";
    case Status::Conflict: return "Conflict";
  }
  return "?";
}

std::string shape_name(Shape s) {
  switch (s) {
    case Shape::Star: return "Star";
    case Shape::Line: return "Line";
    case Shape::Unknown: return "Unknown";
  }
  return "?";
}

Status parse_status(const std::string& s) {
  for (Status x : {Status::InXp, Status::NotInXp, Status::SylowNotCyclic, Status::PNotDividingOrder,
                   Status::OutOfScope, Status::Conflict}) {
    if (status_name(x) == s) return x;
  }
  throw ClassifyError("unknown status '" + s + "'");
}

Shape parse_shape(const std::string& s) {
  for (Shape x : {Shape::Star, Shape::Line, Shape::Unknown}) {
    if (shape_name(x) == s) return x;
  }
  throw ClassifyError("unknown shape '" + s + "'");
}

SylowInfo sylow_cyclic(const GroupId& input, const Natural& p) {
  if (!arith::is_prime(p)) throw ClassifyError(arith::to_decimal(p) + " is not prime");
  const GroupId g = catalog::normalize(input).canonical;
  SylowInfo s;
  std::tie(s.order, s.exponent) = arith::p_part(catalog::order(g), p);
  auto out = [&](Cyclicity k, const char* id) {
    s.kind = k;
    s.rule_id = id;
    return s;
  };
  const Family f = g.family;
  if (s.exponent == 0) return out(Cyclicity::PNotDividing, "gate.p-not-dividing");
  if (f == Family::CSO_even) return out(Cyclicity::OutOfScope, "scope.unclassified");
  if (f == Family::Cyclic) return out(Cyclicity::Cyclic, "sylow.cyclic-group");
  if (s.exponent == 1) return out(Cyclicity::Cyclic, "sylow.prime-order");
  if (f == Family::Alternating || f == Family::Symmetric) {
    return out(Cyclicity::NotCyclic, "sylow.symmetric");
  }
  if (p == 2) {
    if (!catalog::is_solvable(g)) return out(Cyclicity::NotCyclic, "sylow.p2-nonsolvable");
    const bool cyclic_torus = is_even_orthogonal(f) && g.n == 1 && f != Family::GO_even;
    return out(cyclic_torus ? Cyclicity::Cyclic : Cyclicity::NotCyclic, "sylow.p2-solvable");
  }
  if (f == Family::Sporadic) return out(Cyclicity::NotCyclic, "sylow.sporadic");
  if (f == Family::TitsGroup) return out(Cyclicity::NotCyclic, "sylow.tits");
  if (f == Family::Suzuki) return out(Cyclicity::Cyclic, "sylow.suzuki");
  const Natural ch = *catalog::characteristic(g);
  if (p == ch) {
    if (is_linear(f) && g.n == 2) {
      return out(Cyclicity::NotCyclic, f == Family::GL ? "sylow.defining-gl2" : "sylow.defining-sl2");
    }
    return out(Cyclicity::NotCyclic, "sylow.defining");
  }
  if (f == Family::twistedG2) return out(Cyclicity::Cyclic, "sylow.ree");
  const std::uint64_t d = arith::mult_order(g.q, p);
  if (f == Family::GL) {
    const bool cyclic = d <= g.n && g.n < 2 * d;
    return out(cyclic ? Cyclicity::Cyclic : Cyclicity::NotCyclic, "sylow.gl");
  }
  if ((f == Family::SU || f == Family::PSU) && g.n == 3 && p == 3 && divides(p, g.q + 1)) {
    return out(Cyclicity::NotCyclic, "sylow.unitary3");
  }
  const auto profile = catalog::cyclotomic_profile(g);
  if (!profile) return out(Cyclicity::Undetermined, "sylow.undetermined");
  const unsigned ad = profile->multiplicity(static_cast<unsigned>(d));
  if (ad >= 2) return out(Cyclicity::NotCyclic, "sylow.torus-rank");
  if (ad == 0) return out(Cyclicity::Undetermined, "sylow.undetermined");
  for (const auto& [k, mult] : profile->phi) {
    if (mult == 0 || k == d || k % d != 0) continue;
    Natural r = k / d;
    while (r % p == 0) r /= p;
    if (r == 1) return out(Cyclicity::Undetermined, "sylow.undetermined");
  }
  return out(Cyclicity::Cyclic, "sylow.torus-cyclic");
}

std::optional<EdgeFormula> edges_formula(const GroupId& input, const Natural& p) {
  const GroupId g = catalog::normalize(input).canonical;
  const SylowInfo s = sylow_cyclic(g, p);
  const auto calc = edge_calc(g, p, s);
  if (!calc) return std::nullopt;
  // Cite the rule fixing e, not the shape lemma that accompanies it.
  const auto it = std::find_if(calc->chain.begin(), calc->chain.end(),
                               [](const std::string& id) { return id.rfind("line.", 0) != 0; });
  return EdgeFormula{calc->e, (s.order - 1) / calc->e, it == calc->chain.end() ? calc->chain.back() : *it};
}

Verdict in_Xp(const GroupId& input, const Natural& p) {
  catalog::validate(input);
  const auto nz = catalog::normalize(input);
  const GroupId& g = nz.canonical;
  const Family f = g.family;
  VerdictBuilder b;
  for (const auto& step : nz.steps) b.cite(step.rule_id);

  const SylowInfo s = sylow_cyclic(g, p);
  switch (s.kind) {
    case Cyclicity::PNotDividing:
      return b.finish(Status::PNotDividingOrder, s.rule_id);
    case Cyclicity::NotCyclic:
      return b.finish(Status::SylowNotCyclic, s.rule_id);
    case Cyclicity::OutOfScope:
      return b.finish(Status::OutOfScope, "scope.unclassified");
    case Cyclicity::Undetermined:
      b.cite(s.rule_id);
      return b.finish(Status::OutOfScope, "scope.unclassified");
    case Cyclicity::Cyclic:
      b.cite(s.rule_id);
      break;
  }

  const auto calc = edge_calc(g, p, s);
  if (calc) b.edges(*calc, s.order);

  if (catalog::is_solvable(g)) {
    if (f == Family::Cyclic && Natural(g.n) == p) return b.finish(Status::InXp, "cyclic.Cp");
    return b.finish(Status::InXp, "psolvable.star");
  }

  switch (f) {
    case Family::Alternating:
      return star_if(b, calc->e <= 2, "alternating");
    case Family::Symmetric:
      return star_if(b, calc->e <= 2, "symmetric.statement");
    case Family::Sporadic:
      if ((g.sporadic == "M12" || g.sporadic == "M23") && p == 5) {
        b.cite("sporadic.conflict.headline");
        return b.finish(Status::Conflict, "sporadic.conflict.table");
      }
      return sporadic_listed(g.sporadic, p) ? b.finish(Status::InXp, "sporadic.listed")
                                            : b.finish(Status::NotInXp, "sporadic.not-listed");
    case Family::TitsGroup:
      return b.finish(Status::NotInXp, "tits.none");
    case Family::Suzuki: {
      const Natural r = catalog::suzuki_r(g);
      return star_if(b, divides(p, g.q - 1) || divides(p, g.q + r + 1), "suzuki");
    }
    case Family::twistedG2: {
      const auto [Q, R] = catalog::ree_qr(g);
      b.cite("ree.argument");
      return star_if(b, divides(p, Q - 1) || divides(p, Q + R + 1), "ree");
    }
    default:
      break;
  }

  if (f == Family::twistedF4 && g.twist == 0) {
    GroupId tits;
    tits.family = Family::TitsGroup;
    return via_normal_subgroup(b, tits, p);
  }
  if (f == Family::G2 && g.q == 2) {
    GroupId h = g;
    h.derived = true;
    return via_normal_subgroup(b, h, p);
  }
  if (is_exceptional(f)) return b.finish(Status::NotInXp, "exceptional.none");

  if (is_linear(f)) {
    if (f == Family::GL) return star_if(b, calc->e <= 2, divides(p, g.q) ? "gl.defining" : "gl.cross");
    if (divides(p, g.q)) return star_if(b, calc->e <= 2, "sl.defining");
    if (arith::mult_order(g.q, p) == 1) return b.finish(Status::InXp, calc->chain.back());
    return star_if(b, calc->e <= 2, "gl.cross");
  }

  if (is_symplectic(f)) {
    b.raw().shape = Shape::Line;
    b.cite("line.lemma");
    return b.finish(Status::NotInXp, "symplectic.none");
  }

  if (is_unitary(f)) {
    if (f == Family::GU) {
      if (g.n == 2) return b.finish(Status::OutOfScope, "scope.unclassified");
      if (g.n == 3) return via_normal_subgroup(b, catalog::linear(Family::SU, 3, g.q), p);
      b.cite("gu.same-tree");
      return b.finish(Status::NotInXp, "unitary");
    }
    if (g.n == 3) {
      b.cite("unitary.block");
      return star_if(b, divides(p, g.q - 1), "unitary");
    }
    return b.finish(Status::NotInXp, "unitary");
  }

  if (is_odd_orthogonal(f)) {
    if (g.n >= 3) return b.finish(Status::NotInXp, "orth-odd.none");
    return b.finish(Status::OutOfScope, "scope.unclassified");
  }

  if (is_even_orthogonal(f)) {
    if (g.n >= 4) return b.finish(Status::NotInXp, "orth-even.none");
    return b.finish(Status::OutOfScope, "scope.unclassified");
  }

  return b.finish(Status::OutOfScope, "scope.unclassified");
}

void check_invariants(const GroupId& g, const Natural& p, const Verdict& v) {
  auto fail = [&](const std::string& why) {
    throw ClassifyError(catalog::to_string(g) + " at p = " + arith::to_decimal(p) + ": " + why);
  };
  if (v.justification.empty()) fail("empty justification");
  for (const auto& j : v.justification) {
    if (rule(j.rule_id).anchor != j.anchor) fail("anchor mismatch for " + j.rule_id);
  }
  if (v.status == Status::InXp && v.shape != Shape::Star) fail("InXp without star shape");
  if (v.status == Status::Conflict && v.warnings.empty()) fail("Conflict without warnings");
  const SylowInfo s = sylow_cyclic(g, p);
  if (v.status == Status::InXp && s.kind != Cyclicity::Cyclic) fail("InXp without cyclic Sylow");
  if (v.e) {
    if (*v.e < 1) fail("e < 1");
    if (v.m && *v.e * *v.m != s.order - 1) fail("e * m != |P| - 1");
  }
}

ObstructionReport theorem2_necessary(const GroupId& quotient, const Natural& p) {
  const GroupId l = catalog::normalize(quotient).canonical;
  if (!catalog::is_simple(l) || l.family == Family::Cyclic) {
    throw ClassifyError(catalog::to_string(quotient) + " is not simple non-abelian");
  }
  ObstructionReport r{quotient, p, in_Xp(quotient, p), false, {}};
  r.verdict.justification.push_back(cite("theorem2"));
  const std::string name = catalog::to_string(quotient);
  const std::string ps = arith::to_decimal(p);
  switch (r.verdict.status) {
    case Status::InXp:
      r.statement = name + " lies in X_" + ps + "; no obstruction for groups with this simple section";
      break;
    case Status::NotInXp:
    case Status::SylowNotCyclic:
    case Status::PNotDividingOrder:
      r.obstructs = true;
      r.statement = name + " is not in X_" + ps + "; no group G with K/O_p'(G) = " + name +
                    " lies in X_" + ps;
      break;
    case Status::OutOfScope:
    case Status::Conflict:
      r.statement = "membership of " + name + " in X_" + ps + " is undecided; no conclusion";
      break;
  }
  return r;
}

}  // namespace starblock::classify
