#include "starblock/oracle.hpp"

namespace starblock::oracle {
namespace {

std::string dec(const Natural& n) { return arith::to_decimal(n); }

bool claims_cyclic_shape(classify::Cyclicity k) {
  return k == classify::Cyclicity::Cyclic || k == classify::Cyclicity::NotCyclic;
}

}  // namespace

std::string tri_name(Tri t) {
  switch (t) {
    case Tri::Yes: return "yes";
    case Tri::No: return "no";
    case Tri::Undecided: return "undecided";
  }
  return "?";
}

Tri parse_tri(const std::string& s) {
  for (Tri t : {Tri::Yes, Tri::No, Tri::Undecided}) {
    if (tri_name(t) == s) return t;
  }
  throw OracleError("unknown tri-state '" + s + "'");
}

std::string check_name(Check c) {
  switch (c) {
    case Check::Passed: return "passed";
    case Check::VacuousPass: return "vacuous";
    case Check::Failed: return "failed";
    case Check::Undecided: return "undecided";
  }
  return "?";
}

EdgeMeasurement measure_e_m(const PermGroup& G, const Natural& p, const Budget& budget) {
  const auto search = G.element_of_full_p_part(p, budget);
  if (search.outcome == perm::Search::Undecided) {
    throw perm::BudgetExceeded("cyclicity of the Sylow " + dec(p) + "-subgroup is undecided");
  }
  if (search.outcome == perm::Search::Absent) {
    throw OracleError("the Sylow " + dec(p) + "-subgroup is not cyclic");
  }
  EdgeMeasurement out;
  out.generator = *search.element;
  out.sylow_order = search.p_part;
  out.sylow_count = G.cyclic_subgroup_conjugates(out.generator, budget);
  out.normalizer_order = G.order().value() / out.sylow_count;
  out.centralizer_order = G.centralizer_order(out.generator, budget).value();
  if (out.normalizer_order % out.centralizer_order != 0) {
    throw OracleError("centralizer order does not divide normalizer order");
  }
  out.e = out.normalizer_order / out.centralizer_order;
  if ((out.sylow_order - 1) % out.e != 0) {
    throw OracleError("e = " + dec(out.e) + " does not divide |P| - 1 = " + dec(out.sylow_order - 1));
  }
  out.m = (out.sylow_order - 1) / out.e;
  return out;
}

StarNecessary check_star_necessary(const PermGroup& G, const Natural& p, const Budget& budget) {
  const EdgeMeasurement em = measure_e_m(G, p, budget);
  StarNecessary out;
  out.e = em.e;
  out.e_even = em.e % 2 == 0;
  out.centralizer_odd = em.centralizer_order % 2 == 1;
  if (!out.centralizer_odd) {
    out.involutions = Check::VacuousPass;
    return out;
  }
  try {
    out.involution_classes = G.involution_class_count(budget);
    out.involutions = *out.involution_classes == 1 ? Check::Passed : Check::Failed;
  } catch (const perm::BudgetExceeded&) {
    out.involutions = Check::Undecided;
  }
  return out;
}

std::vector<DivisibilityResult> check_divisibility(const std::vector<DivisibilityPair>& pairs,
                                                   const Budget& budget) {
  std::vector<DivisibilityResult> out;
  for (const auto& pair : pairs) {
    DivisibilityResult r;
    r.label = pair.label;
    r.p = pair.p;
    const PermGroup& H = *pair.normal;
    const PermGroup& G = *pair.group;
    bool ok = H.degree() == G.degree();
    for (const auto& h : H.generators()) ok = ok && G.contains(h);
    if (!ok) {
      r.error = "H is not contained in G";
    } else if (G.order().value() % H.order().value() != 0 ||
               (G.order().value() / H.order().value()) % pair.p == 0) {
      r.error = "index of H in G is not coprime to p";
    } else {
      for (const auto& g : G.generators()) {
        for (const auto& h : H.generators()) ok = ok && H.contains(h.conjugate_by(g));
      }
      if (!ok) r.error = "H is not normal in G";
    }
    if (r.error.empty()) {
      try {
        r.e_normal = measure_e_m(H, pair.p, budget).e;
        r.e_group = measure_e_m(G, pair.p, budget).e;
        r.divides = *r.e_group % *r.e_normal == 0;
        r.equal = *r.e_group == *r.e_normal;
      } catch (const std::exception& e) {
        r.error = e.what();
      }
    }
    out.push_back(std::move(r));
  }
  return out;
}

CrossCheckReport crosscheck(const GroupId& g, const PermGroup& rep, const Natural& p,
                            const Budget& budget) {
  const GroupId canon = catalog::normalize(g).canonical;
  const Natural expected = catalog::order(canon).value();
  if (rep.order().value() != expected) {
    throw OracleError("representation order " + dec(rep.order().value()) + " differs from |" +
                      catalog::to_string(g) + "| = " + dec(expected));
  }
  CrossCheckReport r;
  r.group = g;
  r.p = p;
  r.claimed = classify::in_Xp(g, p);
  const bool conflict = r.claimed.status == classify::Status::Conflict;
  auto compare = [&](bool same, const std::string& what) {
    (same ? r.agreements : r.disagreements).push_back(what);
  };

  r.measured.sylow_order = arith::p_part(rep.order(), p).first;
  if (r.measured.sylow_order == 1) {
    r.measured.cyclic = Tri::No;
    compare(r.claimed.status == classify::Status::PNotDividingOrder, "p does not divide |G|");
    return r;
  }

  const auto search = rep.element_of_full_p_part(p, budget);
  r.measured.cyclic = search.outcome == perm::Search::Found    ? Tri::Yes
                      : search.outcome == perm::Search::Absent ? Tri::No
                                                               : Tri::Undecided;
  const auto claim = classify::sylow_cyclic(g, p);
  if (r.measured.cyclic == Tri::Undecided) {
    r.undecided.push_back("Sylow cyclicity: search budget exhausted");
  } else if (claims_cyclic_shape(claim.kind)) {
    const bool claimed = claim.kind == classify::Cyclicity::Cyclic;
    compare(claimed == (r.measured.cyclic == Tri::Yes),
            std::string("Sylow cyclic: measured ") + tri_name(r.measured.cyclic) + ", claimed " +
                (claimed ? "yes" : "no"));
  }
  if (r.measured.cyclic != Tri::Yes) return r;

  EdgeMeasurement em;
  try {
    em = measure_e_m(rep, p, budget);
  } catch (const perm::BudgetExceeded& e) {
    r.undecided.push_back(std::string("e and m: ") + e.what());
    return r;
  }
  r.measured.e = em.e;
  r.measured.m = em.m;
  r.measured.centralizer_P_odd = em.centralizer_order % 2 == 1;
  compare(em.sylow_count % p == 1, "Sylow count " + dec(em.sylow_count) + " is 1 mod p");
  if (r.claimed.e) compare(*r.claimed.e == em.e, "e: measured " + dec(em.e) + ", claimed " + dec(*r.claimed.e));
  if (r.claimed.m) compare(*r.claimed.m == em.m, "m: measured " + dec(em.m) + ", claimed " + dec(*r.claimed.m));
  if (const auto f = classify::edges_formula(g, p)) {
    compare(f->e == em.e, "e: measured " + dec(em.e) + ", formula " + dec(f->e) + " (" + f->rule_id + ")");
  }

  const bool simple = catalog::is_simple(canon) && canon.family != catalog::Family::Cyclic;
  if (!conflict && simple && r.claimed.status == classify::Status::InXp) {
    compare(em.e % 2 == 0, "e = " + dec(em.e) + " is even");
    if (em.centralizer_order % 2 == 1) {
      try {
        r.measured.involution_classes = rep.involution_class_count(budget);
        compare(*r.measured.involution_classes == 1,
                std::to_string(*r.measured.involution_classes) + " involution class(es) with |C_G(P)| odd");
      } catch (const perm::BudgetExceeded& e) {
        r.undecided.push_back(std::string("involution classes: ") + e.what());
      }
    } else {
      r.agreements.push_back("involution condition vacuous: |C_G(P)| even");
    }
  }
  return r;
}

}  // namespace starblock::oracle
