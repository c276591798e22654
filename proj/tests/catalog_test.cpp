#include <gtest/gtest.h>

#include "starblock/catalog.hpp"

namespace {

using namespace starblock;
using catalog::Family;
using catalog::GroupId;
using catalog::Sign;
using arith::Natural;
using arith::ipow;

Natural nat_gcd(Natural a, Natural b) {
  while (b != 0) {
    Natural t = a % b;
    a = b;
    b = t;
  }
  return a;
}

// Orders written out directly from the classical formulas.
Natural gl_order(unsigned n, const Natural& q) {
  Natural o = ipow(q, n * (n - 1) / 2);
  for (unsigned i = 1; i <= n; ++i) o *= ipow(q, i) - 1;
  return o;
}

Natural gu_order(unsigned n, const Natural& q) {
  Natural o = ipow(q, n * (n - 1) / 2);
  for (unsigned i = 1; i <= n; ++i) o *= (i % 2) ? ipow(q, i) + 1 : ipow(q, i) - 1;
  return o;
}

Natural sp_order(unsigned m, const Natural& q) {
  Natural o = ipow(q, m * m);
  for (unsigned i = 1; i <= m; ++i) o *= ipow(q, 2 * i) - 1;
  return o;
}

Natural pomega_even_order(Sign s, unsigned m, const Natural& q) {
  const Natural qm = s == Sign::Plus ? ipow(q, m) - 1 : ipow(q, m) + 1;
  Natural o = ipow(q, m * (m - 1)) * qm;
  for (unsigned i = 1; i < m; ++i) o *= ipow(q, 2 * i) - 1;
  return o / nat_gcd(4, qm);
}

Natural product_of_phis(const Natural& q, std::initializer_list<unsigned> degrees) {
  Natural o = 1;
  for (unsigned d : degrees) o *= ipow(q, d) - 1;
  return o;
}

GroupId make(Family f, unsigned n, const Natural& q, std::optional<Sign> s = std::nullopt) {
  GroupId g;
  g.family = f;
  g.n = n;
  g.q = q;
  g.sign = s;
  return g;
}

const Natural kSmallQ[] = {2, 3, 4, 5, 7, 8, 9, 11, 13, 16};

TEST(Parse, Examples) {
  const auto a5 = catalog::parse_group("A5");
  EXPECT_EQ(a5.family, Family::Alternating);
  EXPECT_EQ(a5.n, 5u);

  const auto sz = catalog::parse_group("Sz(8)");
  EXPECT_EQ(sz.family, Family::Suzuki);
  EXPECT_EQ(sz.q, 8);
  EXPECT_EQ(sz.twist, 1u);
  EXPECT_EQ(catalog::suzuki_r(sz), 4);

  EXPECT_THROW(catalog::parse_group("GL(2,6)"), catalog::InvalidGroup);
  EXPECT_THROW(catalog::parse_group("Sz(4)"), catalog::InvalidGroup);
}

TEST(Parse, GrammarRoundTrips) {
  for (const char* text : {"PSL(3,4)", "A7", "S6", "Sp(6,3)", "POmega(+,8,2)", "Sz(8)", "2G2(27)", "3D4(2)",
                           "2F4(2)'", "M11", "J1", "C13", "G2(2)'", "PSU(3,5)", "Omega(7,3)", "E8(2)",
                           "SO(-,6,5)", "CSO(+,4,3)"}) {
    const auto g = catalog::parse_group(text);
    EXPECT_EQ(catalog::to_string(g), text);
    EXPECT_EQ(catalog::parse_group(catalog::to_string(g)), g);
  }
}

TEST(Parse, AcceptsAliasesAndWhitespace) {
  EXPECT_EQ(catalog::parse_group("L(2, 7)"), catalog::parse_group("PSL(2,7)"));
  EXPECT_EQ(catalog::parse_group("U(3,3)"), catalog::parse_group("PSU(3,3)"));
  EXPECT_EQ(catalog::parse_group("R(27)"), catalog::parse_group("2G2(27)"));
  EXPECT_EQ(catalog::parse_group("2B2(32)"), catalog::parse_group("Sz(32)"));
}

TEST(Parse, SyntaxErrorsReportPosition) {
  try {
    catalog::parse_group("PSL(3,4");
    FAIL();
  } catch (const catalog::ParseError& e) {
    EXPECT_EQ(e.position, 7u);
  }
  EXPECT_THROW(catalog::parse_group(""), catalog::ParseError);
  EXPECT_THROW(catalog::parse_group("Q8"), catalog::ParseError);
  EXPECT_THROW(catalog::parse_group("A5x"), catalog::ParseError);
  EXPECT_THROW(catalog::parse_group("Sp(5,3)"), catalog::ParseError);
  EXPECT_THROW(catalog::parse_group("SO(6,3)"), catalog::ParseError);
}

TEST(Parse, ParameterViolations) {
  EXPECT_THROW(catalog::parse_group("A2"), catalog::InvalidGroup);
  EXPECT_THROW(catalog::parse_group("C1"), catalog::InvalidGroup);
  EXPECT_THROW(catalog::parse_group("2G2(3)"), catalog::InvalidGroup);
  EXPECT_THROW(catalog::parse_group("2G2(9)"), catalog::InvalidGroup);
  EXPECT_THROW(catalog::parse_group("PSL(2,1)"), catalog::InvalidGroup);
}

TEST(Order, Examples) {
  EXPECT_EQ(catalog::order(catalog::parse_group("GL(2,3)")).to_string(), "2^4 * 3");
  EXPECT_EQ(catalog::order(catalog::parse_group("Sz(8)")).value(), 29120);
  EXPECT_EQ(catalog::order(catalog::parse_group("2F4(2)'")).to_string(), "2^11 * 3^3 * 5^2 * 13");
  EXPECT_EQ(catalog::order(catalog::parse_group("A5")).value(), 60);
  EXPECT_EQ(catalog::order(catalog::parse_group("M23")).value(), 10200960);
}

TEST(Order, LinearUnitarySymplecticMatchDirectFormulas) {
  for (const auto& q : kSmallQ) {
    for (unsigned n = 2; n <= 5; ++n) {
      const Natural gl = gl_order(n, q);
      EXPECT_EQ(catalog::order(make(Family::GL, n, q)).value(), gl);
      EXPECT_EQ(catalog::order(make(Family::SL, n, q)).value(), gl / (q - 1));
      EXPECT_EQ(catalog::order(make(Family::PSL, n, q)).value(), gl / (q - 1) / nat_gcd(n, q - 1));
      const Natural gu = gu_order(n, q);
      EXPECT_EQ(catalog::order(make(Family::GU, n, q)).value(), gu);
      EXPECT_EQ(catalog::order(make(Family::SU, n, q)).value(), gu / (q + 1));
      EXPECT_EQ(catalog::order(make(Family::PSU, n, q)).value(), gu / (q + 1) / nat_gcd(n, q + 1));
    }
    for (unsigned m = 1; m <= 4; ++m) {
      EXPECT_EQ(catalog::order(make(Family::Sp, m, q)).value(), sp_order(m, q));
      EXPECT_EQ(catalog::order(make(Family::PSp, m, q)).value(), sp_order(m, q) / nat_gcd(2, q - 1));
      if (q % 2 == 1) {
        EXPECT_EQ(catalog::order(make(Family::Omega_odd, m, q)).value(), sp_order(m, q) / 2);
        EXPECT_EQ(catalog::order(make(Family::SO_odd, m, q)).value(), sp_order(m, q));
      }
    }
    for (unsigned m = 2; m <= 4; ++m) {
      for (Sign s : {Sign::Plus, Sign::Minus}) {
        EXPECT_EQ(catalog::order(make(Family::POmega_even, m, q, s)).value(), pomega_even_order(s, m, q));
      }
    }
  }
}

TEST(Order, ExceptionalMatchDirectFormulas) {
  for (const Natural q : {2, 3, 4, 5}) {
    EXPECT_EQ(catalog::order(make(Family::G2, 0, q)).value(), ipow(q, 6) * product_of_phis(q, {6, 2}));
    EXPECT_EQ(catalog::order(make(Family::F4, 0, q)).value(), ipow(q, 24) * product_of_phis(q, {12, 8, 6, 2}));
    EXPECT_EQ(catalog::order(make(Family::threeD4, 0, q)).value(),
              ipow(q, 12) * (ipow(q, 8) + ipow(q, 4) + 1) * product_of_phis(q, {6, 2}));
    EXPECT_EQ(catalog::order(make(Family::E6, 0, q)).value(),
              ipow(q, 36) * product_of_phis(q, {12, 9, 8, 6, 5, 2}) / nat_gcd(3, q - 1));
    EXPECT_EQ(catalog::order(make(Family::twistedE6, 0, q)).value(),
              ipow(q, 36) * (ipow(q, 12) - 1) * (ipow(q, 9) + 1) * (ipow(q, 8) - 1) * (ipow(q, 6) - 1) *
                  (ipow(q, 5) + 1) * (ipow(q, 2) - 1) / nat_gcd(3, q + 1));
    EXPECT_EQ(catalog::order(make(Family::E7, 0, q)).value(),
              ipow(q, 63) * product_of_phis(q, {2, 6, 8, 10, 12, 14, 18}) / nat_gcd(2, q - 1));
    EXPECT_EQ(catalog::order(make(Family::E8, 0, q)).value(),
              ipow(q, 120) * product_of_phis(q, {2, 8, 12, 14, 18, 20, 24, 30}));
  }
}

TEST(Order, TwistedRankOneFamilies) {
  for (unsigned k = 1; k <= 4; ++k) {
    const Natural q = ipow(2, 2 * k + 1);
    const auto sz = catalog::parse_group("Sz(" + arith::to_decimal(q) + ")");
    EXPECT_EQ(catalog::order(sz).value(), q * q * (q * q + 1) * (q - 1));
    const Natural r = catalog::suzuki_r(sz);
    EXPECT_EQ(r * r, 2 * q);
    EXPECT_EQ((q + r + 1) * (q - r + 1), q * q + 1);

    const Natural Q = ipow(3, 2 * k + 1);
    const auto ree = catalog::parse_group("2G2(" + arith::to_decimal(Q) + ")");
    EXPECT_EQ(catalog::order(ree).value(), Q * Q * Q * (Q * Q * Q + 1) * (Q - 1));
    const auto [QQ, R] = catalog::ree_qr(ree);
    EXPECT_EQ(QQ, Q);
    EXPECT_EQ(R * R, 3 * Q);
    EXPECT_EQ((Q + R + 1) * (Q - R + 1) * (Q + 1), Q * Q * Q + 1);

    const auto f4 = catalog::parse_group("2F4(" + arith::to_decimal(q) + ")");
    EXPECT_EQ(catalog::order(f4).value(),
              ipow(q, 12) * (ipow(q, 6) + 1) * (ipow(q, 4) - 1) * (ipow(q, 3) + 1) * (q - 1));
  }
  EXPECT_EQ(catalog::order(catalog::parse_group("2F4(2)'")).value() * 2,
            catalog::order(catalog::parse_group("2F4(2)")).value());
}

TEST(Order, SporadicTableIsConsistent) {
  const auto& table = catalog::sporadic_table();
  EXPECT_EQ(table.size(), 26u);
  for (const auto& e : table) {
    Natural product = 1;
    for (const auto& pp : e.factors) product *= ipow(pp.prime, pp.exponent);
    EXPECT_EQ(arith::to_decimal(product), e.decimal) << e.name;
    EXPECT_EQ(catalog::order(catalog::sporadic(e.name)).value(), product) << e.name;
  }
  EXPECT_EQ(catalog::order(catalog::sporadic("M11")).value(), 7920);
  EXPECT_EQ(catalog::order(catalog::sporadic("J1")).value(), 175560);
  EXPECT_EQ(catalog::order(catalog::sporadic("M")).to_string(),
            "2^46 * 3^20 * 5^9 * 7^6 * 11^2 * 13^3 * 17 * 19 * 23 * 29 * 31 * 41 * 47 * 59 * 71");
}

TEST(Order, ValueAgreesWithFactoredOrder) {
  for (Family f : catalog::kAllFamilies) {
    for (unsigned n = 1; n <= 4; ++n) {
      for (const auto& q : kSmallQ) {
        GroupId g = make(f, n, q);
        if (f == Family::GO_even || f == Family::SO_even || f == Family::Omega_even || f == Family::POmega_even ||
            f == Family::CSO_even) {
          g.sign = Sign::Minus;
        }
        try {
          catalog::validate(g);
        } catch (const catalog::InvalidGroup&) {
          continue;
        }
        EXPECT_EQ(catalog::order_value(g), catalog::order(g).value()) << catalog::to_string(g);
      }
    }
  }
}

// Every identifier with small parameters that the catalog accepts.
std::vector<GroupId> small_catalog() {
  std::vector<GroupId> out;
  auto offer = [&](GroupId g) {
    try {
      catalog::validate(g);
      out.push_back(std::move(g));
    } catch (const catalog::InvalidGroup&) {
    }
  };
  for (Family f : catalog::kAllFamilies) {
    if (f == Family::Sporadic || f == Family::TitsGroup || f == Family::Suzuki || f == Family::twistedG2 ||
        f == Family::twistedF4) {
      continue;
    }
    for (unsigned n = 1; n <= 4; ++n) {
      for (const Natural q : {2, 3, 4, 5, 7, 8, 9}) {
        offer(make(f, n, q));
        offer(make(f, n, q, Sign::Plus));
        offer(make(f, n, q, Sign::Minus));
      }
    }
    for (unsigned n = 1; n <= 9; ++n) offer(make(f, n, 0));
  }
  for (const char* text : {"G2(2)'", "2F4(2)'", "Sz(8)", "2G2(27)"}) out.push_back(catalog::parse_group(text));
  return out;
}

TEST(Normalize, RewritesPreserveOrder) {
  unsigned rewritten = 0;
  for (const auto& g : small_catalog()) {
    const auto norm = catalog::normalize(g);
    if (norm.canonical == g) {
      EXPECT_TRUE(norm.steps.empty());
      continue;
    }
    ++rewritten;
    EXPECT_FALSE(norm.steps.empty());
    EXPECT_EQ(catalog::order(norm.canonical), catalog::order(g)) << catalog::to_string(g);
    EXPECT_EQ(catalog::normalize(norm.canonical).canonical, norm.canonical);
  }
  EXPECT_GT(rewritten, 10u);
}

TEST(Normalize, Examples) {
  EXPECT_EQ(catalog::normalize(catalog::parse_group("Omega(3,7)")).canonical, catalog::parse_group("PSL(2,7)"));
  EXPECT_EQ(catalog::normalize(catalog::parse_group("PSp(4,2)")).canonical, catalog::parse_group("S6"));
  EXPECT_EQ(catalog::normalize(catalog::parse_group("A7")).canonical, catalog::parse_group("A7"));
  EXPECT_EQ(catalog::normalize(catalog::parse_group("PSU(2,5)")).canonical, catalog::parse_group("PSL(2,5)"));
  EXPECT_EQ(catalog::normalize(catalog::parse_group("POmega(-,4,3)")).canonical,
            catalog::parse_group("PSL(2,9)"));
  EXPECT_EQ(catalog::normalize(catalog::parse_group("POmega(+,6,3)")).canonical,
            catalog::parse_group("PSL(4,3)"));
  EXPECT_EQ(catalog::normalize(catalog::parse_group("POmega(-,6,3)")).canonical,
            catalog::parse_group("PSU(4,3)"));
  EXPECT_EQ(catalog::normalize(catalog::parse_group("G2(2)'")).canonical, catalog::parse_group("PSU(3,3)"));
}

TEST(Simplicity, Examples) {
  EXPECT_FALSE(catalog::is_simple(catalog::parse_group("PSU(3,2)")));
  EXPECT_TRUE(catalog::is_simple(catalog::parse_group("PSU(3,4)")));
  EXPECT_TRUE(catalog::is_simple(catalog::parse_group("PSp(6,3)")));
  EXPECT_FALSE(catalog::is_simple(catalog::parse_group("GL(3,5)")));
  EXPECT_EQ(catalog::simplicity_note(catalog::parse_group("GL(3,5)")).status, catalog::Simplicity::NotSimple);
  EXPECT_FALSE(catalog::is_simple(catalog::parse_group("G2(2)")));
  EXPECT_TRUE(catalog::is_simple(catalog::parse_group("G2(2)'")));
  EXPECT_FALSE(catalog::is_simple(catalog::parse_group("2F4(2)")));
  EXPECT_TRUE(catalog::is_simple(catalog::parse_group("2F4(2)'")));
  EXPECT_FALSE(catalog::is_simple(catalog::parse_group("PSL(2,3)")));
  EXPECT_TRUE(catalog::is_simple(catalog::parse_group("C13")));
  EXPECT_FALSE(catalog::is_simple(catalog::parse_group("C12")));
  EXPECT_FALSE(catalog::is_simple(catalog::parse_group("A4")));
  EXPECT_TRUE(catalog::is_simple(catalog::parse_group("M24")));
}

TEST(Simplicity, SolvableMembers) {
  for (const char* text : {"S3", "S4", "A4", "PSL(2,2)", "PSL(2,3)", "C12", "PSU(3,2)", "SL(2,3)"}) {
    EXPECT_TRUE(catalog::is_solvable(catalog::parse_group(text))) << text;
  }
  for (const char* text : {"A5", "S5", "PSL(2,7)", "GL(2,5)", "M11", "Sz(8)"}) {
    EXPECT_FALSE(catalog::is_solvable(catalog::parse_group(text))) << text;
  }
}

// p | |G| exactly when p is the characteristic or divides a cyclotomic factor.
TEST(Cyclotomic, DivisibilityMatchesOrder) {
  for (Family f : {Family::GL, Family::SL, Family::PSL, Family::GU, Family::SU, Family::PSU, Family::Sp,
                   Family::PSp, Family::Omega_odd, Family::POmega_even, Family::G2, Family::F4,
                   Family::threeD4, Family::E6}) {
    for (Natural q = 2; q <= 16; ++q) {
      if (!arith::prime_power_split(q)) continue;
      for (unsigned n = 2; n <= 4; ++n) {
        GroupId g = make(f, n, q, f == Family::POmega_even ? std::optional(Sign::Minus) : std::nullopt);
        if (f == Family::G2 || f == Family::F4 || f == Family::threeD4 || f == Family::E6) {
          if (n != 2) continue;
          g.n = 0;
        }
        try {
          catalog::validate(g);
        } catch (const catalog::InvalidGroup&) {
          continue;
        }
        const auto profile = catalog::cyclotomic_profile(g);
        ASSERT_TRUE(profile.has_value()) << catalog::to_string(g);
        const Natural ord = catalog::order_value(g);
        const Natural r = catalog::characteristic(g).value();
        for (std::uint64_t p = 2; p <= 50; ++p) {
          if (!arith::is_prime_u64(p)) continue;
          bool via_phi = r == p;
          for (const auto& [k, mult] : profile->phi) {
            if (mult > 0 && catalog::cyclotomic_value(k, q) % p == 0) via_phi = true;
          }
          EXPECT_EQ(ord % p == 0, via_phi) << catalog::to_string(g) << " p=" << p;
        }
      }
    }
  }
}

TEST(Cyclotomic, Values) {
  EXPECT_EQ(catalog::cyclotomic_value(1, 5), 4);
  EXPECT_EQ(catalog::cyclotomic_value(2, 5), 6);
  EXPECT_EQ(catalog::cyclotomic_value(3, 2), 7);
  EXPECT_EQ(catalog::cyclotomic_value(4, 3), 10);
  EXPECT_EQ(catalog::cyclotomic_value(6, 3), 7);
  EXPECT_EQ(catalog::cyclotomic_value(12, 2), 13);
}

TEST(Ordering, IsStrictAndFamilyFirst) {
  const auto a = catalog::parse_group("A5");
  const auto b = catalog::parse_group("A6");
  const auto c = catalog::parse_group("PSL(2,4)");
  EXPECT_TRUE(a < b);
  EXPECT_FALSE(b < a);
  EXPECT_FALSE(a < a);
  EXPECT_TRUE(b < c);
}

}  // namespace
