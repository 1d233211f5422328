#include <gtest/gtest.h>

#include "majdet/errors.hpp"
#include "majdet/formulas.hpp"
#include "majdet/repr.hpp"
#include "test_support.hpp"

using namespace majdet;
using majdet::testing::P;

namespace {

FactoredProduct F(std::string_view text) { return parse_factored(text); }

bool same(const FactoredProduct& a, const FactoredProduct& b) { return fp_equal(a, b, CompareMode::symbolic); }

void expect_well_formed(const FactoredProduct& fp) {
  for (const auto& f : fp.factors()) {
    EXPECT_GE(f.exp, 1u) << to_string(fp);
    EXPECT_FALSE(f.base.is_constant()) << to_string(fp);
  }
}

MultiPoly at_zero(const FactoredProduct& fp) {
  std::map<Var, MultiPoly> zero;
  for (Var v : fp.variables()) zero[v] = MultiPoly();
  return fp.substituted(zero).expand();
}

}  // namespace

TEST(Formulas, QFactorial) {
  EXPECT_EQ(q_factorial(1), MultiPoly(1));
  EXPECT_EQ(q_factorial(0), MultiPoly(1));
  EXPECT_EQ(q_factorial(3), P("1+2*q+2*q^2+q^3"));
}

TEST(Formulas, RhsMaj) {
  EXPECT_EQ(to_string(rhs_maj(2)), "(1-q^2)");
  EXPECT_EQ(to_string(rhs_maj(3)), "(1-q^2)^3*(1-q^3)^4");
  EXPECT_EQ(to_string(rhs_maj(1)), "1");
  EXPECT_EQ(to_string(rhs_maj(4)), "(1-q^2)^12*(1-q^3)^16*(1-q^4)^18");
}

TEST(Formulas, RhsFmaj) {
  EXPECT_TRUE(same(rhs_fmaj(1, 2), F("1-q^2")));
  EXPECT_TRUE(same(rhs_fmaj(2, 1), F("1-q^2")));
  EXPECT_TRUE(same(rhs_fmaj(2, 2), F("(1-q^2)^4*(1-q^4)^6")));
  // Oracle: the 8x8 regular determinant.
  const MultiPoly det = det_bareiss(regular_matrix(ColoredGroup(2, 2), Weight<ColoredPermutation>(weight_fmaj)));
  EXPECT_TRUE(fp_equal(rhs_fmaj(2, 2), det, CompareMode::symbolic));
  EXPECT_EQ(det_bareiss(regular_matrix(ColoredGroup(1, 2), Weight<ColoredPermutation>(weight_fmaj))), P("1-q^2"));
}

TEST(Formulas, RhsMajCol) {
  for (auto [n, m] : std::vector<std::pair<int, int>>{{2, 2}, {3, 2}, {2, 3}}) {
    const auto special = rhs_maj_col(n, m).substituted({{Var::p(), P("q").pow(static_cast<std::uint64_t>(m))}});
    EXPECT_TRUE(same(special, rhs_fmaj(n, m))) << n << " " << m;
  }
  for (int n = 1; n <= 4; ++n) EXPECT_TRUE(same(rhs_maj_col(n, 1).substituted({{Var::p(), P("q")}}), rhs_maj(n)));
  EXPECT_TRUE(same(rhs_maj_col(1, 2), F("1-q^2")));
  const MultiPoly det = det_bareiss(regular_matrix(ColoredGroup(1, 2), Weight<ColoredPermutation>(weight_maj_col)));
  EXPECT_EQ(det, P("1-q^2"));
}

TEST(Formulas, RhsAmaj) {
  EXPECT_TRUE(same(rhs_amaj(1, 2), F("1-q^2")));
  for (int n = 1; n <= 4; ++n) EXPECT_TRUE(same(rhs_amaj(n, 1).substituted({{Var::p(), P("q")}}), rhs_maj(n)));
}

TEST(Formulas, AmajTwoTwo) {
  // The 8x8 bivariate determinant decides the exponent of (1-q^2).
  const MultiPoly det = det_bareiss(regular_matrix(ColoredGroup(2, 2), Weight<ColoredPermutation>(weight_amaj)));
  EXPECT_EQ(det, P("(1-q^2)^8*(1-p^2)^4"));
  EXPECT_TRUE(fp_equal(rhs_amaj(2, 2), det, CompareMode::symbolic));
  EXPECT_FALSE(fp_equal(F("(1-q^2)^16*(1-p^2)^4"), det, CompareMode::symbolic));
}

TEST(Formulas, RhsSigned) {
  EXPECT_TRUE(same(rhs_signed(1), F("1-q_1^2")));
  EXPECT_TRUE(same(rhs_signed(2), F("(1-q_1^2)^4*(1-q_2^4)^2*(1-p^2)^4")));
  EXPECT_EQ(det_bareiss(regular_matrix(SignedGroup(1), Weight<SignedPermutation>(weight_signed))), P("1-q_1^2"));
  const MultiPoly det = det_bareiss(regular_matrix(SignedGroup(2), Weight<SignedPermutation>(weight_signed)));
  EXPECT_TRUE(fp_equal(rhs_signed(2), det, CompareMode::symbolic));
}

TEST(Formulas, RhsSignedSpecializations) {
  EXPECT_TRUE(same(rhs_signed_spec(1, SignedSpecialization::nneg), F("1-q^2")));
  EXPECT_TRUE(same(rhs_signed_spec(2, SignedSpecialization::majB), F("(1-q^2)^8*(1-q^4)^2")));
  EXPECT_TRUE(same(rhs_signed_spec(2, SignedSpecialization::sneg), F("(1-q^2)^4*(1-q^8)^2*(1-p^2)^4")));
  for (int n = 1; n <= 5; ++n) {
    std::map<Var, MultiPoly> to_q;
    for (int i = 1; i <= n; ++i) to_q[Var::q_sub(i)] = P("q");
    const auto chain = rhs_signed(n).substituted(to_q).substituted({{Var::p(), P("q")}});
    EXPECT_TRUE(same(chain, rhs_signed_spec(n, SignedSpecialization::majB))) << n;
  }
  EXPECT_EQ(parse_specialization("majB"), SignedSpecialization::majB);
  EXPECT_EQ(parse_specialization("other"), std::nullopt);
}

TEST(Formulas, ExponentsArePositiveIntegers) {
  for (int n = 1; n <= 8; ++n) {
    expect_well_formed(rhs_maj(n));
    expect_well_formed(rhs_signed(n));
    expect_well_formed(rhs_defining(n));
    for (int m = 1; m <= 5; ++m) {
      expect_well_formed(rhs_fmaj(n, m));
      expect_well_formed(rhs_maj_col(n, m));
      expect_well_formed(rhs_amaj(n, m));
    }
  }
  EXPECT_THROW(checked_exponent(7, 2), NonIntegerExponent);
  EXPECT_EQ(checked_exponent(8, 2), 4u);
}

TEST(Formulas, ConstantTermIsOne) {
  for (int n = 1; n <= 5; ++n) {
    EXPECT_EQ(at_zero(rhs_maj(n)), MultiPoly(1));
    EXPECT_EQ(at_zero(rhs_signed(n)), MultiPoly(1));
    for (auto which : {SignedSpecialization::nneg, SignedSpecialization::majB, SignedSpecialization::sneg}) {
      EXPECT_EQ(at_zero(rhs_signed_spec(n, which)), MultiPoly(1));
    }
    for (int m = 1; m <= 3; ++m) {
      EXPECT_EQ(at_zero(rhs_fmaj(n, m)), MultiPoly(1));
      EXPECT_EQ(at_zero(rhs_maj_col(n, m)), MultiPoly(1));
      EXPECT_EQ(at_zero(rhs_amaj(n, m)), MultiPoly(1));
    }
  }
  for (int n = 3; n <= 6; ++n) EXPECT_EQ(at_zero(rhs_dihedral(n)), MultiPoly(1));
}

TEST(Formulas, Expand) {
  EXPECT_EQ(F("1-q^2").expand(), P("1-q^2"));
  const MultiPoly e = rhs_maj(3).expand();
  EXPECT_EQ(e.degree_in(Var::q()), 18u);
  EXPECT_EQ(e.constant_term(), 1);
  EXPECT_EQ(e, P("1-q^2").pow(3) * P("1-q^3").pow(4));
  EXPECT_EQ(FactoredProduct().expand(), MultiPoly(1));
  EXPECT_THROW(rhs_maj(6).expand(), DegreeBoundExceeded);
}

TEST(Formulas, FpEqual) {
  EXPECT_TRUE(fp_equal(F("(1-q^2)*(1+q^2)"), P("1-q^4"), CompareMode::symbolic));
  EXPECT_TRUE(fp_equal(F("(1-q^2)*(1+q^2)"), P("1-q^4"), CompareMode::modular));
  const MultiPoly det = det_bareiss(regular_matrix(SymmetricGroup(3), Weight<Permutation>(weight_maj)));
  EXPECT_TRUE(fp_equal(rhs_maj(3), det, CompareMode::symbolic));
  EXPECT_FALSE(fp_equal(F("1-q^2"), F("1-q^3"), CompareMode::symbolic));
  EXPECT_FALSE(fp_equal(F("1-q^2"), F("1-q^3"), CompareMode::modular));
  // Too large to expand: decided through the cyclotomic factorization.
  EXPECT_TRUE(fp_equal(rhs_maj(6), F("(1-q^2)^360*(1-q^3)^480*(1-q^4)^540*(1-q^5)^576*(1-q^6)^600"),
                       CompareMode::symbolic));
  EXPECT_TRUE(fp_equal(F("(1-q^4)^3000"), F("(1-q)^3000*(1+q+q^2+q^3)^3000"), CompareMode::symbolic));
  EXPECT_FALSE(fp_equal(F("(1-q^4)^3000"), F("(1-q^2)^3000*(1+q)^3000"), CompareMode::symbolic));
}

TEST(Formulas, CyclotomicForm) {
  const auto a = cyclotomic_form(F("(1-q^6)^2"));
  const auto b = cyclotomic_form(F("(1-q)^2*(1+q)^2*(1+q+q^2)^2*(1-q+q^2)^2"));
  ASSERT_TRUE(a.has_value());
  EXPECT_FALSE(b.has_value());  // 1-q+q^2 is neither 1-q^k nor [k]_q
  const auto c = cyclotomic_form(F("(1-q^3)*(1+q)"));
  const auto d = cyclotomic_form(F("(1-q^2)*(1+q+q^2)"));
  ASSERT_TRUE(c && d);
  EXPECT_EQ(*c, *d);
  const auto e = cyclotomic_form(F("(q^2-1)"));
  const auto f = cyclotomic_form(F("1-q^2"));
  ASSERT_TRUE(e && f);
  EXPECT_NE(*e, *f);
}

TEST(Formulas, TextAndJson) {
  const auto fp = rhs_maj(3);
  EXPECT_EQ(F(to_string(fp)), fp);
  EXPECT_EQ(to_json(fp).dump(), R"({"factors":[{"base":"1-q^2","exp":3},{"base":"1-q^3","exp":4}]})");
  EXPECT_EQ(factored_from_json(to_json(fp)), fp);
  FactoredProduct neg(-1);
  neg.times(P("1-q"), 2);
  EXPECT_EQ(factored_from_json(to_json(neg)), neg);
  EXPECT_EQ(F(to_string(neg)), neg);
  EXPECT_EQ(to_string(FactoredProduct()), "1");
  EXPECT_THROW(F("(1-q"), ParseError);
}

TEST(Formulas, NormalizedMergesBases) {
  const auto merged = F("(1-q^2)^4*(1-q^4)^2*(1-q^2)^4").normalized();
  EXPECT_EQ(merged, F("(1-q^2)^8*(1-q^4)^2"));
  FactoredProduct zero_exp;
  zero_exp.times(P("1-q"), 0);
  EXPECT_TRUE(zero_exp.empty());
}

TEST(Formulas, ModularPoints) {
  EXPECT_EQ(point_count(1000), 5);
  EXPECT_EQ(point_count(12'000'000), 12);
  ModularOptions opts;
  const auto a = random_points({Var::p(), Var::q()}, opts);
  const auto b = random_points({Var::p(), Var::q()}, opts);
  EXPECT_EQ(a.size(), 7u);
  EXPECT_EQ(a, b);
  for (const auto& pt : a) {
    for (const auto& [v, value] : pt) {
      EXPECT_GE(value, 1u);
      EXPECT_LT(value, opts.prime);
    }
  }
  opts.seed = 1;
  EXPECT_NE(random_points({Var::p(), Var::q()}, opts), a);
}
