#include <gtest/gtest.h>

#include <random>

#include "majdet/errors.hpp"
#include "majdet/repr.hpp"
#include "test_support.hpp"

using namespace majdet;
using majdet::testing::P;

namespace {

PolyMatrix to_poly(const IntMatrix& m) {
  return PolyMatrix::generate(m.rows(), m.cols(), [&](std::size_t i, std::size_t j) { return MultiPoly(m(i, j)); });
}

std::vector<std::size_t> orbits_of(const PermutationMatrix& m) {
  return orbit_sizes(m.size(), [&](std::size_t x) { return m.images()[x]; });
}

}  // namespace

TEST(Repr, RegularMatrixExamples) {
  const PolyMatrix s2 = regular_matrix(SymmetricGroup(2), Weight<Permutation>(weight_maj));
  EXPECT_EQ(s2, PolyMatrix(2, 2, {1, P("q"), P("q"), 1}));

  const PolyMatrix s3 = regular_matrix(SymmetricGroup(3), Weight<Permutation>(weight_maj));
  const std::vector<MultiPoly> first_row{1, P("q^2"), P("q"), P("q"), P("q^2"), P("q^3")};
  for (std::size_t j = 0; j < 6; ++j) EXPECT_EQ(s3(0, j), first_row[j]) << j;
  for (std::size_t i = 0; i < 6; ++i) EXPECT_EQ(s3(i, i), MultiPoly(1));

  const Weight<DihedralElement> ones = [](const DihedralElement&) { return Monomial(); };
  const PolyMatrix all = regular_matrix(DihedralGroup(4), ones);
  for (std::size_t i = 0; i < 8; ++i) {
    for (std::size_t j = 0; j < 8; ++j) EXPECT_EQ(all(i, j), MultiPoly(1));
  }
  EXPECT_TRUE(det_bareiss(all).is_zero());
  EXPECT_THROW(regular_matrix(SymmetricGroup(5), Weight<Permutation>(weight_maj)), TooLargeForSymbolic);
}

TEST(Repr, RegularTableSerialMatchesParallel) {
  const ColoredGroup grp(3, 2);
  const auto a = RegularTable::build(grp, Weight<ColoredPermutation>(weight_fmaj), Execution::serial);
  const auto b = RegularTable::build(grp, Weight<ColoredPermutation>(weight_fmaj), Execution::parallel);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a.size(); ++j) ASSERT_EQ(a.index(i, j), b.index(i, j));
  }
  const ModPrime field;
  const ModAssignment point{{Var::q(), 987654321}};
  EXPECT_EQ(a.det_mod(point, field, Execution::serial), b.det_mod(point, field, Execution::parallel));
}

TEST(Repr, ThetaPermRepExamples) {
  for (int n = 2; n <= 6; ++n) {
    for (int k = 2; k <= n; ++k) {
      const auto m = defining_rep(cycle(k, n));
      FactoredProduct expected;
      expected.times(one_minus_power(Var::q(), static_cast<std::uint32_t>(k)));
      expected.times(P("1-q"), static_cast<std::uint64_t>(n - k));
      EXPECT_TRUE(fp_equal(theta_perm_rep(orbits_of(m)), expected, CompareMode::symbolic));
      EXPECT_TRUE(fp_equal(theta_perm_rep(orbits_of(m)), theta(m), CompareMode::symbolic));
    }
  }
  // Regular action: every orbit of <g> has size o(g).
  const SymmetricGroup s4(4);
  for (const auto& g : s4.elements()) {
    const auto sizes = orbit_sizes(s4.size(), [&](std::size_t x) { return s4.index_of(s4.multiply(g, s4.elements()[x])); });
    const std::size_t o = element_order(s4, g);
    EXPECT_TRUE(fp_equal(theta_perm_rep(sizes), theta_regular(o, s4.size()), CompareMode::symbolic));
  }
  // Even k on 2-subsets of [k].
  for (int k = 2; k <= 8; k += 2) {
    FactoredProduct expected;
    expected.times(one_minus_power(Var::q(), static_cast<std::uint32_t>(k)), static_cast<std::uint64_t>((k - 2) / 2));
    expected.times(one_minus_power(Var::q(), static_cast<std::uint32_t>(k / 2)));
    EXPECT_TRUE(fp_equal(theta_perm_rep(orbits_of(pairs_rep(cycle(k, k)))), expected, CompareMode::symbolic)) << k;
  }
  EXPECT_EQ(orbits_of(pairs_rep(cycle(4, 4))), (std::vector<std::size_t>{4, 2}));
}

TEST(Repr, PairsCaseFormula) {
  for (int n = 2; n <= 8; ++n) {
    for (int k = 2; k <= n; ++k) {
      const auto m = pairs_rep(cycle(k, n));
      const auto by_orbits = theta_perm_rep(orbits_of(m));
      EXPECT_TRUE(fp_equal(by_orbits, theta_pairs_formula(n, k), CompareMode::symbolic)) << n << " " << k;
      if (n <= 6) EXPECT_TRUE(fp_equal(by_orbits, theta(m), CompareMode::symbolic));
    }
  }
}

TEST(Repr, ActionsAreHomomorphisms) {
  std::mt19937_64 rng(21);
  const SymmetricGroup s5(5);
  std::uniform_int_distribution<std::size_t> pick(0, s5.size() - 1);
  for (int t = 0; t < 200; ++t) {
    const auto& g = s5.elements()[pick(rng)];
    const auto& h = s5.elements()[pick(rng)];
    ASSERT_EQ(to_int_matrix(defining_rep(g * h)), to_int_matrix(defining_rep(g)) * to_int_matrix(defining_rep(h)));
    ASSERT_EQ(to_int_matrix(pairs_rep(g * h)), to_int_matrix(pairs_rep(g)) * to_int_matrix(pairs_rep(h)));
  }
}

TEST(Repr, DefiningMatrix) {
  EXPECT_EQ(defining_matrix(1), PolyMatrix(1, 1, {1}));
  EXPECT_EQ(defining_matrix(2), PolyMatrix(2, 2, {1, P("q"), P("q"), 1}));
  const MultiPoly expected = P("(1-q)^3") * q_factorial(3).pow(2);
  EXPECT_EQ(det_bareiss(defining_matrix(3)), expected);
  for (int n = 1; n <= 5; ++n) {
    EXPECT_TRUE(fp_equal(rhs_defining(n), det_bareiss(defining_matrix(n)), CompareMode::symbolic)) << n;
  }
}

TEST(Repr, DeltaGeneralExamples) {
  for (int n = 3; n <= 6; ++n) {
    const DihedralGroup grp(n);
    const std::size_t order = grp.size();
    const auto delta = delta_general({n, 2}, order,
                                     {theta_regular(static_cast<std::size_t>(n), order), theta_regular(2, order)});
    EXPECT_TRUE(fp_equal(delta, rhs_dihedral(n), CompareMode::symbolic)) << n;
    // Trivial representation.
    const auto triv = delta_general({n, 2}, 1, {theta_perm_rep({1}), theta_perm_rep({1})});
    const MultiPoly expected = exact_div(one_minus_power(Var::x(1), static_cast<std::uint32_t>(n)), P("1-x1")) *
                               exact_div(P("1-x2^2"), P("1-x2"));
    EXPECT_TRUE(fp_equal(triv, expected, CompareMode::symbolic));
  }
  for (int n = 2; n <= 6; ++n) {
    std::vector<int> bounds;
    std::vector<FactoredProduct> thetas;
    for (int k = n; k >= 2; --k) {
      bounds.push_back(k);
      thetas.push_back(theta_perm_rep(orbits_of(defining_rep(cycle(k, n)))));
    }
    const auto delta = specialize_to_q(delta_general(bounds, static_cast<std::uint64_t>(n), thetas), bounds.size());
    EXPECT_TRUE(fp_equal(delta, rhs_defining(n), CompareMode::symbolic)) << n;
  }
  EXPECT_THROW(delta_general({2}, 1, {theta_perm_rep({2, 2})}), NotDivisible);
}

TEST(Repr, DeltaGeneralMatchesRegularClosedForm) {
  // Symmetric groups.
  for (int n = 2; n <= 5; ++n) {
    const SymmetricGroup grp(n);
    const auto spec = sym_basis(n);
    std::vector<FactoredProduct> thetas;
    std::vector<std::size_t> orders;
    for (const auto& g : spec.elements) {
      orders.push_back(element_order(grp, g));
      thetas.push_back(theta_regular(orders.back(), grp.size()));
    }
    const auto general = specialize_to_q(delta_general(spec.bounds, grp.size(), thetas), spec.bounds.size());
    const auto closed = delta_regular_closed(spec.bounds, orders, grp.size());
    EXPECT_TRUE(fp_equal(general, closed, CompareMode::symbolic)) << n;
    EXPECT_TRUE(fp_equal(closed, rhs_maj(n), CompareMode::symbolic)) << n;
  }
  // Colored groups.
  for (auto [n, m] : std::vector<std::pair<int, int>>{{1, 2}, {2, 2}, {2, 3}, {3, 2}}) {
    const ColoredGroup grp(n, m);
    const auto spec = colored_basis(n, m);
    std::vector<FactoredProduct> thetas;
    std::vector<std::size_t> orders;
    for (const auto& g : spec.elements) {
      orders.push_back(element_order(grp, g));
      thetas.push_back(theta_regular(orders.back(), grp.size()));
    }
    const auto general = specialize_to_q(delta_general(spec.bounds, grp.size(), thetas), spec.bounds.size());
    EXPECT_TRUE(fp_equal(general, rhs_fmaj(n, m), CompareMode::symbolic));
    EXPECT_TRUE(fp_equal(delta_regular_closed(spec.bounds, orders, grp.size()), rhs_fmaj(n, m), CompareMode::symbolic));
  }
  // Dihedral at x1 = x2 = q.
  for (int n = 3; n <= 6; ++n) {
    const auto closed = delta_regular_closed({n, 2}, {static_cast<std::size_t>(n), 2}, static_cast<std::size_t>(2 * n));
    FactoredProduct expected;
    expected.times(one_minus_power(Var::q(), static_cast<std::uint32_t>(n)), static_cast<std::uint64_t>(2 * n - 2));
    expected.times(P("1-q^2"), static_cast<std::uint64_t>(n));
    EXPECT_TRUE(fp_equal(closed, expected, CompareMode::symbolic));
  }
  EXPECT_THROW(delta_regular_closed({3}, {4}, 6), NonIntegerExponent);
}

TEST(Repr, DihedralIrreps) {
  const auto r4 = dihedral_irrep(8, 4);
  EXPECT_EQ(theta(to_poly(r4.rotation)), P("1+q^2"));
  EXPECT_EQ(r4.theta_rotation, P("1+q^2"));
  const auto r3 = dihedral_irrep(6, 3);
  EXPECT_EQ(theta(to_poly(r3.reflection)), P("1-q^2"));
  EXPECT_TRUE(fp_equal(r3.theta_reflection, P("1-q^2"), CompareMode::symbolic));
  EXPECT_THROW(dihedral_irrep(6, 4), InvalidDivisor);
  EXPECT_THROW(dihedral_irrep(6, 2), InvalidDivisor);

  for (int n = 3; n <= 12; ++n) {
    for (int d = 3; d <= n; ++d) {
      if (n % d != 0) continue;
      const auto rep = dihedral_irrep(n, d);
      const auto l = rep.rotation.rows();
      const IntMatrix id = IntMatrix::identity(l);
      EXPECT_EQ(rep.reflection * rep.reflection, id);
      // A rho A = rho^-1
      EXPECT_EQ(rep.reflection * rep.rotation * rep.reflection * rep.rotation, id);
      EXPECT_EQ(theta(to_poly(rep.rotation)), rep.theta_rotation);
      EXPECT_TRUE(fp_equal(rep.theta_reflection, theta(to_poly(rep.reflection)), CompareMode::symbolic));
      const DihedralGroup grp(n);
      for (const auto& a : grp.elements()) {
        for (const auto& b : grp.elements()) {
          ASSERT_EQ(dihedral_irrep_matrix(rep, grp.multiply(a, b)),
                    dihedral_irrep_matrix(rep, a) * dihedral_irrep_matrix(rep, b));
        }
      }
    }
  }
}

TEST(Repr, DihedralIrrepDeterminant) {
  // det phi_d(alpha) against the general perfect-basis formula.
  for (auto [n, d] : std::vector<std::pair<int, int>>{{3, 3}, {4, 4}, {6, 3}, {6, 6}, {8, 8}}) {
    const DihedralGroup grp(n);
    const auto rep = dihedral_irrep(n, d);
    const MultiPoly lhs = represented_determinant(grp, Weight<DihedralElement>(weight_dihedral),
                                                  [&](const DihedralElement& h) { return dihedral_irrep_matrix(rep, h); });
    FactoredProduct theta_rot;
    theta_rot.times(rep.theta_rotation);
    const auto delta = delta_general({n, 2}, rep.rotation.rows(), {theta_rot, rep.theta_reflection});
    EXPECT_TRUE(fp_equal(delta, lhs, CompareMode::symbolic)) << n << " " << d;
  }
}

TEST(Repr, GroupDeterminantIsRegularRepresentation) {
  // det of the weighted regular matrix equals det of sum_g weight(g) phi_reg(g).
  const SymmetricGroup s3(3);
  const auto regular = [&](const Permutation& g) {
    return to_int_matrix(action_matrix(s3.size(), [&](std::size_t x) { return s3.index_of(g * s3.elements()[x]); }));
  };
  EXPECT_EQ(represented_determinant(s3, Weight<Permutation>(weight_maj), regular),
            det_bareiss(regular_matrix(s3, Weight<Permutation>(weight_maj))));
}
