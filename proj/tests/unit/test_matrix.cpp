#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "majdet/errors.hpp"
#include "majdet/groups.hpp"
#include "majdet/matrix.hpp"
#include "test_support.hpp"

using namespace majdet;
using majdet::testing::P;
using majdet::testing::random_poly;

namespace {

PolyMatrix from_rows(std::vector<std::vector<MultiPoly>> rows) {
  const std::size_t n = rows.size();
  return PolyMatrix::generate(n, rows.front().size(), [&](std::size_t i, std::size_t j) { return rows[i][j]; });
}

// The 6x6 example built straight from one-line words: entry q^maj(u v^-1).
PolyMatrix s3_example() {
  const std::vector<std::string> words{"123", "132", "213", "231", "312", "321"};
  return PolyMatrix::generate(6, 6, [&](std::size_t i, std::size_t j) {
    const Permutation u = parse_one_line(words[i]);
    const Permutation v = parse_one_line(words[j]);
    return MultiPoly::monomial(Monomial::of(Var::q(), static_cast<std::uint32_t>(maj(u * v.inverse()))));
  });
}

}  // namespace

TEST(Matrix, BareissExamples) {
  EXPECT_EQ(det_bareiss(from_rows({{1, P("q")}, {P("q"), 1}})), P("1-q^2"));
  EXPECT_EQ(det_bareiss(PolyMatrix::identity(5)), MultiPoly(1));
  EXPECT_EQ(det_bareiss(s3_example()), P("(1-q^2)^3*(1-q^3)^4"));
}

TEST(Matrix, CofactorExamples) {
  EXPECT_EQ(det_cofactor(from_rows({{1, P("q")}, {P("q"), 1}})), P("1-q^2"));
  EXPECT_EQ(det_cofactor(IntMatrix(1, 1, {BigInt(7)})), BigInt(7));
  EXPECT_THROW(det_cofactor(PolyMatrix::identity(9)), SizeTooLarge);
  std::mt19937_64 rng(4);
  std::uniform_int_distribution<int> d(-9, 9);
  const IntMatrix m = IntMatrix::generate(4, 4, [&](std::size_t, std::size_t) { return BigInt(d(rng)); });
  EXPECT_EQ(det_cofactor(m), det_bareiss(m));
}

TEST(Matrix, ZeroColumnGivesZero) {
  PolyMatrix m = PolyMatrix::identity(3);
  m(1, 1) = MultiPoly();
  EXPECT_TRUE(det_bareiss(m).is_zero());
  EXPECT_THROW(det_bareiss(PolyMatrix(2, 3)), ShapeMismatch);
}

TEST(Matrix, ModularExamples) {
  const ModPrime p101(101);
  const PolyMatrix m = from_rows({{1, P("q")}, {P("q"), 1}});
  const PolyEntry builder = [&](std::size_t i, std::size_t j) { return m(i, j); };
  EXPECT_EQ(det_modular(builder, 2, {{Var::q(), 5}}, p101), 77u);

  const PolyMatrix s3 = s3_example();
  const ModPrime field;
  const std::uint64_t expected = evaluate_mod(P("(1-q^2)^3*(1-q^3)^4"), {{Var::q(), 2}}, field);
  EXPECT_EQ(det_modular([&](std::size_t i, std::size_t j) { return s3(i, j); }, 6, {{Var::q(), 2}}, field), expected);

  const PolyMatrix id = PolyMatrix::identity(7);
  EXPECT_EQ(det_modular([&](std::size_t i, std::size_t j) { return id(i, j); }, 7, {{Var::q(), 12345}}, field), 1u);
}

TEST(Matrix, ThetaExamples) {
  EXPECT_EQ(theta(PermutationMatrix({0})), P("1-q"));
  EXPECT_EQ(theta(PermutationMatrix({1, 0})), P("1-q^2"));
  EXPECT_EQ(theta(PermutationMatrix({2, 0, 1})), P("1-q^3"));
  EXPECT_EQ(theta(PermutationMatrix({2, 0, 1}).to_matrix()), P("1-q^3"));
}

TEST(MatrixProperty, BareissMatchesCofactor) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> size(1, 6);
  for (int trial = 0; trial < 200; ++trial) {
    const auto n = static_cast<std::size_t>(size(rng));
    const PolyMatrix m = PolyMatrix::generate(n, n, [&](std::size_t, std::size_t) {
      return random_poly(rng, {Var::q()}, 3, 2, 4);
    });
    ASSERT_EQ(det_bareiss(m, Execution::serial), det_cofactor(m)) << "trial " << trial;
    ASSERT_EQ(det_bareiss(m, Execution::parallel), det_bareiss(m, Execution::serial));
  }
}

TEST(MatrixProperty, ModularMatchesEvaluatedSymbolic) {
  std::mt19937_64 rng(6);
  std::uniform_int_distribution<int> size(1, 6);
  const ModPrime field;
  std::uniform_int_distribution<std::uint64_t> coord(1, field.value() - 1);
  for (int trial = 0; trial < 60; ++trial) {
    const auto n = static_cast<std::size_t>(size(rng));
    const PolyMatrix m = PolyMatrix::generate(n, n, [&](std::size_t, std::size_t) {
      return random_poly(rng, {Var::p(), Var::q()}, 3, 2, 4);
    });
    const ModAssignment point{{Var::p(), coord(rng)}, {Var::q(), coord(rng)}};
    const PolyEntry builder = [&](std::size_t i, std::size_t j) { return m(i, j); };
    const std::uint64_t expected = evaluate_mod(det_bareiss(m), point, field);
    ASSERT_EQ(det_modular(builder, n, point, field, Execution::serial), expected);
    ASSERT_EQ(det_modular(builder, n, point, field, Execution::parallel), expected);
  }
}

TEST(MatrixProperty, DeterminantIsMultiplicative) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> d(-5, 5);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + trial % 5;
    const auto gen = [&](std::size_t, std::size_t) { return BigInt(d(rng)); };
    const IntMatrix a = IntMatrix::generate(n, n, gen);
    const IntMatrix b = IntMatrix::generate(n, n, gen);
    ASSERT_EQ(det_bareiss(a * b), det_bareiss(a) * det_bareiss(b));
  }
}

TEST(MatrixProperty, ThetaOfPermutationMatrixIsOrbitProduct) {
  for (int n = 1; n <= 5; ++n) {
    const SymmetricGroup grp(n);
    for (const auto& w : grp.elements()) {
      std::vector<std::size_t> images;
      for (int i = 1; i <= n; ++i) images.push_back(static_cast<std::size_t>(w(i) - 1));
      MultiPoly expected(1);
      for (std::size_t len : orbit_sizes(static_cast<std::size_t>(n), [&](std::size_t x) { return images[x]; })) {
        expected *= one_minus_power(Var::q(), static_cast<std::uint32_t>(len));
      }
      ASSERT_EQ(theta(PermutationMatrix(images)), expected) << to_one_line(w);
    }
  }
}
