#include <gtest/gtest.h>

#include <cstdlib>

#include "majdet/cyclo.hpp"
#include "majdet/errors.hpp"
#include "majdet/poly.hpp"
#include "test_support.hpp"

using namespace majdet;
using majdet::testing::P;
using majdet::testing::random_poly;

TEST(Poly, AddExamples) {
  EXPECT_EQ(P("1-q") + P("q"), MultiPoly(1));
  EXPECT_EQ(P("1+q") + P("1+q"), P("2+2*q"));
  EXPECT_EQ(MultiPoly() + P("1-q^2"), P("1-q^2"));
}

TEST(Poly, MulExamples) {
  EXPECT_EQ(P("1+q") * P("1-q"), P("1-q^2"));
  EXPECT_EQ(P("1+q+q^2") * P("1-q"), P("1-q^3"));
  EXPECT_EQ(P("1+q*x1") * P("1+q*x2"), P("1+q*x1+q*x2+q^2*x1*x2"));
}

TEST(Poly, CanonicalFormIndependentOfConstructionOrder) {
  const MultiPoly a = P("q^3 - 2*p*q + 5");
  const MultiPoly b = P("5") + P("q^3") - P("2*q*p");
  EXPECT_EQ(a, b);
  std::vector<MultiPoly::Term> t1{{Monomial::of(Var::q(), 2), 1}, {Monomial(), 3}, {Monomial::of(Var::q(), 2), 2}};
  std::vector<MultiPoly::Term> t2{{Monomial(), 3}, {Monomial::of(Var::q(), 2), 3}};
  EXPECT_EQ(MultiPoly::from_terms(t1), MultiPoly::from_terms(t2));
  const MultiPoly merged = MultiPoly::from_terms(t1);
  for (const auto& t : merged.terms()) EXPECT_NE(t.coeff, 0);
}

TEST(Poly, ExactDivExamples) {
  EXPECT_EQ(exact_div(P("1-q^4"), P("1-q^2")), P("1+q^2"));
  const MultiPoly big = P("1-q^2").pow(3) * P("1-q^3").pow(4);
  const MultiPoly quotient = exact_div(big, P("1-q^2"));
  EXPECT_EQ(quotient * P("1-q^2"), big);
  EXPECT_EQ(quotient, P("1-q^2").pow(2) * P("1-q^3").pow(4));
  EXPECT_THROW(exact_div(P("1-q^2"), P("1-q^3")), NotDivisible);
}

TEST(Poly, EvaluateExamples) {
  EXPECT_EQ(evaluate(P("1-q^2"), {{Var::q(), 3}}), -8);
  const MultiPoly big = P("1-q^2").pow(3) * P("1-q^3").pow(4);
  // Direct integer arithmetic: (-3)^3 (-7)^4 = -64827 = 15 (mod 101).
  const BigInt direct = BigInt(-27) * 2401;
  EXPECT_EQ(direct, -64827);
  EXPECT_EQ(evaluate(big, {{Var::q(), 2}}, 101), 15);
  EXPECT_EQ(evaluate(big, {{Var::q(), 2}}), direct);
  EXPECT_EQ(evaluate(MultiPoly(5), {}), 5);
  EXPECT_THROW(evaluate(P("q+p"), {{Var::q(), 1}}), MissingVariable);
}

TEST(Poly, CyclotomicExamples) {
  const Var x = Var::x();
  EXPECT_EQ(cyclotomic(1, x), P("x-1"));
  EXPECT_EQ(cyclotomic(4, x), P("x^2+1"));
  EXPECT_EQ(cyclotomic(6, x), P("x^2-x+1"));
  EXPECT_EQ(exact_div(P("x^6-1"), cyclotomic(1, x) * cyclotomic(2, x) * cyclotomic(3, x)), cyclotomic(6, x));
}

TEST(Poly, CyclotomicProductOverDivisors) {
  for (std::uint32_t m = 1; m <= 30; ++m) {
    MultiPoly prod(1);
    for (std::uint32_t d = 1; d <= m; ++d) {
      if (m % d == 0) prod *= cyclotomic(d);
    }
    EXPECT_EQ(prod, MultiPoly::monomial(Monomial::of(Var::x(), m)) - MultiPoly(1)) << "m = " << m;
  }
}

TEST(Poly, RenderAndParse) {
  EXPECT_EQ(to_string(P("1 - 3*q^2 + q^5")), "1 - 3*q^2 + q^5");
  EXPECT_EQ(to_string(P("q^5+1-3*q^2"), true), "1-3*q^2+q^5");
  EXPECT_EQ(to_string(MultiPoly()), "0");
  for (const char* text : {"1 - q", "p*q_1^2 - 7*x1*x2", "(1-q)^3*(1+q)"}) {
    const MultiPoly a = P(text);
    EXPECT_EQ(P(to_string(a)), a) << text;
  }
  EXPECT_THROW(P("1 + * q"), ParseError);
  EXPECT_THROW(P("1 + z"), ParseError);
}

TEST(PolyProperty, RingAxioms) {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 1000; ++i) {
    const auto a = random_poly(rng, {Var::p(), Var::q()});
    const auto b = random_poly(rng, {Var::p(), Var::q()});
    const auto c = random_poly(rng, {Var::q(), Var::x(1)});
    ASSERT_EQ((a * b) * c, a * (b * c));
    ASSERT_EQ(a * b, b * a);
    ASSERT_EQ(a + b, b + a);
    ASSERT_EQ(a * (b + c), a * b + a * c);
    ASSERT_EQ((a + b) + c, a + (b + c));
    ASSERT_TRUE((a - a).is_zero());
  }
}

TEST(PolyProperty, ExactDivInvertsMul) {
  std::mt19937_64 rng(2);
  for (int i = 0; i < 300; ++i) {
    const auto a = random_poly(rng, {Var::p(), Var::q()});
    auto b = random_poly(rng, {Var::p(), Var::q()});
    if (b.is_zero()) b = MultiPoly(3);
    ASSERT_EQ(exact_div(a * b, b), a);
  }
}

TEST(PolyProperty, EvaluationIsAHomomorphism) {
  std::mt19937_64 rng(3);
  const ModPrime field;
  std::uniform_int_distribution<std::uint64_t> coord(1, field.value() - 1);
  for (int i = 0; i < 300; ++i) {
    const auto a = random_poly(rng, {Var::p(), Var::q()});
    const auto b = random_poly(rng, {Var::p(), Var::q()});
    const ModAssignment point{{Var::p(), coord(rng)}, {Var::q(), coord(rng)}};
    ASSERT_EQ(evaluate_mod(a * b, point, field), field.mul(evaluate_mod(a, point, field), evaluate_mod(b, point, field)));
    ASSERT_EQ(evaluate_mod(a + b, point, field), field.add(evaluate_mod(a, point, field), evaluate_mod(b, point, field)));
    const Assignment big{{Var::p(), BigInt(static_cast<unsigned long>(point.at(Var::p())))},
                         {Var::q(), BigInt(static_cast<unsigned long>(point.at(Var::q())))}};
    ASSERT_EQ(evaluate(a, big, field.value()), BigInt(static_cast<unsigned long>(evaluate_mod(a, point, field))));
  }
}

TEST(Cyclo, MulExamples) {
  const auto x4 = CycloElement::root_power(4, 1);
  EXPECT_EQ(x4 * x4, CycloElement(4, {-1, 0}));
  const auto x3 = CycloElement::root_power(3, 1);
  EXPECT_EQ(x3 * x3, CycloElement(3, {-1, -1}));
  EXPECT_EQ(CycloElement::root_power(5, 2) * CycloElement::root_power(5, 3), CycloElement::integer(5, 1));
  EXPECT_THROW(x3 * x4, ConductorMismatch);
}

TEST(Cyclo, LengthIsTotient) {
  for (std::uint32_t m = 1; m <= 30; ++m) {
    EXPECT_EQ(CycloElement(m).coeffs().size(), euler_phi(m));
  }
  EXPECT_EQ(euler_phi(12), 4u);
}

TEST(CycloProperty, RootOfUnityHasOrderM) {
  for (std::uint32_t m = 1; m <= 20; ++m) {
    const auto x = CycloElement::root_power(m, 1);
    EXPECT_EQ(x.pow(m), CycloElement::integer(m, 1)) << m;
    for (std::uint32_t k = 1; k < m; ++k) EXPECT_NE(x.pow(k), CycloElement::integer(m, 1)) << m << " " << k;
  }
}

TEST(Modular, PrimeFromEnvironment) {
  ::setenv("MAJDET_PRIME", "101", 1);
  EXPECT_EQ(prime_from_environment(), 101u);
  ::setenv("MAJDET_PRIME", "100", 1);
  EXPECT_THROW(prime_from_environment(), InvalidArgument);
  ::unsetenv("MAJDET_PRIME");
  EXPECT_EQ(prime_from_environment(), std::nullopt);
  EXPECT_TRUE(is_prime_u64(kDefaultPrime));
  EXPECT_FALSE(is_prime_u64(1));
}
