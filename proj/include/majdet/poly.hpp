#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "majdet/modular.hpp"

namespace majdet {

using BigInt = mpz_class;

/// A polynomial variable drawn from the fixed registry
///   p < q < x < x1 < x2 < ... < q_1 < q_2 < ...
/// The numeric id realizes that order.
class Var {
 public:
  static constexpr std::uint16_t kMaxIndexed = 63;

  constexpr Var() = default;

  static constexpr Var p() { return Var(0); }
  static constexpr Var q() { return Var(1); }
  static constexpr Var x() { return Var(2); }
  /// x1, x2, ... (1-based)
  static Var x(int i);
  /// q_1, q_2, ... (1-based)
  static Var q_sub(int i);

  constexpr std::uint16_t id() const noexcept { return id_; }
  std::string name() const;
  static std::optional<Var> from_name(std::string_view name);

  friend constexpr auto operator<=>(Var, Var) = default;

 private:
  constexpr explicit Var(std::uint16_t id) : id_(id) {}
  std::uint16_t id_ = 1;
};

/// Product of variable powers. Powers are sorted by variable and never zero.
class Monomial {
 public:
  struct Power {
    Var var;
    std::uint32_t exp;
    friend bool operator==(const Power&, const Power&) = default;
  };

  Monomial() = default;
  static Monomial of(Var v, std::uint32_t exp = 1);
  /// Builds from arbitrary (var, exp) pairs; merges repeats and drops zeros.
  static Monomial from_powers(std::vector<Power> powers);

  std::span<const Power> powers() const noexcept { return powers_; }
  std::uint32_t exponent(Var v) const noexcept;
  std::uint64_t degree() const noexcept { return degree_; }
  bool is_one() const noexcept { return powers_.empty(); }
  bool divides(const Monomial& other) const noexcept;
  /// The only variable present, if exactly one.
  std::optional<Var> single_variable() const noexcept;

  Monomial operator*(const Monomial& rhs) const;
  /// Requires rhs.divides(*this).
  Monomial operator/(const Monomial& rhs) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  /// Graded lexicographic: total degree first, then exponents in registry order.
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);

 private:
  std::vector<Power> powers_;
  std::uint64_t degree_ = 0;
};

using Assignment = std::map<Var, BigInt>;
using ModAssignment = std::map<Var, std::uint64_t>;

/// Sparse multivariate polynomial with arbitrary-precision integer coefficients.
///
/// Terms are kept sorted ascending under the graded lexicographic order with no
/// zero coefficients, so structural equality is polynomial equality.
class MultiPoly {
 public:
  struct Term {
    Monomial mono;
    BigInt coeff;
    friend bool operator==(const Term&, const Term&) = default;
  };

  MultiPoly() = default;
  MultiPoly(long constant);  // NOLINT(google-explicit-constructor)
  MultiPoly(const BigInt& constant);  // NOLINT(google-explicit-constructor)

  static MultiPoly variable(Var v);
  static MultiPoly monomial(const Monomial& m, const BigInt& coeff = 1);
  /// Canonicalizes: sorts, merges equal monomials, drops zeros.
  static MultiPoly from_terms(std::vector<Term> terms);
  /// sum_k coeffs[k] * v^k
  static MultiPoly from_dense(Var v, std::span<const BigInt> coeffs);

  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;
  bool is_one() const noexcept;
  BigInt constant_term() const;
  BigInt coefficient(const Monomial& m) const;
  std::uint64_t total_degree() const noexcept;
  std::uint32_t degree_in(Var v) const noexcept;
  std::set<Var> variables() const;
  /// Set when every term involves at most one common variable.
  std::optional<Var> univariate_variable() const noexcept;
  /// Dense coefficient vector in v; requires univariate in v (or constant).
  std::vector<BigInt> dense(Var v) const;
  const Term& leading_term() const { return terms_.back(); }

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& rhs);
  MultiPoly& operator-=(const MultiPoly& rhs);
  MultiPoly& operator*=(const MultiPoly& rhs);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend bool operator==(const MultiPoly&, const MultiPoly&) = default;

  MultiPoly pow(std::uint64_t exp) const;

 private:
  std::vector<Term> terms_;
};

/// Quotient c with b * c == a. Throws NotDivisible when b does not divide a.
MultiPoly exact_div(const MultiPoly& a, const MultiPoly& b);

/// Value at an integer point; reduced into [0, modulus) when a modulus is given.
/// Throws MissingVariable when the assignment misses a variable of a.
BigInt evaluate(const MultiPoly& a, const Assignment& point,
                std::optional<std::uint64_t> modulus = std::nullopt);
std::uint64_t evaluate_mod(const MultiPoly& a, const ModAssignment& point, const ModPrime& field);
std::uint64_t evaluate_mod(const Monomial& m, const ModAssignment& point, const ModPrime& field);

/// Replaces each listed variable by a polynomial; other variables stay.
MultiPoly substitute(const MultiPoly& a, const std::map<Var, MultiPoly>& images);

/// Renders e.g. "1 - 3*q^2 + q^5"; compact drops the spaces ("1-3*q^2+q^5").
std::string to_string(const MultiPoly& a, bool compact = false);
std::string to_string(const Monomial& m);

/// Parses + - * ^ ( ) over integers and registered variable names.
MultiPoly parse_poly(std::string_view text);

/// The m-th cyclotomic polynomial in v, by exact division of v^m - 1.
MultiPoly cyclotomic(std::uint32_t m, Var v = Var::x());

/// q-integer [k]_q = 1 + q + ... + q^(k-1).
MultiPoly q_integer(std::uint32_t k, Var v = Var::q());

/// 1 - v^k
MultiPoly one_minus_power(Var v, std::uint32_t k);

}  // namespace majdet
