#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "majdet/modular.hpp"
#include "majdet/poly.hpp"

namespace majdet {

/// Default cap on the estimated number of terms of a symbolic expansion.
inline constexpr std::uint64_t kDefaultTermBound = 10'000;

/// unit * prod base_i^exp_i, kept in the order the factors were appended.
class FactoredProduct {
 public:
  struct Factor {
    MultiPoly base;
    std::uint64_t exp = 1;
    friend bool operator==(const Factor&, const Factor&) = default;
  };

  FactoredProduct() = default;
  explicit FactoredProduct(BigInt unit) : unit_(std::move(unit)) {}

  const BigInt& unit() const noexcept { return unit_; }
  const std::vector<Factor>& factors() const noexcept { return factors_; }
  bool empty() const noexcept { return factors_.empty(); }

  /// Appends base^exp; a zero exponent is dropped and constants fold into the unit.
  FactoredProduct& times(const MultiPoly& base, std::uint64_t exp = 1);
  FactoredProduct& times(const FactoredProduct& other);
  FactoredProduct& scale(const BigInt& factor);

  /// Merges equal bases and sorts them; never done implicitly.
  FactoredProduct normalized() const;
  /// Applies a substitution to every base.
  FactoredProduct substituted(const std::map<Var, MultiPoly>& images) const;

  std::vector<Var> variables() const;
  std::uint64_t degree_in(Var v) const;
  std::uint64_t total_degree() const;
  /// Upper bound on the number of terms of the expansion: prod_v (deg_v + 1).
  long double term_estimate() const;

  /// Throws DegreeBoundExceeded when term_estimate() exceeds the bound.
  MultiPoly expand(std::uint64_t term_bound = kDefaultTermBound) const;
  std::uint64_t evaluate_mod(const ModAssignment& point, const ModPrime& field) const;

  /// Structural equality (same unit and factor list); use fp_equal for values.
  friend bool operator==(const FactoredProduct&, const FactoredProduct&) = default;

 private:
  BigInt unit_ = 1;
  std::vector<Factor> factors_;
};

/// "(1-q^2)^3*(1-q^3)^4"; the empty product renders as "1".
std::string to_string(const FactoredProduct& fp);
FactoredProduct parse_factored(std::string_view text);

/// {"factors":[{"base":"1-q^2","exp":3},...]} plus "unit" when it is not 1.
nlohmann::json to_json(const FactoredProduct& fp);
FactoredProduct factored_from_json(const nlohmann::json& j);

/// Exact factorization into cyclotomic polynomials when every base is a
/// constant, +-(1 - v^k), or [k]_v. Keys are (variable, d) for Phi_d(v).
struct CyclotomicForm {
  BigInt unit;
  std::map<std::pair<Var, std::uint32_t>, std::uint64_t> exponents;
  friend bool operator==(const CyclotomicForm&, const CyclotomicForm&) = default;
};
std::optional<CyclotomicForm> cyclotomic_form(const FactoredProduct& fp);

// ------------------------------------------------------------- comparisons

struct ModularOptions {
  std::uint64_t prime = kDefaultPrime;
  int points = 7;
  std::uint64_t seed = 0;
};

/// Schwartz-Zippel point count for a total-degree bound: max(5, ceil(d / 1e6)).
int point_count(std::uint64_t degree_bound);

/// Distinct random points with coordinates in [1, prime), one value per variable,
/// drawn serially from a seeded mt19937_64 so the sequence depends only on the seed.
std::vector<ModAssignment> random_points(const std::vector<Var>& vars, const ModularOptions& options);

enum class CompareMode { symbolic, modular };

/// Symbolic: expand both (or compare cyclotomic forms when expansion is too
/// large). Modular: compare values at random points.
bool fp_equal(const FactoredProduct& a, const FactoredProduct& b, CompareMode mode,
              const ModularOptions& options = {}, std::uint64_t term_bound = kDefaultTermBound);
bool fp_equal(const FactoredProduct& a, const MultiPoly& b, CompareMode mode,
              const ModularOptions& options = {}, std::uint64_t term_bound = kDefaultTermBound);

// ---------------------------------------------------------- closed forms

/// [n]_q! = prod_{k=1}^n [k]_q
MultiPoly q_factorial(int n, Var v = Var::q());

/// prod_{k=2}^n (1-q^k)^{n!(k-1)/k}
FactoredProduct rhs_maj(int n);
/// prod_{k=1}^n (1-q^{mk})^{n! m^n (mk-1)/(mk)}
FactoredProduct rhs_fmaj(int n, int m);
/// prod_{k=2}^n (1-p^k)^{n! m^n (k-1)/k} * prod_{k=1}^n (1-q^{mk})^{n! m^{n-1} (m-1)/k}
FactoredProduct rhs_maj_col(int n, int m);
/// (1-q^m)^{n! m^{n-1} (m-1) n} * prod_{k=2}^n (1-p^k)^{n! m^n (k-1)/k}
FactoredProduct rhs_amaj(int n, int m);
/// prod_{k=1}^n (1-q_k^{2k})^{n! 2^{n-1}/k} * prod_{k=2}^n (1-p^k)^{n! 2^n (k-1)/k}
FactoredProduct rhs_signed(int n);

enum class SignedSpecialization { nneg, majB, sneg };
/// nneg: q_i -> q; majB: q_i -> q then p -> q; sneg: q_i -> q^i.
FactoredProduct rhs_signed_spec(int n, SignedSpecialization which);
std::optional<SignedSpecialization> parse_specialization(std::string_view name);

/// (1 - x1^n)^{2n-2} (1 - x2^2)^n
FactoredProduct rhs_dihedral(int n);
/// (1-q)^{C(n,2)} ([n]_q!)^{n-1}, with [n]_q! kept as its [k]_q factors.
FactoredProduct rhs_defining(int n);
/// (1-q)^{C(n,2)} ([n]_q!)^{n-2}
FactoredProduct rhs_irrep_standard(int n);
/// (1-q)(1-q^3)(1-q^4)^2
FactoredProduct rhs_irrep_22();

/// numerator / denominator as a machine integer; throws NonIntegerExponent
/// unless the division is exact and the quotient fits.
std::uint64_t checked_exponent(const BigInt& numerator, const BigInt& denominator);

}  // namespace majdet
