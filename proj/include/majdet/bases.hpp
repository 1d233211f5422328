#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "majdet/colored.hpp"
#include "majdet/errors.hpp"
#include "majdet/groups.hpp"
#include "majdet/signed.hpp"

namespace majdet {

/// Ordered elements (g_1, ..., g_k) with exponent bounds (m_1, ..., m_k).
template <class Elem>
struct BasisSpec {
  std::vector<Elem> elements;
  std::vector<int> bounds;
};

using Exponents = std::vector<int>;

/// g_1^{c_1} ... g_k^{c_k}
template <FiniteGroup G>
typename G::Element compose_basis(const G& grp, const BasisSpec<typename G::Element>& spec, const Exponents& c) {
  if (c.size() != spec.elements.size()) throw ShapeMismatch("exponent vector length");
  auto out = grp.identity();
  for (std::size_t i = 0; i < c.size(); ++i) out = grp.multiply(out, power(grp, spec.elements[i], c[i]));
  return out;
}

/// Calls fn(c) for every exponent vector with 0 <= c_i < m_i, last index fastest.
template <class Fn>
void for_each_exponent(const std::vector<int>& bounds, Fn&& fn) {
  for (int b : bounds) {
    if (b <= 0) return;
  }
  Exponents c(bounds.size(), 0);
  while (true) {
    fn(static_cast<const Exponents&>(c));
    std::size_t i = c.size();
    while (i > 0) {
      --i;
      if (++c[i] < bounds[i]) break;
      c[i] = 0;
      if (i == 0) return;
    }
    if (c.empty()) return;
  }
}

/// True iff every element is reached exactly once. Throws CardinalityMismatch
/// unless prod m_i = |G|.
template <FiniteGroup G>
bool verify_basis(const G& grp, const BasisSpec<typename G::Element>& spec) {
  if (spec.elements.size() != spec.bounds.size()) throw ShapeMismatch("basis elements and bounds differ in length");
  std::size_t product = 1;
  for (int b : spec.bounds) product *= static_cast<std::size_t>(b);
  if (product != grp.size()) {
    throw CardinalityMismatch("prod m_i = " + std::to_string(product) + " but |G| = " + std::to_string(grp.size()));
  }
  std::vector<bool> hit(grp.size(), false);
  bool injective = true;
  for_each_exponent(spec.bounds, [&](const Exponents& c) {
    if (!injective) return;
    const std::size_t idx = grp.index_of(compose_basis(grp, spec, c));
    if (hit[idx]) injective = false;
    hit[idx] = true;
  });
  return injective;
}

/// m_i = o(g_i) for every i (does not check the basis property itself).
template <FiniteGroup G>
bool is_perfect(const G& grp, const BasisSpec<typename G::Element>& spec) {
  for (std::size_t i = 0; i < spec.elements.size(); ++i) {
    if (element_order(grp, spec.elements[i]) != static_cast<std::size_t>(spec.bounds[i])) return false;
  }
  return true;
}

/// Brute-force factorization; a test oracle only.
template <FiniteGroup G>
std::optional<Exponents> factor_exhaustive(const G& grp, const BasisSpec<typename G::Element>& spec,
                                           const typename G::Element& g) {
  std::optional<Exponents> found;
  for_each_exponent(spec.bounds, [&](const Exponents& c) {
    if (!found && compose_basis(grp, spec, c) == g) found = c;
  });
  return found;
}

// ------------------------------------------------------------------ families

/// (t_n, ..., t_2) with bounds (n, ..., 2).
BasisSpec<Permutation> sym_basis(int n);
/// (t~_n, ..., t~_1) with bounds (mn, ..., m).
BasisSpec<ColoredPermutation> colored_basis(int n, int m);
/// (t_n, ..., t_2, y^(1), ..., y^(n)) with bounds (n, ..., 2, m, ..., m).
BasisSpec<ColoredPermutation> amaj_basis(int n, int m);
/// (s_1, ..., s_n, u_n, ..., u_2) with bounds (2, ..., 2, n, ..., 2). Not perfect for n >= 2.
BasisSpec<SignedPermutation> signed_basis(int n);
/// (g1, g2) with bounds (n, 2).
BasisSpec<DihedralElement> dihedral_basis(int n);

/// (c_n, ..., c_2) with w = t_n^{c_n} ... t_2^{c_2}; the sum is maj(w).
Exponents factor_sym(const Permutation& w);
/// (c_n, ..., c_1) with g = t~_n^{c_n} ... t~_1^{c_1}; the sum is fmaj(g).
Exponents factor_colored(const ColoredPermutation& g);
/// (c_n, ..., c_2, d_1, ..., d_n); sum of c is amaj(g), sum of d is col(g).
Exponents factor_amaj(const ColoredPermutation& g);
/// (d_1, ..., d_n, c_n, ..., c_2); sum of c is maj_A(g), {i : d_i = 1} = Neg(g).
Exponents factor_signed(const SignedPermutation& g);
/// (c_1, c_2) with h = g1^{c_1} g2^{c_2}.
Exponents factor_dihedral(const DihedralElement& h);

}  // namespace majdet
