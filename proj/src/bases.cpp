#include "majdet/bases.hpp"

#include <algorithm>

namespace majdet {

BasisSpec<Permutation> sym_basis(int n) {
  BasisSpec<Permutation> spec;
  for (int k = n; k >= 2; --k) {
    spec.elements.push_back(cycle(k, n));
    spec.bounds.push_back(k);
  }
  return spec;
}

BasisSpec<ColoredPermutation> colored_basis(int n, int m) {
  const ColoredGroup grp(n, m);
  BasisSpec<ColoredPermutation> spec;
  for (int k = n; k >= 1; --k) {
    spec.elements.push_back(grp.t_tilde(k));
    spec.bounds.push_back(m * k);
  }
  return spec;
}

BasisSpec<ColoredPermutation> amaj_basis(int n, int m) {
  BasisSpec<ColoredPermutation> spec;
  for (int k = n; k >= 2; --k) {
    spec.elements.emplace_back(cycle(k, n), std::vector<int>(static_cast<std::size_t>(n), 0), m);
    spec.bounds.push_back(k);
  }
  for (int i = 1; i <= n; ++i) {
    std::vector<int> e(static_cast<std::size_t>(n), 0);
    e[static_cast<std::size_t>(i - 1)] = 1 % m;
    spec.elements.emplace_back(Permutation::identity(n), std::move(e), m);
    spec.bounds.push_back(m);
  }
  return spec;
}

BasisSpec<SignedPermutation> signed_basis(int n) {
  BasisSpec<SignedPermutation> spec;
  for (int k = 1; k <= n; ++k) {
    std::vector<int> signs(static_cast<std::size_t>(n), 1);
    signs[static_cast<std::size_t>(k - 1)] = -1;
    spec.elements.emplace_back(std::move(signs), cycle(k, n));
    spec.bounds.push_back(2);
  }
  for (int k = n; k >= 2; --k) {
    spec.elements.emplace_back(std::vector<int>(static_cast<std::size_t>(n), 1), cycle(k, n));
    spec.bounds.push_back(k);
  }
  return spec;
}

BasisSpec<DihedralElement> dihedral_basis(int n) {
  const DihedralGroup grp(n);
  return {{grp.rotation(), grp.reflection()}, {n, 2}};
}

Exponents factor_sym(const Permutation& w) {
  // t_k^c sends k to k - c, so c_k = k - w(k) is the unique power with
  // t_k^{-c_k} w fixing k; then continue inside S_{k-1}.
  const int n = w.size();
  Exponents c;
  Permutation current = w;
  for (int k = n; k >= 2; --k) {
    const int ck = k - current(k);
    c.push_back(ck);
    if (ck != 0) current = compose(cycle(k, n).pow(-ck), current);
  }
  return c;
}

Exponents factor_colored(const ColoredPermutation& g) {
  const int n = g.n();
  const int m = g.m();
  const ColoredGroup grp(n, m);
  Exponents c;
  ColoredPermutation current = g;
  for (int k = n; k >= 1; --k) {
    const ColoredPermutation step = cinverse(grp.t_tilde(k));
    ColoredPermutation peeled = current;
    int ck = 0;
    // The powers t~_k^{-c} for c in [0, mk) meet the coset of the subgroup
    // generated by t~_{k-1}, ..., t~_1 exactly once: the one fixing k with color 0.
    while (!(peeled.perm()(k) == k && peeled.colors()[static_cast<std::size_t>(k - 1)] == 0)) {
      if (++ck == m * k) throw InvalidArgument("colored factorization failed at k = " + std::to_string(k));
      peeled = cmul(step, peeled);
    }
    c.push_back(ck);
    current = peeled;
  }
  return c;
}

Exponents factor_amaj(const ColoredPermutation& g) {
  // (w, 0)(id, d) = (w, d): the t-part is w and the y-exponents are the colors.
  Exponents c = factor_sym(g.perm());
  c.insert(c.end(), g.colors().begin(), g.colors().end());
  return c;
}

Exponents factor_signed(const SignedPermutation& g) {
  const int n = g.n();
  // The transversal part h has the signed letters of g in increasing order; then
  // g = h (1, v^{-1} w) where v is h's underlying permutation.
  std::vector<int> letters;
  for (int k = 1; k <= n; ++k) letters.push_back(g.letter(k));
  std::sort(letters.begin(), letters.end());
  std::vector<int> values;
  for (int letter : letters) values.push_back(letter < 0 ? -letter : letter);
  const SignedPermutation h(g.signs(), Permutation(std::move(values)));
  const Permutation rest = compose(h.perm().inverse(), g.perm());

  Exponents out;
  for (int i = 1; i <= n; ++i) out.push_back(g.sign_of_value(i) == -1 ? 1 : 0);
  const Exponents c = factor_sym(rest);
  out.insert(out.end(), c.begin(), c.end());
  return out;
}

Exponents factor_dihedral(const DihedralElement& h) {
  const auto [rot, refl] = dihedral_stats(h);
  return {rot, refl};
}

}  // namespace majdet
