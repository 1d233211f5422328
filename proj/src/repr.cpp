#include "majdet/repr.hpp"

#include <algorithm>
#include <limits>

namespace majdet {

PolyMatrix RegularTable::symbolic(std::size_t threshold) const {
  if (n_ > threshold) {
    throw TooLargeForSymbolic("|G| = " + std::to_string(n_) + " exceeds " + std::to_string(threshold) +
                              "; use the modular determinant");
  }
  std::vector<MultiPoly> values;
  values.reserve(weights_.size());
  for (const auto& w : weights_) values.push_back(MultiPoly::monomial(w));
  return PolyMatrix::generate(n_, n_, [&](std::size_t i, std::size_t j) { return values[index(i, j)]; });
}

PolyEntry RegularTable::entry() const {
  return [this](std::size_t i, std::size_t j) { return MultiPoly::monomial(weights_[index(i, j)]); };
}

std::uint64_t RegularTable::det_mod(const ModAssignment& point, const ModPrime& field, Execution exec) const {
  std::vector<std::uint64_t> values(weights_.size());
  for (std::size_t k = 0; k < weights_.size(); ++k) values[k] = evaluate_mod(weights_[k], point, field);
  return det_modular(
      n_, [&](std::size_t i, std::size_t j) { return values[index(i, j)]; }, field, exec);
}

// ------------------------------------------------------------ statistics

namespace {

Monomial mono2(Var a, int ea, Var b, int eb) {
  return Monomial::from_powers({{a, static_cast<std::uint32_t>(ea)}, {b, static_cast<std::uint32_t>(eb)}});
}

}  // namespace

Monomial weight_maj(const Permutation& w) { return Monomial::of(Var::q(), static_cast<std::uint32_t>(maj(w))); }

Monomial weight_fmaj(const ColoredPermutation& g) {
  return Monomial::of(Var::q(), static_cast<std::uint32_t>(fmaj(g)));
}

Monomial weight_maj_col(const ColoredPermutation& g) { return mono2(Var::p(), cmaj(g), Var::q(), col(g)); }

Monomial weight_amaj(const ColoredPermutation& g) { return mono2(Var::p(), amaj(g), Var::q(), col(g)); }

Monomial weight_signed(const SignedPermutation& g) {
  std::vector<Monomial::Power> powers{{Var::p(), static_cast<std::uint32_t>(maj_A(g))}};
  for (int i : neg_stats(g).neg) powers.push_back({Var::q_sub(i), 1});
  return Monomial::from_powers(std::move(powers));
}

Monomial weight_signed_nneg(const SignedPermutation& g) {
  return mono2(Var::p(), maj_A(g), Var::q(), neg_stats(g).nneg);
}

Monomial weight_signed_majB(const SignedPermutation& g) {
  return Monomial::of(Var::q(), static_cast<std::uint32_t>(maj_B(g)));
}

Monomial weight_signed_sneg(const SignedPermutation& g) {
  return mono2(Var::p(), maj_A(g), Var::q(), neg_stats(g).sneg);
}

Monomial weight_dihedral(const DihedralElement& h) {
  const auto [rot, refl] = dihedral_stats(h);
  return mono2(Var::x(1), rot, Var::x(2), refl);
}

// ------------------------------------------------------ permutation actions

FactoredProduct theta_perm_rep(const std::vector<std::size_t>& orbit_sizes, Var v) {
  FactoredProduct out;
  for (std::size_t s : orbit_sizes) out.times(one_minus_power(v, static_cast<std::uint32_t>(s)));
  return out;
}

std::vector<std::pair<int, int>> pairs_of(int n) {
  std::vector<std::pair<int, int>> out;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) out.emplace_back(i, j);
  }
  return out;
}

namespace {

std::size_t pair_index(int i, int j, int n) {
  if (i > j) std::swap(i, j);
  return static_cast<std::size_t>((i - 1) * (2 * n - i) / 2 + (j - i - 1));
}

}  // namespace

std::size_t act_on_pair(const Permutation& w, std::size_t index, int n) {
  // Invert the lexicographic index.
  int i = 1;
  std::size_t rest = index;
  while (rest >= static_cast<std::size_t>(n - i)) {
    rest -= static_cast<std::size_t>(n - i);
    ++i;
  }
  const int j = i + 1 + static_cast<int>(rest);
  return pair_index(w(i), w(j), n);
}

PermutationMatrix defining_rep(const Permutation& w) {
  return action_matrix(static_cast<std::size_t>(w.size()),
                       [&](std::size_t x) { return static_cast<std::size_t>(w(static_cast<int>(x) + 1) - 1); });
}

PermutationMatrix pairs_rep(const Permutation& w) {
  const int n = w.size();
  return action_matrix(static_cast<std::size_t>(n * (n - 1) / 2),
                       [&](std::size_t x) { return act_on_pair(w, x, n); });
}

FactoredProduct theta_pairs_formula(int n, int k) {
  if (k < 2 || k > n) throw OutOfRange("pairs formula needs 2 <= k <= n");
  const auto q = Var::q();
  const auto uk = static_cast<std::uint32_t>(k);
  FactoredProduct out;
  out.times(one_minus_power(q, 1), static_cast<std::uint64_t>((n - k) * (n - k - 1) / 2));
  out.times(one_minus_power(q, uk), static_cast<std::uint64_t>(n - k));
  if (k % 2 == 1) {
    out.times(one_minus_power(q, uk), static_cast<std::uint64_t>((k - 1) / 2));
  } else {
    out.times(one_minus_power(q, uk), static_cast<std::uint64_t>((k - 2) / 2));
    out.times(one_minus_power(q, uk / 2));
  }
  return out;
}

PolyMatrix defining_matrix(int n) {
  const SymmetricGroup grp(n);
  PolyMatrix m(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  for (const auto& w : grp.elements()) {
    const MultiPoly weight = MultiPoly::monomial(weight_maj(w));
    for (int i = 1; i <= n; ++i) m(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(w(i) - 1)) += weight;
  }
  return m;
}

// ----------------------------------------------------------------- deltas

namespace {

BigInt exact_unit_div(const BigInt& a, const BigInt& b) {
  if (b == 0 || a % b != 0) throw NotDivisible("unit " + a.get_str() + " by " + b.get_str());
  return a / b;
}

// (1 - x^m)^r / theta(x), all in the single variable x.
FactoredProduct divide_one(Var x, std::uint32_t m, std::uint64_t r, const FactoredProduct& theta) {
  const MultiPoly base = one_minus_power(x, m);
  std::uint64_t remaining = r;
  FactoredProduct leftover(theta.unit());
  for (const auto& f : theta.factors()) {
    if (f.base == base) {
      if (f.exp > remaining) throw NotDivisible("theta has (1-x^m) to a power above r");
      remaining -= f.exp;
    } else {
      leftover.times(f.base, f.exp);
    }
  }
  if (leftover.empty()) {
    FactoredProduct out(exact_unit_div(1, leftover.unit()));
    out.times(base, remaining);
    return out;
  }

  FactoredProduct numerator;
  numerator.times(base, remaining);
  const auto num_form = cyclotomic_form(numerator);
  const auto den_form = cyclotomic_form(leftover);
  if (num_form && den_form) {
    auto exps = num_form->exponents;
    for (const auto& [key, e] : den_form->exponents) {
      auto it = exps.find(key);
      if (it == exps.end() || it->second < e) throw NotDivisible("cyclotomic factor Phi_" + std::to_string(key.second));
      it->second -= e;
    }
    BigInt unit = exact_unit_div(num_form->unit, den_form->unit);
    // Regroup as many whole (1 - x^m) as possible, then leftover Phi_d.
    std::uint64_t whole = remaining;
    for (std::uint32_t d = 1; d <= m; ++d) {
      if (m % d == 0) whole = std::min(whole, exps[{x, d}]);
    }
    for (std::uint32_t d = 1; d <= m; ++d) {
      if (m % d == 0) exps[{x, d}] -= whole;
    }
    if (whole % 2 == 1) unit = -unit;  // (1 - x^m) = -prod_{d | m} Phi_d
    FactoredProduct out;
    out.times(base, whole);
    for (const auto& [key, e] : exps) {
      if (e == 0) continue;
      if (key.second == 1) {
        if (e % 2 == 1) unit = -unit;  // Phi_1 = -(1 - x)
        out.times(one_minus_power(x, 1), e);
      } else {
        out.times(cyclotomic(key.second, x), e);
      }
    }
    out.scale(unit);
    return out;
  }

  FactoredProduct out;
  out.times(exact_div(numerator.expand(std::numeric_limits<std::uint64_t>::max()),
                      leftover.expand(std::numeric_limits<std::uint64_t>::max())));
  return out;
}

}  // namespace

FactoredProduct delta_general(const std::vector<int>& bounds, std::uint64_t r,
                              const std::vector<FactoredProduct>& thetas) {
  if (bounds.size() != thetas.size()) throw ShapeMismatch("one theta per basis element");
  FactoredProduct out;
  for (std::size_t i = 0; i < bounds.size(); ++i) {
    const Var x = Var::x(static_cast<int>(i) + 1);
    const FactoredProduct theta = thetas[i].substituted({{Var::q(), MultiPoly::variable(x)}});
    out.times(divide_one(x, static_cast<std::uint32_t>(bounds[i]), r, theta));
  }
  return out;
}

FactoredProduct specialize_to_q(const FactoredProduct& fp, std::size_t variables) {
  std::map<Var, MultiPoly> images;
  for (std::size_t i = 1; i <= variables; ++i) images[Var::x(static_cast<int>(i))] = MultiPoly::variable(Var::q());
  return fp.substituted(images);
}

FactoredProduct delta_regular_closed(const std::vector<int>& bounds, const std::vector<std::size_t>& orders,
                                     std::size_t group_order) {
  if (bounds.size() != orders.size()) throw ShapeMismatch("one order per basis element");
  FactoredProduct out;
  for (std::size_t i = 0; i < bounds.size(); ++i) {
    const BigInt o(static_cast<unsigned long>(orders[i]));
    const std::uint64_t exp = checked_exponent(BigInt(static_cast<unsigned long>(group_order)) * (o - 1), o);
    out.times(one_minus_power(Var::q(), static_cast<std::uint32_t>(bounds[i])), exp);
  }
  return out;
}

FactoredProduct theta_regular(std::size_t order, std::size_t group_order, Var v) {
  FactoredProduct out;
  out.times(one_minus_power(v, static_cast<std::uint32_t>(order)),
            checked_exponent(BigInt(static_cast<unsigned long>(group_order)), BigInt(static_cast<unsigned long>(order))));
  return out;
}

// ----------------------------------------------------------- dihedral irreps

DihedralIrrep dihedral_irrep(int n, int d) {
  if (d < 3 || n % d != 0) {
    throw InvalidDivisor("d = " + std::to_string(d) + " must divide n = " + std::to_string(n) + " and be at least 3");
  }
  const auto phi = cyclotomic(static_cast<std::uint32_t>(d), Var::x()).dense(Var::x());
  const std::size_t l = phi.size() - 1;
  DihedralIrrep rep;
  rep.d = d;
  rep.rotation = IntMatrix(l, l);
  rep.reflection = IntMatrix(l, l);
  for (std::size_t i = 0; i < l; ++i) {
    if (i + 1 < l) rep.rotation(i + 1, i) = 1;
    rep.rotation(i, l - 1) = -phi[i];
    rep.reflection(i, l - 1 - i) = 1;
  }
  std::vector<BigInt> reversed(phi.rbegin(), phi.rend());
  rep.theta_rotation = MultiPoly::from_dense(Var::q(), reversed);
  if (l % 2 == 0) {
    rep.theta_reflection.times(one_minus_power(Var::q(), 2), l / 2);
  } else {
    rep.theta_reflection.times(one_minus_power(Var::q(), 2), (l - 1) / 2);
    rep.theta_reflection.times(one_minus_power(Var::q(), 1));
  }
  return rep;
}

IntMatrix dihedral_irrep_matrix(const DihedralIrrep& rep, const DihedralElement& h) {
  IntMatrix out = IntMatrix::identity(rep.rotation.rows());
  for (int i = 0; i < h.rot; ++i) out = out * rep.rotation;
  if (h.refl == 1) out = out * rep.reflection;
  return out;
}

IntMatrix to_int_matrix(const PermutationMatrix& m) {
  IntMatrix out(m.size(), m.size());
  for (std::size_t i = 0; i < m.size(); ++i) out(i, m.images()[i]) = 1;
  return out;
}

}  // namespace majdet
