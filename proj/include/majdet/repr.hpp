#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "majdet/bases.hpp"
#include "majdet/colored.hpp"
#include "majdet/errors.hpp"
#include "majdet/formulas.hpp"
#include "majdet/groups.hpp"
#include "majdet/matrix.hpp"
#include "majdet/signed.hpp"

namespace majdet {

/// Largest group whose weighted regular matrix is built over MultiPoly by default.
inline constexpr std::size_t kSymbolicThreshold = 24;

/// g -> monomial weight, e.g. q^maj(g).
template <class Elem>
using Weight = std::function<Monomial(const Elem&)>;

/// The weighted regular matrix (weight(u v^-1))_{u,v} stored as an index table
/// into the per-element weights, so entries can be produced lazily.
class RegularTable {
 public:
  template <FiniteGroup G>
  static RegularTable build(const G& grp, const Weight<typename G::Element>& weight,
                            Execution exec = Execution::parallel);

  std::size_t size() const noexcept { return n_; }
  std::size_t index(std::size_t i, std::size_t j) const { return index_[i * n_ + j]; }
  const std::vector<Monomial>& weights() const noexcept { return weights_; }

  /// Throws TooLargeForSymbolic above the threshold.
  PolyMatrix symbolic(std::size_t threshold = kSymbolicThreshold) const;
  PolyEntry entry() const;
  /// det at one point over Z/p.
  std::uint64_t det_mod(const ModAssignment& point, const ModPrime& field, Execution exec = Execution::parallel) const;

 private:
  std::size_t n_ = 0;
  std::vector<std::uint32_t> index_;
  std::vector<Monomial> weights_;
};

template <FiniteGroup G>
RegularTable RegularTable::build(const G& grp, const Weight<typename G::Element>& weight, Execution exec) {
  const auto& elems = grp.elements();
  RegularTable t;
  t.n_ = elems.size();
  t.index_.assign(t.n_ * t.n_, 0);
  t.weights_.resize(t.n_);
  std::vector<typename G::Element> inverses(t.n_);
  for (std::size_t i = 0; i < t.n_; ++i) {
    t.weights_[i] = weight(elems[i]);
    inverses[i] = grp.invert(elems[i]);
  }
  const auto n = static_cast<long long>(t.n_);
#pragma omp parallel for schedule(static) if (exec == Execution::parallel)
  for (long long ii = 0; ii < n; ++ii) {
    const auto i = static_cast<std::size_t>(ii);
    for (std::size_t j = 0; j < t.n_; ++j) {
      t.index_[i * t.n_ + j] = static_cast<std::uint32_t>(grp.index_of(grp.multiply(elems[i], inverses[j])));
    }
  }
  return t;
}

/// Convenience: the symbolic weighted regular matrix.
template <FiniteGroup G>
PolyMatrix regular_matrix(const G& grp, const Weight<typename G::Element>& weight,
                          std::size_t threshold = kSymbolicThreshold) {
  if (grp.size() > threshold) {
    throw TooLargeForSymbolic("|G| = " + std::to_string(grp.size()) + " exceeds " + std::to_string(threshold) +
                              "; use the modular determinant");
  }
  return RegularTable::build(grp, weight).symbolic(threshold);
}

// ------------------------------------------------------------ statistics

Monomial weight_maj(const Permutation& w);
Monomial weight_fmaj(const ColoredPermutation& g);
/// p^maj q^col
Monomial weight_maj_col(const ColoredPermutation& g);
/// p^amaj q^col
Monomial weight_amaj(const ColoredPermutation& g);
/// p^majA prod_{i in Neg} q_i
Monomial weight_signed(const SignedPermutation& g);
/// p^majA q^nneg
Monomial weight_signed_nneg(const SignedPermutation& g);
/// q^majB
Monomial weight_signed_majB(const SignedPermutation& g);
/// p^majA q^sneg
Monomial weight_signed_sneg(const SignedPermutation& g);
/// x1^rot x2^refl
Monomial weight_dihedral(const DihedralElement& h);

// ------------------------------------------------------------ group ring

/// sum_g coeff(g) g with coefficients stored by enumeration index.
template <FiniteGroup G>
class GroupRingElement {
 public:
  explicit GroupRingElement(const G& grp) : grp_(&grp), coeffs_(grp.size()) {}

  static GroupRingElement one(const G& grp) { return term(grp, grp.identity(), MultiPoly(1)); }
  static GroupRingElement term(const G& grp, const typename G::Element& g, const MultiPoly& c) {
    GroupRingElement out(grp);
    out.coeffs_[grp.index_of(g)] = c;
    return out;
  }

  const MultiPoly& coefficient(const typename G::Element& g) const { return coeffs_[grp_->index_of(g)]; }
  const std::vector<MultiPoly>& coefficients() const noexcept { return coeffs_; }

  GroupRingElement& operator+=(const GroupRingElement& rhs) {
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    return *this;
  }
  GroupRingElement& operator-=(const GroupRingElement& rhs) {
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    return *this;
  }
  friend GroupRingElement operator+(GroupRingElement a, const GroupRingElement& b) { return a += b; }
  friend GroupRingElement operator-(GroupRingElement a, const GroupRingElement& b) { return a -= b; }
  friend GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b) {
    const auto& elems = a.grp_->elements();
    GroupRingElement out(*a.grp_);
    for (std::size_t i = 0; i < elems.size(); ++i) {
      if (a.coeffs_[i].is_zero()) continue;
      for (std::size_t j = 0; j < elems.size(); ++j) {
        if (b.coeffs_[j].is_zero()) continue;
        out.coeffs_[a.grp_->index_of(a.grp_->multiply(elems[i], elems[j]))] += a.coeffs_[i] * b.coeffs_[j];
      }
    }
    return out;
  }
  friend bool operator==(const GroupRingElement& a, const GroupRingElement& b) { return a.coeffs_ == b.coeffs_; }

 private:
  const G* grp_;
  std::vector<MultiPoly> coeffs_;
};

/// sum_g weight(g) g
template <FiniteGroup G>
GroupRingElement<G> weighted_sum(const G& grp, const Weight<typename G::Element>& weight) {
  GroupRingElement<G> out(grp);
  for (const auto& g : grp.elements()) out += GroupRingElement<G>::term(grp, g, MultiPoly::monomial(weight(g)));
  return out;
}

/// prod_i (1 + x_i g_i + ... + x_i^{m_i-1} g_i^{m_i-1}) with x_i = Var::x(i).
template <FiniteGroup G>
GroupRingElement<G> basis_product(const G& grp, const BasisSpec<typename G::Element>& spec) {
  auto out = GroupRingElement<G>::one(grp);
  for (std::size_t i = 0; i < spec.elements.size(); ++i) {
    GroupRingElement<G> factor(grp);
    for (int c = 0; c < spec.bounds[i]; ++c) {
      const auto mono = Monomial::of(Var::x(static_cast<int>(i) + 1), static_cast<std::uint32_t>(c));
      factor += GroupRingElement<G>::term(grp, power(grp, spec.elements[i], c), MultiPoly::monomial(mono));
    }
    out = out * factor;
  }
  return out;
}

/// sum_g x^{c(g)} g where c(g) is the exponent vector of g.
template <FiniteGroup G>
GroupRingElement<G> basis_generating_sum(const G& grp, const BasisSpec<typename G::Element>& spec) {
  GroupRingElement<G> out(grp);
  for_each_exponent(spec.bounds, [&](const Exponents& c) {
    std::vector<Monomial::Power> powers;
    for (std::size_t i = 0; i < c.size(); ++i) powers.push_back({Var::x(static_cast<int>(i) + 1), static_cast<std::uint32_t>(c[i])});
    out += GroupRingElement<G>::term(grp, compose_basis(grp, spec, c), MultiPoly::monomial(Monomial::from_powers(powers)));
  });
  return out;
}

/// alpha (1 - x_k g_k) ... (1 - x_1 g_1). For a perfect basis this is
/// prod_i (1 - x_i^{m_i}) times the identity.
template <FiniteGroup G>
GroupRingElement<G> telescoped(const G& grp, const BasisSpec<typename G::Element>& spec, GroupRingElement<G> alpha) {
  for (std::size_t i = spec.elements.size(); i-- > 0;) {
    const auto xi = MultiPoly::variable(Var::x(static_cast<int>(i) + 1));
    alpha = alpha * (GroupRingElement<G>::one(grp) - GroupRingElement<G>::term(grp, spec.elements[i], xi));
  }
  return alpha;
}

// ------------------------------------------------------ permutation actions

/// Matrix of g acting on {0, ..., size-1} with e_x -> e_{apply(x)}.
template <class Apply>
PermutationMatrix action_matrix(std::size_t size, Apply&& apply) {
  std::vector<std::size_t> images(size);
  // Row apply(x) holds its 1 in column x.
  for (std::size_t x = 0; x < size; ++x) images[apply(x)] = x;
  return PermutationMatrix(std::move(images));
}

/// prod_k (1 - v^{|O_k|})
FactoredProduct theta_perm_rep(const std::vector<std::size_t>& orbit_sizes, Var v = Var::q());

/// 2-subsets of [n] in lexicographic order.
std::vector<std::pair<int, int>> pairs_of(int n);
/// Index of w({i, j}) in pairs_of(n).
std::size_t act_on_pair(const Permutation& w, std::size_t pair_index, int n);
PermutationMatrix defining_rep(const Permutation& w);
PermutationMatrix pairs_rep(const Permutation& w);

/// theta of t_k on 2-subsets of [n] by the case formula (odd/even k).
FactoredProduct theta_pairs_formula(int n, int k);

/// (i, j) entry sum_{w(i) = j} q^maj(w).
PolyMatrix defining_matrix(int n);

/// prod_i (1 - x_i^{m_i})^r / theta_i(x_i), with theta_i given in q. Cancels
/// whole factors first, then at the level of cyclotomic factors, and finally
/// by exact division of the expansions.
FactoredProduct delta_general(const std::vector<int>& bounds, std::uint64_t r,
                              const std::vector<FactoredProduct>& thetas);
/// Same with every x_i specialized to q.
FactoredProduct specialize_to_q(const FactoredProduct& fp, std::size_t variables);

/// prod_i (1 - q^{m_i})^{|G| (1 - 1/o_i)}
FactoredProduct delta_regular_closed(const std::vector<int>& bounds, const std::vector<std::size_t>& orders,
                                     std::size_t group_order);

/// theta of g in the regular representation: (1 - q^{o(g)})^{|G|/o(g)}.
FactoredProduct theta_regular(std::size_t order, std::size_t group_order, Var v = Var::q());

// ----------------------------------------------------------- dihedral irreps

struct DihedralIrrep {
  int d = 3;
  IntMatrix rotation;    // companion matrix of Phi_d
  IntMatrix reflection;  // anti-diagonal
  MultiPoly theta_rotation;    // q^l Phi_d(1/q)
  FactoredProduct theta_reflection;
};

/// Requires d | n and d >= 3; throws InvalidDivisor otherwise.
DihedralIrrep dihedral_irrep(int n, int d);
/// rho^rot A^refl
IntMatrix dihedral_irrep_matrix(const DihedralIrrep& rep, const DihedralElement& h);

/// det(sum_h weight(h) phi(h)) for a matrix representation over Z.
template <FiniteGroup G, class Rep>
MultiPoly represented_determinant(const G& grp, const Weight<typename G::Element>& weight, Rep&& phi) {
  PolyMatrix sum;
  bool first = true;
  for (const auto& g : grp.elements()) {
    const IntMatrix m = phi(g);
    const MultiPoly w = MultiPoly::monomial(weight(g));
    if (first) {
      sum = PolyMatrix(m.rows(), m.cols());
      first = false;
    }
    for (std::size_t i = 0; i < m.rows(); ++i) {
      for (std::size_t j = 0; j < m.cols(); ++j) {
        if (m(i, j) != 0) sum(i, j) += w * MultiPoly(m(i, j));
      }
    }
  }
  return det_bareiss(std::move(sum), Execution::serial);
}

IntMatrix to_int_matrix(const PermutationMatrix& m);

}  // namespace majdet
