#pragma once

#include <algorithm>
#include <compare>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace majdet {

/// Permutation of [n] in one-line notation: one_line()[i-1] == w(i).
class Permutation {
 public:
  Permutation() = default;
  /// Throws InvalidArgument unless the values are a bijection on 1..n.
  explicit Permutation(std::vector<int> one_line);
  static Permutation identity(int n);
  /// Builds from disjoint cycles, e.g. {{1,2,3}} for 1 -> 2 -> 3 -> 1.
  static Permutation from_cycles(int n, const std::vector<std::vector<int>>& cycles);

  int size() const noexcept { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[static_cast<std::size_t>(i - 1)]; }
  const std::vector<int>& one_line() const noexcept { return images_; }
  bool is_identity() const noexcept;

  Permutation inverse() const;
  /// g^k for any integer k.
  Permutation pow(long long k) const;

  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

/// (u o v)(i) = u(v(i)). Throws SizeMismatch.
Permutation compose(const Permutation& u, const Permutation& v);
inline Permutation operator*(const Permutation& u, const Permutation& v) { return compose(u, v); }

/// t_k = (k, k-1, ..., 1) in S_n: k -> k-1 -> ... -> 1 -> k. t_1 is the identity.
Permutation cycle(int k, int n);

std::vector<int> descents(const Permutation& w);
int maj(const Permutation& w);
int inversions(const Permutation& w);

/// "314652"; values above 9 switch to comma-separated "10,2,...".
std::string to_one_line(const Permutation& w);
/// "(3,2,1)" with each cycle started at its largest value; "()" for the identity.
std::string to_cycle_notation(const Permutation& w);
Permutation parse_one_line(std::string_view text);

/// Lexicographic rank of w among all permutations of its size.
std::size_t lex_rank(const Permutation& w);

/// What the determinant and basis machinery needs from a group.
template <class G>
concept FiniteGroup = requires(const G& grp, const typename G::Element& a) {
  typename G::Element;
  { grp.identity() } -> std::convertible_to<typename G::Element>;
  { grp.multiply(a, a) } -> std::convertible_to<typename G::Element>;
  { grp.invert(a) } -> std::convertible_to<typename G::Element>;
  { grp.elements() } -> std::convertible_to<const std::vector<typename G::Element>&>;
  { grp.index_of(a) } -> std::convertible_to<std::size_t>;
  { grp.size() } -> std::convertible_to<std::size_t>;
};

template <FiniteGroup G>
typename G::Element power(const G& grp, const typename G::Element& g, long long k) {
  typename G::Element base = k < 0 ? grp.invert(g) : g;
  unsigned long long e = k < 0 ? static_cast<unsigned long long>(-k) : static_cast<unsigned long long>(k);
  typename G::Element result = grp.identity();
  while (e != 0) {
    if (e & 1U) result = grp.multiply(result, base);
    e >>= 1U;
    if (e != 0) base = grp.multiply(base, base);
  }
  return result;
}

/// Least k >= 1 with g^k = identity.
template <FiniteGroup G>
std::size_t element_order(const G& grp, const typename G::Element& g) {
  const auto id = grp.identity();
  auto current = g;
  std::size_t k = 1;
  while (current != id) {
    current = grp.multiply(current, g);
    ++k;
  }
  return k;
}

/// Orbit sizes of <g> on {0, ..., set_size-1}, where apply(x) = g.x; sorted descending.
template <class Apply>
std::vector<std::size_t> orbit_sizes(std::size_t set_size, Apply&& apply) {
  std::vector<bool> seen(set_size, false);
  std::vector<std::size_t> sizes;
  for (std::size_t start = 0; start < set_size; ++start) {
    if (seen[start]) continue;
    std::size_t len = 0;
    std::size_t x = start;
    do {
      seen[x] = true;
      ++len;
      x = apply(x);
    } while (x != start);
    sizes.push_back(len);
  }
  std::sort(sizes.rbegin(), sizes.rend());
  return sizes;
}

/// The symmetric group, enumerated lexicographically on one-line notation.
class SymmetricGroup {
 public:
  using Element = Permutation;
  explicit SymmetricGroup(int n);

  int degree() const noexcept { return n_; }
  Element identity() const { return Permutation::identity(n_); }
  Element multiply(const Element& a, const Element& b) const { return compose(a, b); }
  Element invert(const Element& a) const { return a.inverse(); }
  const std::vector<Element>& elements() const noexcept { return elements_; }
  std::size_t index_of(const Element& a) const { return lex_rank(a); }
  std::size_t size() const noexcept { return elements_.size(); }

 private:
  int n_;
  std::vector<Element> elements_;
};

/// Element g1^rot g2^refl of the dihedral group of order 2n, where g1 = (1 2 ... n)
/// and g2 = (1,n-1)(2,n-2)...(n) is the reflection fixing n.
struct DihedralElement {
  int n = 3;
  int rot = 0;
  int refl = 0;
  friend auto operator<=>(const DihedralElement&, const DihedralElement&) = default;
};

class DihedralGroup {
 public:
  using Element = DihedralElement;
  explicit DihedralGroup(int n);

  int polygon() const noexcept { return n_; }
  Element identity() const { return {n_, 0, 0}; }
  Element rotation() const { return {n_, 1 % n_, 0}; }
  Element reflection() const { return {n_, 0, 1}; }
  Element multiply(const Element& a, const Element& b) const;
  Element invert(const Element& a) const;
  const std::vector<Element>& elements() const noexcept { return elements_; }
  std::size_t index_of(const Element& a) const {
    return static_cast<std::size_t>(a.rot) * 2 + static_cast<std::size_t>(a.refl);
  }
  std::size_t size() const noexcept { return elements_.size(); }

 private:
  int n_;
  std::vector<Element> elements_;
};

/// The realization of h as a permutation of the polygon's vertices.
Permutation to_permutation(const DihedralElement& h);

/// (rot, refl) read off the vertex permutation: rot(h) = h(n) unless h fixes n.
std::pair<int, int> dihedral_stats(const DihedralElement& h);

std::string to_string(const DihedralElement& h);

}  // namespace majdet
