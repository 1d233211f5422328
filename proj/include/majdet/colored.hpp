#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "majdet/groups.hpp"

namespace majdet {

/// A value of [n] carrying a color in [0, m). Colors order first (higher color
/// is smaller), then values: n > ... > 1 > n' > ... > 1' > n'' > ...
struct ColoredLetter {
  int value = 1;
  int color = 0;
  friend bool operator==(const ColoredLetter&, const ColoredLetter&) = default;
};

bool letter_less(const ColoredLetter& a, const ColoredLetter& b);

/// Element (w, x) of S_n^m. colors()[k-1] is the color shown above w(k).
class ColoredPermutation {
 public:
  ColoredPermutation() = default;
  ColoredPermutation(Permutation w, std::vector<int> colors, int m);
  static ColoredPermutation identity(int n, int m);

  int n() const noexcept { return w_.size(); }
  int m() const noexcept { return m_; }
  const Permutation& perm() const noexcept { return w_; }
  const std::vector<int>& colors() const noexcept { return colors_; }
  /// The letter in position k (1-based).
  ColoredLetter letter(int k) const { return {w_(k), colors_[static_cast<std::size_t>(k - 1)]}; }

  friend auto operator<=>(const ColoredPermutation&, const ColoredPermutation&) = default;

 private:
  Permutation w_;
  std::vector<int> colors_;
  int m_ = 1;
};

/// (g, x)(h, y) = (gh, (x.h) + y) with (x.h)_i = x_{h(i)}. Throws ShapeMismatch.
ColoredPermutation cmul(const ColoredPermutation& a, const ColoredPermutation& b);
ColoredPermutation cinverse(const ColoredPermutation& a);

/// Major index under the colored letter order.
int cmaj(const ColoredPermutation& g);
int col(const ColoredPermutation& g);
/// m * cmaj + col
int fmaj(const ColoredPermutation& g);
/// maj of the underlying permutation.
int amaj(const ColoredPermutation& g);

/// "1' 3 4'' 2'": one prime per unit of color.
std::string to_string(const ColoredPermutation& g);
/// Accepts "1'3 4''2'" style input (one digit per value) or comma-separated
/// multi-digit values ("10'',2,...").
ColoredPermutation parse_colored(std::string_view text, int m);

/// The group S_n^m; elements ordered by permutation (lexicographic), then color
/// vector (lexicographic).
class ColoredGroup {
 public:
  using Element = ColoredPermutation;
  ColoredGroup(int n, int m);

  int degree() const noexcept { return n_; }
  int colors() const noexcept { return m_; }
  Element identity() const { return ColoredPermutation::identity(n_, m_); }
  Element multiply(const Element& a, const Element& b) const { return cmul(a, b); }
  Element invert(const Element& a) const { return cinverse(a); }
  const std::vector<Element>& elements() const noexcept { return elements_; }
  std::size_t index_of(const Element& a) const;
  std::size_t size() const noexcept { return elements_.size(); }

  /// (t_k, b) with b = (1, 0, ..., 0); t_1 is the identity permutation.
  Element t_tilde(int k) const;
  /// (t_k, 0)
  Element t_plain(int k) const;
  /// (identity, e_i)
  Element y(int i) const;
  /// w with all colors 0.
  Element embed(const Permutation& w) const;

 private:
  int n_;
  int m_;
  std::vector<Element> elements_;
};

}  // namespace majdet
