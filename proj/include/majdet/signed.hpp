#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "majdet/groups.hpp"

namespace majdet {

/// Signed permutation (eps, w) of B_n. The sign eps_i belongs to the value i,
/// so the letter in position k is eps_{w(k)} * w(k).
class SignedPermutation {
 public:
  SignedPermutation() = default;
  SignedPermutation(std::vector<int> signs, Permutation w);
  static SignedPermutation identity(int n);

  int n() const noexcept { return w_.size(); }
  const std::vector<int>& signs() const noexcept { return signs_; }
  const Permutation& perm() const noexcept { return w_; }
  int sign_of_value(int i) const { return signs_[static_cast<std::size_t>(i - 1)]; }
  /// Signed letter in position k (1-based), e.g. -2 for a barred 2.
  int letter(int k) const { return sign_of_value(w_(k)) * w_(k); }

  friend auto operator<=>(const SignedPermutation&, const SignedPermutation&) = default;

 private:
  std::vector<int> signs_;
  Permutation w_;
};

/// (eps, u)(eps', v) = (eps (u.eps'), uv) with (u.eps')_i = eps'_{u^-1(i)}.
SignedPermutation smul(const SignedPermutation& a, const SignedPermutation& b);
SignedPermutation sinverse(const SignedPermutation& a);

/// Sum of A-descents: natural integer order on signed letters, with 0 a descent
/// when the first letter is negative.
int maj_A(const SignedPermutation& g);
/// Sum of B-descents: 0 < 1 < ... < n < n' < ... < 1', with n a descent when
/// the last letter is negative.
int maj_B(const SignedPermutation& g);

struct NegStats {
  std::vector<int> neg;  // ascending
  int nneg = 0;
  int sneg = 0;
};
NegStats neg_stats(const SignedPermutation& g);

/// "2' 1 4 3'"
std::string to_string(const SignedPermutation& g);
/// Accepts "2'14 3'" (one digit per value) or comma-separated values.
SignedPermutation parse_signed(std::string_view text);

/// B_n; elements ordered by permutation (lexicographic), then by the sign vector
/// read as a binary word with '-' as 1.
class SignedGroup {
 public:
  using Element = SignedPermutation;
  explicit SignedGroup(int n);

  int degree() const noexcept { return n_; }
  Element identity() const { return SignedPermutation::identity(n_); }
  Element multiply(const Element& a, const Element& b) const { return smul(a, b); }
  Element invert(const Element& a) const { return sinverse(a); }
  const std::vector<Element>& elements() const noexcept { return elements_; }
  std::size_t index_of(const Element& a) const;
  std::size_t size() const noexcept { return elements_.size(); }

  /// (eps^(k), t_k): t_k with the value k negated.
  Element s(int k) const;
  /// (1, t_k)
  Element u(int k) const;

 private:
  int n_;
  std::vector<Element> elements_;
};

}  // namespace majdet
