#pragma once

#include <cstddef>
#include <cstdint>
#include <exception>
#include <functional>
#include <utility>
#include <vector>

#include "majdet/errors.hpp"
#include "majdet/modular.hpp"
#include "majdet/poly.hpp"

namespace majdet {

/// Selects the OpenMP kernel or the single-threaded reference loop.
enum class Execution { serial, parallel };

/// Exact-ring operations needed by fraction-free elimination.
template <class T>
struct RingTraits;

template <>
struct RingTraits<MultiPoly> {
  static MultiPoly zero() { return {}; }
  static MultiPoly one() { return MultiPoly(1); }
  static bool is_zero(const MultiPoly& a) { return a.is_zero(); }
  static MultiPoly exact_div(const MultiPoly& a, const MultiPoly& b) { return majdet::exact_div(a, b); }
};

template <>
struct RingTraits<BigInt> {
  static BigInt zero() { return 0; }
  static BigInt one() { return 1; }
  static bool is_zero(const BigInt& a) { return a == 0; }
  static BigInt exact_div(const BigInt& a, const BigInt& b) {
    if (b == 0 || !mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t())) {
      throw NotDivisible(a.get_str() + " by " + b.get_str());
    }
    BigInt out;
    mpz_divexact(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return out;
  }
};

/// Dense row-major matrix over a commutative ring.
template <class T>
class RingMatrix {
 public:
  RingMatrix() = default;
  RingMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols, RingTraits<T>::zero()) {}
  RingMatrix(std::size_t rows, std::size_t cols, std::vector<T> entries)
      : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows * cols) throw ShapeMismatch("entry count does not match shape");
  }

  static RingMatrix identity(std::size_t n) {
    RingMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = RingTraits<T>::one();
    return m;
  }

  template <class Fn>
  static RingMatrix generate(std::size_t rows, std::size_t cols, Fn&& entry) {
    RingMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = entry(i, j);
    }
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }

  friend RingMatrix operator*(const RingMatrix& a, const RingMatrix& b) {
    if (a.cols_ != b.rows_) throw ShapeMismatch("matrix product shapes");
    RingMatrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (RingTraits<T>::is_zero(a(i, k))) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += a(i, k) * b(k, j);
      }
    }
    return out;
  }

  friend bool operator==(const RingMatrix&, const RingMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> entries_;
};

using PolyMatrix = RingMatrix<MultiPoly>;
using IntMatrix = RingMatrix<BigInt>;

/// Permutation matrix with a single 1 in row i at column images[i] (0-based).
class PermutationMatrix {
 public:
  explicit PermutationMatrix(std::vector<std::size_t> images);
  std::size_t size() const noexcept { return images_.size(); }
  const std::vector<std::size_t>& images() const noexcept { return images_; }
  PolyMatrix to_matrix() const;

 private:
  std::vector<std::size_t> images_;
};

/// Fraction-free (Bareiss) determinant. The pivot in each column is the first
/// structurally nonzero entry at or below the diagonal.
template <class T>
T det_bareiss(RingMatrix<T> m, Execution exec = Execution::parallel) {
  using R = RingTraits<T>;
  if (!m.is_square()) throw ShapeMismatch("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return R::one();
  bool negate = false;
  T prev = R::one();
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && R::is_zero(m(pivot, k))) ++pivot;
    if (pivot == n) return R::zero();
    if (pivot != k) {
      m.swap_rows(pivot, k);
      negate = !negate;
    }
    const long long first = static_cast<long long>(k) + 1;
    const long long last = static_cast<long long>(n);
    std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic) if (exec == Execution::parallel)
    for (long long ii = first; ii < last; ++ii) {
      const auto i = static_cast<std::size_t>(ii);
      try {
        for (std::size_t j = k + 1; j < n; ++j) {
          T updated = m(k, k) * m(i, j) - m(i, k) * m(k, j);
          m(i, j) = R::exact_div(updated, prev);
        }
        m(i, k) = R::zero();
      } catch (...) {
#pragma omp critical(majdet_bareiss_failure)
        failure = std::current_exception();
      }
    }
    if (failure) std::rethrow_exception(failure);
    prev = m(k, k);
  }
  T det = m(n - 1, n - 1);
  if (negate) det = R::zero() - det;
  return det;
}

/// Laplace expansion along the first row; an independent check for n <= 8.
template <class T>
T det_cofactor(const RingMatrix<T>& m) {
  using R = RingTraits<T>;
  if (!m.is_square()) throw ShapeMismatch("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n > 8) throw SizeTooLarge("cofactor expansion limited to 8x8, got " + std::to_string(n));
  std::vector<std::size_t> cols(n);
  for (std::size_t j = 0; j < n; ++j) cols[j] = j;
  std::function<T(std::size_t, const std::vector<std::size_t>&)> minor =
      [&](std::size_t row, const std::vector<std::size_t>& live) -> T {
    if (live.empty()) return R::one();
    T total = R::zero();
    for (std::size_t idx = 0; idx < live.size(); ++idx) {
      const T& entry = m(row, live[idx]);
      if (R::is_zero(entry)) continue;
      std::vector<std::size_t> rest;
      rest.reserve(live.size() - 1);
      for (std::size_t t = 0; t < live.size(); ++t) {
        if (t != idx) rest.push_back(live[t]);
      }
      T term = entry * minor(row + 1, rest);
      if (idx % 2 == 0) {
        total += term;
      } else {
        total -= term;
      }
    }
    return total;
  };
  return minor(0, cols);
}

/// Entry generator producing residues already reduced modulo the prime.
using ResidueEntry = std::function<std::uint64_t(std::size_t, std::size_t)>;
/// Entry generator producing symbolic entries.
using PolyEntry = std::function<MultiPoly(std::size_t, std::size_t)>;

/// Determinant over Z/p by Gaussian elimination. A vanishing column yields 0.
std::uint64_t det_modular(std::size_t n, const ResidueEntry& entry, const ModPrime& field,
                          Execution exec = Execution::parallel);

/// Determinant of the matrix builder(i, j) evaluated at the point, over Z/p.
std::uint64_t det_modular(const PolyEntry& builder, std::size_t n, const ModAssignment& point,
                          const ModPrime& field, Execution exec = Execution::parallel);

/// det(I - v*M).
MultiPoly theta(const PolyMatrix& m, Var v = Var::q());
MultiPoly theta(const PermutationMatrix& m, Var v = Var::q());

}  // namespace majdet
