#include "majdet/matrix.hpp"

#include <algorithm>

namespace majdet {

PermutationMatrix::PermutationMatrix(std::vector<std::size_t> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t img : images_) {
    if (img >= images_.size() || seen[img]) throw InvalidArgument("permutation matrix images are not a bijection");
    seen[img] = true;
  }
}

PolyMatrix PermutationMatrix::to_matrix() const {
  PolyMatrix m(size(), size());
  for (std::size_t i = 0; i < size(); ++i) m(i, images_[i]) = MultiPoly(1);
  return m;
}

std::uint64_t det_modular(std::size_t n, const ResidueEntry& entry, const ModPrime& field, Execution exec) {
  if (n == 0) return 1;
  std::vector<std::uint64_t> a(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i * n + j] = entry(i, j) % field.value();
  }
  std::uint64_t det = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && a[pivot * n + k] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != k) {
      std::swap_ranges(a.begin() + static_cast<std::ptrdiff_t>(pivot * n),
                       a.begin() + static_cast<std::ptrdiff_t>(pivot * n + n),
                       a.begin() + static_cast<std::ptrdiff_t>(k * n));
      det = field.neg(det);
    }
    const std::uint64_t pivot_value = a[k * n + k];
    det = field.mul(det, pivot_value);
    const std::uint64_t inv = field.inv(pivot_value);
    const std::uint64_t* pivot_row = a.data() + k * n;
    const long long first = static_cast<long long>(k) + 1;
    const long long last = static_cast<long long>(n);
#pragma omp parallel for schedule(static) if (exec == Execution::parallel && n - k > 64)
    for (long long ii = first; ii < last; ++ii) {
      std::uint64_t* row = a.data() + static_cast<std::size_t>(ii) * n;
      if (row[k] == 0) continue;
      const std::uint64_t factor = field.mul(row[k], inv);
      row[k] = 0;
      for (std::size_t j = k + 1; j < n; ++j) {
        if (pivot_row[j] != 0) row[j] = field.sub(row[j], field.mul(factor, pivot_row[j]));
      }
    }
  }
  return det;
}

std::uint64_t det_modular(const PolyEntry& builder, std::size_t n, const ModAssignment& point,
                          const ModPrime& field, Execution exec) {
  return det_modular(
      n, [&](std::size_t i, std::size_t j) { return evaluate_mod(builder(i, j), point, field); }, field, exec);
}

MultiPoly theta(const PolyMatrix& m, Var v) {
  if (!m.is_square()) throw ShapeMismatch("theta of a non-square matrix");
  const MultiPoly var = MultiPoly::variable(v);
  PolyMatrix shifted = PolyMatrix::generate(m.rows(), m.cols(), [&](std::size_t i, std::size_t j) {
    MultiPoly e = -(var * m(i, j));
    if (i == j) e += MultiPoly(1);
    return e;
  });
  return det_bareiss(std::move(shifted), Execution::serial);
}

MultiPoly theta(const PermutationMatrix& m, Var v) { return theta(m.to_matrix(), v); }

}  // namespace majdet
