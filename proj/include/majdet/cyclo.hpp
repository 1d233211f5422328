#pragma once

#include <cstdint>
#include <vector>

#include "majdet/poly.hpp"

namespace majdet {

/// Residue class in Z[x] / Phi_m(x), stored densely in the power basis
/// 1, x, ..., x^(phi(m)-1).
class CycloElement {
 public:
  /// Zero of the ring with conductor m.
  explicit CycloElement(std::uint32_t m);
  CycloElement(std::uint32_t m, std::vector<BigInt> coeffs);

  static CycloElement integer(std::uint32_t m, const BigInt& value);
  /// Class of x^e; e is reduced modulo m first.
  static CycloElement root_power(std::uint32_t m, std::uint64_t e);

  std::uint32_t conductor() const noexcept { return m_; }
  const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }
  bool is_zero() const noexcept;
  /// True when every non-constant component vanishes.
  bool is_integer() const noexcept;

  CycloElement operator-() const;
  CycloElement& operator+=(const CycloElement& rhs);
  CycloElement& operator-=(const CycloElement& rhs);
  friend CycloElement operator+(CycloElement a, const CycloElement& b) { return a += b; }
  friend CycloElement operator-(CycloElement a, const CycloElement& b) { return a -= b; }
  /// Product reduced modulo Phi_m. Throws ConductorMismatch.
  friend CycloElement cyclo_mul(const CycloElement& a, const CycloElement& b);
  friend CycloElement operator*(const CycloElement& a, const CycloElement& b) { return cyclo_mul(a, b); }
  friend bool operator==(const CycloElement&, const CycloElement&) = default;

  CycloElement pow(std::uint64_t exp) const;

 private:
  std::uint32_t m_;
  std::vector<BigInt> coeffs_;
};

std::uint32_t euler_phi(std::uint32_t m);

}  // namespace majdet
