#include "majdet/cyclo.hpp"

#include <map>
#include <mutex>

#include "majdet/errors.hpp"

namespace majdet {

namespace {

// Dense coefficients of Phi_m, lowest degree first; monic.
const std::vector<BigInt>& modulus_coeffs(std::uint32_t m) {
  static std::mutex mutex;
  static std::map<std::uint32_t, std::vector<BigInt>> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(m);
  if (it == cache.end()) it = cache.emplace(m, cyclotomic(m, Var::x()).dense(Var::x())).first;
  return it->second;
}

void check_same(const CycloElement& a, const CycloElement& b) {
  if (a.conductor() != b.conductor()) {
    throw ConductorMismatch(std::to_string(a.conductor()) + " vs " + std::to_string(b.conductor()));
  }
}

// Reduces a dense polynomial of any length modulo the monic Phi_m.
std::vector<BigInt> reduce(std::vector<BigInt> poly, std::uint32_t m) {
  const auto& phi = modulus_coeffs(m);
  const std::size_t deg = phi.size() - 1;
  for (std::size_t i = poly.size(); i-- > deg;) {
    if (poly[i] == 0) continue;
    const BigInt lead = poly[i];
    const std::size_t shift = i - deg;
    for (std::size_t j = 0; j <= deg; ++j) {
      if (phi[j] != 0) mpz_submul(poly[shift + j].get_mpz_t(), lead.get_mpz_t(), phi[j].get_mpz_t());
    }
  }
  poly.resize(deg);
  return poly;
}

}  // namespace

std::uint32_t euler_phi(std::uint32_t m) {
  std::uint32_t result = m;
  std::uint32_t n = m;
  for (std::uint32_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

CycloElement::CycloElement(std::uint32_t m) : m_(m), coeffs_(euler_phi(m)) {
  if (m == 0) throw InvalidArgument("conductor must be positive");
}

CycloElement::CycloElement(std::uint32_t m, std::vector<BigInt> coeffs) : m_(m) {
  if (m == 0) throw InvalidArgument("conductor must be positive");
  coeffs_ = reduce(std::move(coeffs), m);
}

CycloElement CycloElement::integer(std::uint32_t m, const BigInt& value) {
  CycloElement out(m);
  out.coeffs_[0] = value;
  return out;
}

CycloElement CycloElement::root_power(std::uint32_t m, std::uint64_t e) {
  std::vector<BigInt> poly(static_cast<std::size_t>(e % m) + 1);
  poly.back() = 1;
  return CycloElement(m, std::move(poly));
}

bool CycloElement::is_zero() const noexcept {
  for (const auto& c : coeffs_) {
    if (c != 0) return false;
  }
  return true;
}

bool CycloElement::is_integer() const noexcept {
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) return false;
  }
  return true;
}

CycloElement CycloElement::operator-() const {
  CycloElement out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

CycloElement& CycloElement::operator+=(const CycloElement& rhs) {
  check_same(*this, rhs);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  return *this;
}

CycloElement& CycloElement::operator-=(const CycloElement& rhs) {
  check_same(*this, rhs);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  return *this;
}

CycloElement cyclo_mul(const CycloElement& a, const CycloElement& b) {
  check_same(a, b);
  const std::size_t n = a.coeffs_.size();
  std::vector<BigInt> prod(2 * n - 1);
  for (std::size_t i = 0; i < n; ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (b.coeffs_[j] != 0) mpz_addmul(prod[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
    }
  }
  return CycloElement(a.m_, std::move(prod));
}

CycloElement CycloElement::pow(std::uint64_t exp) const {
  CycloElement result = integer(m_, 1);
  CycloElement base = *this;
  while (exp != 0) {
    if (exp & 1U) result = cyclo_mul(result, base);
    exp >>= 1U;
    if (exp != 0) base = cyclo_mul(base, base);
  }
  return result;
}

}  // namespace majdet
