#pragma once

#include <cstdint>
#include <optional>

namespace majdet {

/// Default modulus for all point-evaluation checks: the Mersenne prime 2^31 - 1.
inline constexpr std::uint64_t kDefaultPrime = 2147483647ULL;

/// Arithmetic in Z/p for a word-size prime p (p < 2^63).
class ModPrime {
 public:
  explicit ModPrime(std::uint64_t p = kDefaultPrime);

  std::uint64_t value() const noexcept { return p_; }
  /// True when products of two residues fit in 64 bits.
  bool small() const noexcept { return small_; }

  std::uint64_t reduce(std::int64_t v) const noexcept {
    const auto r = v % static_cast<std::int64_t>(p_);
    return static_cast<std::uint64_t>(r < 0 ? r + static_cast<std::int64_t>(p_) : r);
  }
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const noexcept {
    const std::uint64_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const noexcept {
    return a >= b ? a - b : a + p_ - b;
  }
  std::uint64_t neg(std::uint64_t a) const noexcept { return a == 0 ? 0 : p_ - a; }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const noexcept {
    if (small_) return (a * b) % p_;
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p_);
  }
  std::uint64_t pow(std::uint64_t base, std::uint64_t exp) const noexcept;
  /// Inverse of a nonzero residue (Fermat).
  std::uint64_t inv(std::uint64_t a) const noexcept { return pow(a, p_ - 2); }

 private:
  std::uint64_t p_;
  bool small_;
};

/// Deterministic Miller-Rabin for 64-bit inputs.
bool is_prime_u64(std::uint64_t n);

/// Modulus from the MAJDET_PRIME environment variable, when set and prime.
std::optional<std::uint64_t> prime_from_environment();

}  // namespace majdet
