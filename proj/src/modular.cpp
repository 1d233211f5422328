#include "majdet/modular.hpp"

#include <cstdlib>
#include <string>

#include "majdet/errors.hpp"

namespace majdet {

ModPrime::ModPrime(std::uint64_t p) : p_(p), small_(p < (1ULL << 32)) {
  if (p < 2 || p >= (1ULL << 63)) throw InvalidArgument("modulus out of word range");
}

std::uint64_t ModPrime::pow(std::uint64_t base, std::uint64_t exp) const noexcept {
  std::uint64_t result = 1 % p_;
  base %= p_;
  while (exp != 0) {
    if (exp & 1U) result = mul(result, base);
    base = mul(base, base);
    exp >>= 1U;
  }
  return result;
}

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1;
  b %= m;
  while (e != 0) {
    if (e & 1U) r = mulmod(r, b, m);
    b = mulmod(b, b, m);
    e >>= 1U;
  }
  return r;
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t small : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % small == 0) return n == small;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++s;
  }
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::optional<std::uint64_t> prime_from_environment() {
  const char* raw = std::getenv("MAJDET_PRIME");
  if (raw == nullptr || *raw == '\0') return std::nullopt;
  std::uint64_t value = 0;
  try {
    value = std::stoull(raw);
  } catch (const std::exception&) {
    throw InvalidArgument(std::string("MAJDET_PRIME is not an integer: ") + raw);
  }
  if (!is_prime_u64(value) || value >= (1ULL << 63)) {
    throw InvalidArgument(std::string("MAJDET_PRIME is not a word-size prime: ") + raw);
  }
  return value;
}

}  // namespace majdet
