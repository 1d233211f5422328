#include "majdet/tableaux.hpp"

#include <cctype>
#include <functional>
#include <numeric>

#include "majdet/cyclo.hpp"
#include "majdet/errors.hpp"

namespace majdet {

void check_partition(const Partition& lambda) {
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    if (lambda[i] < 1 || (i > 0 && lambda[i] > lambda[i - 1])) {
      throw InvalidArgument("not a partition: " + to_string(lambda));
    }
  }
}

int size_of(const Partition& lambda) { return std::accumulate(lambda.begin(), lambda.end(), 0); }

std::vector<Partition> partitions(int n) {
  if (n < 0) throw OutOfRange("negative partition size");
  std::vector<Partition> out;
  Partition current;
  std::function<void(int, int)> rec = [&](int rest, int cap) {
    if (rest == 0) {
      out.push_back(current);
      return;
    }
    for (int part = std::min(rest, cap); part >= 1; --part) {
      current.push_back(part);
      rec(rest - part, part);
      current.pop_back();
    }
  };
  rec(n, n);
  return out;
}

std::vector<Partition> predecessors(const Partition& lambda) {
  std::vector<Partition> out;
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    // Row i ends in a corner when the next row is strictly shorter.
    if (i + 1 < lambda.size() && lambda[i + 1] == lambda[i]) continue;
    Partition eta = lambda;
    if (--eta[i] == 0) eta.pop_back();
    out.push_back(std::move(eta));
  }
  return out;
}

std::string to_string(const Partition& lambda) {
  std::string out = "[";
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(lambda[i]);
  }
  return out + "]";
}

Partition parse_partition(std::string_view text) {
  Partition out;
  int current = -1;
  for (char c : text) {
    if (std::isdigit(static_cast<unsigned char>(c)) != 0) {
      current = (current < 0 ? 0 : current * 10) + (c - '0');
    } else if (c == ',' || c == ']' || c == ' ') {
      if (current >= 0) out.push_back(current);
      current = -1;
    } else if (c != '[') {
      throw ParseError("unexpected '" + std::string(1, c) + "' in partition \"" + std::string(text) + "\"");
    }
  }
  if (current >= 0) out.push_back(current);
  if (out.empty()) throw ParseError("empty partition");
  try {
    check_partition(out);
  } catch (const InvalidArgument& e) {
    throw ParseError(e.what());
  }
  return out;
}

std::vector<StandardTableau> syt(const Partition& lambda) {
  check_partition(lambda);
  const int n = size_of(lambda);
  std::vector<StandardTableau> out;
  StandardTableau t{lambda, std::vector<std::vector<int>>(lambda.size())};
  std::function<void(int)> place = [&](int k) {
    if (k > n) {
      out.push_back(t);
      return;
    }
    for (std::size_t r = 0; r < lambda.size(); ++r) {
      const std::size_t len = t.rows[r].size();
      if (static_cast<int>(len) == lambda[r]) continue;
      if (r > 0 && t.rows[r - 1].size() <= len) continue;  // cell above must be filled
      t.rows[r].push_back(k);
      place(k + 1);
      t.rows[r].pop_back();
    }
  };
  place(1);
  return out;
}

std::uint64_t syt_count(const Partition& lambda) {
  check_partition(lambda);
  const int n = size_of(lambda);
  BigInt num;
  mpz_fac_ui(num.get_mpz_t(), static_cast<unsigned long>(n));
  BigInt hooks = 1;
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    for (int j = 0; j < lambda[i]; ++j) {
      int below = 0;
      for (std::size_t r = i + 1; r < lambda.size() && lambda[r] > j; ++r) ++below;
      hooks *= lambda[i] - j - 1 + below + 1;
    }
  }
  return checked_exponent(num, hooks);
}

std::vector<int> tableau_descents(const StandardTableau& t) {
  int n = 0;
  for (const auto& row : t.rows) n += static_cast<int>(row.size());
  std::vector<int> row_of(static_cast<std::size_t>(n) + 2, 0);
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    for (int v : t.rows[r]) row_of[static_cast<std::size_t>(v)] = static_cast<int>(r);
  }
  std::vector<int> out;
  for (int k = 1; k < n; ++k) {
    if (row_of[static_cast<std::size_t>(k + 1)] > row_of[static_cast<std::size_t>(k)]) out.push_back(k);
  }
  return out;
}

CycleType cycle_type(const Partition& mu) {
  check_partition(mu);
  if (mu.empty()) throw InvalidArgument("empty cycle type");
  int m = 1;
  for (int part : mu) m = std::lcm(m, part);
  return {mu, m};
}

std::vector<int> b_vector(const CycleType& mu) {
  std::vector<int> out;
  for (int part : mu.mu) {
    for (int j = 1; j <= part; ++j) out.push_back(j * mu.order / part);
  }
  return out;
}

int ind_mu(const StandardTableau& t, const CycleType& mu) {
  if (size_of(t.shape) != size_of(mu.mu)) {
    throw ShapeMismatch("tableau of size " + std::to_string(size_of(t.shape)) + " with cycle type " + to_string(mu.mu));
  }
  const auto b = b_vector(mu);
  long long total = 0;
  for (int k : tableau_descents(t)) total += b[static_cast<std::size_t>(k - 1)];
  return static_cast<int>(total % mu.order);
}

std::vector<int> cyclic_exponents(const Partition& lambda, const CycleType& mu) {
  if (size_of(lambda) != size_of(mu.mu)) throw ShapeMismatch("|lambda| != |mu|");
  std::vector<int> out;
  for (const auto& t : syt(lambda)) out.push_back(ind_mu(t, mu));
  return out;
}

MultiPoly theta_irrep_cycle(const Partition& lambda) {
  const int n = size_of(lambda);
  if (n == 1) return one_minus_power(Var::q(), 1);
  const auto m = static_cast<std::uint32_t>(n);
  const auto exponents = cyclic_exponents(lambda, cycle_type({n}));
  // Coefficients in q, each an element of Z[w]/Phi_n.
  std::vector<CycloElement> poly{CycloElement::integer(m, 1)};
  for (int e : exponents) {
    const CycloElement root = CycloElement::root_power(m, static_cast<std::uint64_t>(e));
    std::vector<CycloElement> next(poly.size() + 1, CycloElement(m));
    for (std::size_t k = 0; k < poly.size(); ++k) {
      next[k] += poly[k];
      next[k + 1] -= root * poly[k];
    }
    poly = std::move(next);
  }
  std::vector<BigInt> coeffs;
  for (std::size_t k = 0; k < poly.size(); ++k) {
    if (!poly[k].is_integer()) {
      throw NonIntegerResult("q^" + std::to_string(k) + " coefficient of theta for " + to_string(lambda));
    }
    coeffs.push_back(poly[k].coeffs().empty() ? BigInt(0) : poly[k].coeffs()[0]);
  }
  return MultiPoly::from_dense(Var::q(), coeffs);
}

MultiPoly theta_irrep_branch(const Partition& lambda, int i) {
  const int n = size_of(lambda);
  if (i < 2 || i > n) throw OutOfRange("theta branch index " + std::to_string(i) + " for n = " + std::to_string(n));
  if (i == n) return theta_irrep_cycle(lambda);
  MultiPoly out(1);
  for (const auto& eta : predecessors(lambda)) out *= theta_irrep_branch(eta, i);
  return out;
}

FactoredProduct delta_irrep(const Partition& lambda) {
  check_partition(lambda);
  const int n = size_of(lambda);
  const std::uint64_t dim = syt_count(lambda);
  FactoredProduct out;
  for (int k = 2; k <= n; ++k) {
    const MultiPoly numerator = one_minus_power(Var::q(), static_cast<std::uint32_t>(k)).pow(dim);
    out.times(exact_div(numerator, theta_irrep_branch(lambda, k)));
  }
  return out;
}

}  // namespace majdet
