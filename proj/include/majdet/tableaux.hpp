#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "majdet/formulas.hpp"
#include "majdet/poly.hpp"

namespace majdet {

/// Weakly decreasing positive parts.
using Partition = std::vector<int>;

/// All partitions of n, largest first in reverse lexicographic order
/// ([3], [2,1], [1,1,1]).
std::vector<Partition> partitions(int n);
/// Throws InvalidArgument unless the parts are positive and weakly decreasing.
void check_partition(const Partition& lambda);
int size_of(const Partition& lambda);
/// Partitions obtained by removing one corner cell.
std::vector<Partition> predecessors(const Partition& lambda);
std::string to_string(const Partition& lambda);
/// "2,2" or "[2,2]".
Partition parse_partition(std::string_view text);

struct StandardTableau {
  Partition shape;
  std::vector<std::vector<int>> rows;
  friend bool operator==(const StandardTableau&, const StandardTableau&) = default;
};

/// All standard tableaux of the shape, ordered by the row sequence of 1, 2, ..., n
/// (entries placed as high as possible come first).
std::vector<StandardTableau> syt(const Partition& lambda);
/// Number of standard tableaux (hook length formula).
std::uint64_t syt_count(const Partition& lambda);
/// k such that k+1 sits in a strictly lower row than k.
std::vector<int> tableau_descents(const StandardTableau& t);

struct CycleType {
  Partition mu;
  int order = 1;  // lcm of the parts
};
CycleType cycle_type(const Partition& mu);

/// (m/mu_1, 2m/mu_1, ..., m, m/mu_2, ..., m, ...)
std::vector<int> b_vector(const CycleType& mu);
/// sum_{k in D(T)} b_mu(k) mod m. Throws ShapeMismatch when |T| != |mu|.
int ind_mu(const StandardTableau& t, const CycleType& mu);
/// ind_mu over all tableaux of lambda, in syt() order.
std::vector<int> cyclic_exponents(const Partition& lambda, const CycleType& mu);

/// det(I - q phi_lambda(t_n)) as prod_j (1 - q w^{e_j}) over Z[w]/Phi_n.
/// Throws NonIntegerResult if a coefficient is not rational.
MultiPoly theta_irrep_cycle(const Partition& lambda);
/// det(I - q phi_lambda(t_i)) via restriction to S_{n-1}, ..., S_i.
MultiPoly theta_irrep_branch(const Partition& lambda, int i);
/// prod_{k=2}^n (1-q^k)^{dim} / theta_k, one exact quotient per k.
FactoredProduct delta_irrep(const Partition& lambda);

}  // namespace majdet
