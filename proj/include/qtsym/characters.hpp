#pragma once

#include <map>
#include <vector>

#include "qtsym/partition.hpp"

namespace qtsym {

/// Irreducible character chi^lambda evaluated on cycle type rho, by rim-hook
/// removal on beta-numbers. Memoized; throws on unequal sizes.
long mn_character(const Partition& lambda, const Partition& rho);

/// Per-degree transition data between the Schur, power-sum and monomial bases.
/// Rows and columns follow partitions_of(n) (lexicographically decreasing).
struct DegreeTables {
    int n = 0;
    std::vector<Partition> parts;
    std::map<Partition, int> index;
    std::vector<std::vector<long>> chi;      // chi[lambda][rho]
    std::vector<Integer> z;                  // z[rho]
    std::vector<std::vector<Integer>> kostka;      // kostka[lambda][mu] = K_{lambda mu}
    std::vector<std::vector<Integer>> kostka_inv;  // inverse matrix
};

/// Tables for degree n, built once and shared. Thread-safe.
const DegreeTables& degree_tables(int n);

}  // namespace qtsym
