#pragma once

#include <random>
#include <vector>

#include "qtsym/linop.hpp"
#include "qtsym/ribbon.hpp"

namespace qtsym {

/// sign * s_skew-perp St_{columns[0]} St_{columns[1]} ... in canonical form:
/// skew a partition, columns weakly decreasing. sign == 0 marks the zero operator.
struct StraightenedOp {
    int sign = 0;
    Partition skew;
    std::vector<int> columns;

    bool is_zero() const { return sign == 0; }
    friend bool operator==(const StraightenedOp&, const StraightenedOp&) = default;
};

/// Straightens s_skew-perp and the column product with the relations
/// x_a x_b = -x_{b-1} x_{a+1}, x_a x_{a+1} = 0 (both for Schur indices and for
/// St). A skew index with a negative last entry after sorting gives zero.
StraightenedOp straighten(const std::vector<int>& skew, const std::vector<int>& columns, int sign = 1);
/// Same result reached by rewriting randomly chosen adjacent out-of-order pairs.
StraightenedOp straighten_by_swaps(const std::vector<int>& skew, const std::vector<int>& columns, int sign,
                                   std::mt19937& rng);

/// The operator for a canonical form; shared and memoized per form.
LinOp straightened_operator(const StraightenedOp& op);

LinOp ribbon_operator(const Ribbon& r);
LinOp gen_ribbon_operator(const Ribbon& r, const std::vector<int>& v);

/// sum over ribbons R of size m of t^comaj(R) S^R.
LinOp hl_column_op(int m);
/// sum over |v| = k of S^(R,v) e_v-perp.
LinOp qtwist_coeff_ribbon(const Ribbon& r, int k);
/// sum over R, v of q^|v| t^comaj(R) S^(R,v) e_v-perp. The v-sum is bounded by
/// the degree of each Schur function the operator is applied to.
LinOp mac_column_op(int m);

/// Non-negative integer vectors of length len with sum k, lexicographically.
std::vector<std::vector<int>> thickness_vectors(int len, int k);

}  // namespace qtsym
