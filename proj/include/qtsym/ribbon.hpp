#pragma once

#include <vector>

#include "qtsym/partition.hpp"

namespace qtsym {

/// A ribbon of size m, identified by its descent set (a subset of 1..m-1,
/// stored ascending). Cells are numbered from the bottom-left end; a descent
/// at i means cell i+1 starts a new row above cell i.
struct Ribbon {
    int size = 1;
    std::vector<int> descents;

    friend bool operator==(const Ribbon&, const Ribbon&) = default;
};

struct RibbonShape {
    Partition outer;  // lambda
    Partition inner;  // lambda^{rc}
};

Ribbon make_ribbon(int m, std::vector<int> descents);

/// All 2^{m-1} ribbons of size m, descent sets in binary-counting order.
std::vector<Ribbon> ribbons_of(int m);

RibbonShape ribbon_shape(const Ribbon& r);
/// Inverse of ribbon_shape. Throws when outer/inner is not a ribbon.
Ribbon ribbon_from_shape(const Partition& outer, const Partition& inner);

int maj(const Ribbon& r);
int comaj(const Ribbon& r);

/// A ribbon thickened cell by cell. alpha and beta are unstraightened
/// integer vectors; alpha may have zero or negative entries.
struct GenRibbonTerm {
    Ribbon ribbon;
    std::vector<int> v;
    std::vector<int> alpha;
    std::vector<int> beta;  // column heights, applied left to right as S~_{beta_1} S~_{beta_2} ...
    int sign = 1;
};

GenRibbonTerm gen_ribbon_term(const Ribbon& r, const std::vector<int>& v);

}  // namespace qtsym
