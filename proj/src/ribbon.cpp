#include "qtsym/ribbon.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace qtsym {

Ribbon make_ribbon(int m, std::vector<int> descents) {
    if (m < 1) throw std::invalid_argument("ribbon size must be positive");
    std::sort(descents.begin(), descents.end());
    if (std::adjacent_find(descents.begin(), descents.end()) != descents.end())
        throw std::invalid_argument("repeated descent");
    for (int d : descents)
        if (d < 1 || d >= m) throw std::invalid_argument("descent out of range");
    return Ribbon{m, std::move(descents)};
}

std::vector<Ribbon> ribbons_of(int m) {
    if (m < 1) throw std::invalid_argument("ribbon size must be positive");
    std::vector<Ribbon> out;
    for (unsigned mask = 0; mask < (1u << (m - 1)); ++mask) {
        std::vector<int> d;
        for (int i = 1; i < m; ++i)
            if (mask & (1u << (i - 1))) d.push_back(i);
        out.push_back(Ribbon{m, std::move(d)});
    }
    return out;
}

RibbonShape ribbon_shape(const Ribbon& r) {
    std::vector<int> cuts{0};
    cuts.insert(cuts.end(), r.descents.begin(), r.descents.end());
    cuts.push_back(r.size);
    const int rows = static_cast<int>(cuts.size()) - 1;
    // Row sizes bottom to top, then overlap by one column between rows.
    std::vector<int> outer(rows);
    outer[rows - 1] = cuts[1] - cuts[0];
    for (int j = 1; j < rows; ++j) {
        int seg = cuts[j + 1] - cuts[j];
        outer[rows - 1 - j] = outer[rows - j] + seg - 1;
    }
    std::vector<int> inner;
    for (int i = 1; i < rows; ++i) inner.push_back(outer[i] - 1);
    return {Partition(outer), Partition(inner)};
}

Ribbon ribbon_from_shape(const Partition& outer, const Partition& inner) {
    const int rows = outer.length();
    if (rows == 0) throw std::invalid_argument("empty ribbon");
    if (inner.length() > rows - 1) throw std::invalid_argument("not a ribbon");
    for (int i = 0; i + 1 < rows; ++i)
        if (inner[i] != outer[i + 1] - 1) throw std::invalid_argument("not a ribbon");
    int m = outer.size() - inner.size();
    std::vector<int> d;
    int cell = 0;
    for (int i = rows - 1; i >= 1; --i) {
        cell += outer[i] - inner[i];
        d.push_back(cell);
    }
    return make_ribbon(m, d);
}

int maj(const Ribbon& r) { return std::accumulate(r.descents.begin(), r.descents.end(), 0); }

int comaj(const Ribbon& r) { return r.size * (r.size - 1) / 2 - maj(r); }

GenRibbonTerm gen_ribbon_term(const Ribbon& r, const std::vector<int>& v) {
    if (static_cast<int>(v.size()) != r.size) throw std::invalid_argument("thickness length must equal ribbon size");
    for (int x : v)
        if (x < 0) throw std::invalid_argument("thickness entries must be non-negative");
    RibbonShape shape = ribbon_shape(r);
    Partition lam_c = conjugate(shape.outer);

    GenRibbonTerm term{r, v, {}, {}, 1};
    // Skew index: lambda^{rc} minus thickness just after each descent, descents taken largest first.
    std::vector<int> desc(r.descents.rbegin(), r.descents.rend());
    int inner_size = shape.inner.size(), alpha_size = 0;
    for (std::size_t i = 0; i < desc.size(); ++i) {
        int a = shape.inner[i] - v[desc[i]];  // v is 0-based: cell d+1 is v[d]
        term.alpha.push_back(a);
        alpha_size += a;
    }
    // Columns: lambda' plus thickness of the cell starting each column.
    std::vector<int> starts{0};
    for (int j = 1; j < r.size; ++j)
        if (!std::binary_search(r.descents.begin(), r.descents.end(), j)) starts.push_back(j);
    for (int k = 0; k < lam_c.length(); ++k) term.beta.push_back(lam_c[k] + v[starts[k]]);
    term.sign = ((inner_size - alpha_size) % 2 == 0) ? 1 : -1;
    return term;
}

}  // namespace qtsym
