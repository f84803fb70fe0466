#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <utility>
#include <stdexcept>
#include <string>
#include <vector>

#include "qtsym/qtpoly.hpp"

namespace qtsym {

/// Weakly decreasing sequence of positive integers. Zeros are dropped on
/// construction; negative or increasing input is rejected.
class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<int> parts);
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    int size() const { return size_; }
    bool empty() const { return parts_.empty(); }
    /// i-th part, 0-based; zero past the end.
    int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }
    auto begin() const { return parts_.begin(); }
    auto end() const { return parts_.end(); }

    std::string to_string() const;

    friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
        return a.parts_ <=> b.parts_;
    }

private:
    std::vector<int> parts_;
    int size_ = 0;
};

/// True when the sequence is weakly decreasing and positive after dropping zeros.
bool is_partition(const std::vector<int>& seq);

/// All partitions of n, lexicographically decreasing: (n) first, (1^n) last.
const std::vector<Partition>& partitions_of(int n);

Partition conjugate(const Partition& p);

/// Dominance order. Throws std::invalid_argument on unequal sizes.
bool dominance_leq(const Partition& a, const Partition& b);

/// Sum of (i-1)*mu_i.
int n_stat(const Partition& mu);

/// prod_i i^{m_i} m_i! over part multiplicities m_i.
Integer z_stat(const Partition& p);

/// prod over cells of (1 - q^{hook length}).
QTPoly hook_product(const Partition& p);

/// Hook length at cell (row i, column j), both 0-based.
int hook_length(const Partition& p, int i, int j);

/// Adds one to each of the first m parts: the partition 1^m|mu. Requires l(mu) <= m.
Partition add_column(int m, const Partition& mu);

/// Prepends a row: (m, mu). Requires m >= mu_1.
Partition add_row(int m, const Partition& mu);

/// mu contained in lambda as diagrams.
bool contains(const Partition& lambda, const Partition& mu);

/// Part multiplicities: result[k] = number of parts equal to k.
std::vector<int> multiplicities(const Partition& p);

/// Union of parts (as used for power-sum products).
Partition merge_parts(const Partition& a, const Partition& b);

/// Signed partition equal to the Jacobi-Trudi determinant indexed by an
/// arbitrary integer vector: sort alpha_i - i decreasingly, a repeated value
/// or a negative final entry gives zero. Returns (sign, lambda) or nullopt.
std::optional<std::pair<int, Partition>> straighten_index(const std::vector<int>& alpha);

/// Ordered sequence of positive integers.
class Composition {
public:
    Composition() = default;
    Composition(std::initializer_list<int> parts);
    explicit Composition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    int size() const;

    friend bool operator==(const Composition&, const Composition&) = default;

private:
    std::vector<int> parts_;
};

}  // namespace qtsym
