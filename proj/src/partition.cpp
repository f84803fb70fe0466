#include "qtsym/partition.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>

namespace qtsym {

namespace {

std::vector<int> strip(std::vector<int> parts) {
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] <= 0) throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts[i] > parts[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
    return parts;
}

void generate(int n, int max_part, std::vector<int>& cur, std::vector<Partition>& out) {
    if (n == 0) {
        out.emplace_back(cur);
        return;
    }
    for (int k = std::min(n, max_part); k >= 1; --k) {
        cur.push_back(k);
        generate(n - k, k, cur, out);
        cur.pop_back();
    }
}

}  // namespace

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) : parts_(strip(std::move(parts))) {
    size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::string Partition::to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(parts_[i]);
    }
    return s + "]";
}

bool is_partition(const std::vector<int>& seq) {
    try {
        strip(seq);
        return true;
    } catch (const std::invalid_argument&) {
        return false;
    }
}

const std::vector<Partition>& partitions_of(int n) {
    static std::mutex mu;
    static std::map<int, std::vector<Partition>> table;
    if (n < 0) throw std::invalid_argument("negative degree");
    std::lock_guard lock(mu);
    auto it = table.find(n);
    if (it != table.end()) return it->second;
    std::vector<Partition> out;
    std::vector<int> cur;
    generate(n, n, cur, out);
    return table.emplace(n, std::move(out)).first->second;
}

Partition conjugate(const Partition& p) {
    std::vector<int> c(p.empty() ? 0 : p[0], 0);
    for (int part : p)
        for (int j = 0; j < part; ++j) ++c[j];
    return Partition(std::move(c));
}

bool dominance_leq(const Partition& a, const Partition& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dominance requires equal sizes");
    int sa = 0, sb = 0;
    for (int k = 0; k < std::max(a.length(), b.length()); ++k) {
        sa += a[k];
        sb += b[k];
        if (sa > sb) return false;
    }
    return true;
}

int n_stat(const Partition& mu) {
    int s = 0;
    for (int i = 0; i < mu.length(); ++i) s += i * mu[i];
    return s;
}

std::vector<int> multiplicities(const Partition& p) {
    std::vector<int> m(p.empty() ? 1 : p[0] + 1, 0);
    for (int part : p) ++m[part];
    return m;
}

Integer z_stat(const Partition& p) {
    Integer z = 1;
    auto m = multiplicities(p);
    for (std::size_t i = 1; i < m.size(); ++i) {
        for (int j = 1; j <= m[i]; ++j) z *= static_cast<long>(i) * j;
    }
    return z;
}

int hook_length(const Partition& p, int i, int j) {
    Partition c = conjugate(p);
    return (p[i] - j - 1) + (c[j] - i - 1) + 1;
}

QTPoly hook_product(const Partition& p) {
    Partition c = conjugate(p);
    QTPoly r(1L);
    for (int i = 0; i < p.length(); ++i)
        for (int j = 0; j < p[i]; ++j) {
            int h = (p[i] - j - 1) + (c[j] - i - 1) + 1;
            r *= QTPoly(1L) - QTPoly::monomial(h, 0);
        }
    return r;
}

Partition add_column(int m, const Partition& mu) {
    if (mu.length() > m) throw std::invalid_argument("column shorter than partition length");
    std::vector<int> parts(m);
    for (int i = 0; i < m; ++i) parts[i] = mu[i] + 1;
    return Partition(std::move(parts));
}

Partition add_row(int m, const Partition& mu) {
    if (m < mu[0]) throw std::invalid_argument("row shorter than first part");
    std::vector<int> parts{m};
    parts.insert(parts.end(), mu.begin(), mu.end());
    return Partition(std::move(parts));
}

bool contains(const Partition& lambda, const Partition& mu) {
    if (mu.length() > lambda.length()) return false;
    for (int i = 0; i < mu.length(); ++i)
        if (mu[i] > lambda[i]) return false;
    return true;
}

Partition merge_parts(const Partition& a, const Partition& b) {
    std::vector<int> parts(a.begin(), a.end());
    parts.insert(parts.end(), b.begin(), b.end());
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return Partition(std::move(parts));
}

std::optional<std::pair<int, Partition>> straighten_index(const std::vector<int>& alpha) {
    const int l = static_cast<int>(alpha.size());
    std::vector<int> g(l);
    for (int i = 0; i < l; ++i) g[i] = alpha[i] - i;
    // Insertion sort, counting transpositions.
    int swaps = 0;
    for (int i = 1; i < l; ++i)
        for (int j = i; j > 0 && g[j - 1] < g[j]; --j) {
            std::swap(g[j - 1], g[j]);
            ++swaps;
        }
    for (int i = 1; i < l; ++i)
        if (g[i] == g[i - 1]) return std::nullopt;
    std::vector<int> parts(l);
    for (int i = 0; i < l; ++i) parts[i] = g[i] + i;
    if (l > 0 && parts[l - 1] < 0) return std::nullopt;
    return std::make_pair(swaps % 2 == 0 ? 1 : -1, Partition(std::move(parts)));
}

Composition::Composition(std::initializer_list<int> parts) : Composition(std::vector<int>(parts)) {}

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int x : parts_)
        if (x <= 0) throw std::invalid_argument("composition parts must be positive");
}

int Composition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

}  // namespace qtsym
