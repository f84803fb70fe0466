#include "qtsym/characters.hpp"

#include <algorithm>
#include <memory>
#include <mutex>

namespace qtsym {

namespace {

using Memo = std::map<std::pair<Partition, Partition>, long>;

long chi_rec(const Partition& lambda, const std::vector<int>& rho, std::size_t pos, Memo& memo) {
    if (pos == rho.size()) return lambda.empty() ? 1 : 0;
    Partition rest(std::vector<int>(rho.begin() + static_cast<long>(pos), rho.end()));
    auto key = std::make_pair(lambda, rest);
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    const int k = rho[pos];
    const int l = lambda.length();
    std::vector<int> beta(l);
    for (int i = 0; i < l; ++i) beta[i] = lambda[i] + (l - 1 - i);
    long total = 0;
    for (int i = 0; i < l; ++i) {
        int target = beta[i] - k;
        if (target < 0 || std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
        int between = 0;
        for (int b : beta)
            if (b > target && b < beta[i]) ++between;
        std::vector<int> nb = beta;
        nb[i] = target;
        std::sort(nb.begin(), nb.end(), std::greater<>());
        std::vector<int> parts(l);
        for (int j = 0; j < l; ++j) parts[j] = nb[j] - (l - 1 - j);
        long sub = chi_rec(Partition(std::move(parts)), rho, pos + 1, memo);
        total += (between % 2 == 0) ? sub : -sub;
    }
    memo.emplace(key, total);
    return total;
}

std::unique_ptr<DegreeTables> build(int n) {
    auto t = std::make_unique<DegreeTables>();
    t->n = n;
    t->parts = partitions_of(n);
    const int np = static_cast<int>(t->parts.size());
    for (int i = 0; i < np; ++i) t->index.emplace(t->parts[i], i);

    Memo memo;
    t->chi.assign(np, std::vector<long>(np));
    for (int i = 0; i < np; ++i)
        for (int j = 0; j < np; ++j) t->chi[i][j] = chi_rec(t->parts[i], t->parts[j].parts(), 0, memo);
    for (const auto& p : t->parts) t->z.push_back(z_stat(p));

    // K_{lambda mu} = <h_mu, s_lambda>, with h_mu expanded in power sums.
    t->kostka.assign(np, std::vector<Integer>(np));
    for (int j = 0; j < np; ++j) {
        std::map<Partition, Rational> hp{{Partition{}, Rational(1)}};
        for (int part : t->parts[j]) {
            std::map<Partition, Rational> next;
            for (const auto& [sigma, c] : hp)
                for (const auto& r : partitions_of(part)) next[merge_parts(sigma, r)] += c / Rational(z_stat(r));
            hp = std::move(next);
        }
        for (int i = 0; i < np; ++i) {
            Rational s = 0;
            for (const auto& [sigma, c] : hp) s += c * t->chi[i][t->index.at(sigma)];
            if (s.get_den() != 1) throw std::logic_error("non-integral Kostka number");
            t->kostka[i][j] = s.get_num();
        }
    }
    // Kostka matrix is upper unitriangular in this order.
    t->kostka_inv.assign(np, std::vector<Integer>(np));
    for (int j = 0; j < np; ++j)
        for (int i = np - 1; i >= 0; --i) {
            Integer s = (i == j) ? 1 : 0;
            for (int k = i + 1; k < np; ++k) s -= t->kostka[i][k] * t->kostka_inv[k][j];
            t->kostka_inv[i][j] = s;
        }
    return t;
}

}  // namespace

const DegreeTables& degree_tables(int n) {
    static std::mutex mu;
    static std::map<int, std::unique_ptr<DegreeTables>> cache;
    {
        std::lock_guard lock(mu);
        if (auto it = cache.find(n); it != cache.end()) return *it->second;
    }
    auto built = build(n);
    std::lock_guard lock(mu);
    auto [it, inserted] = cache.emplace(n, std::move(built));
    return *it->second;
}

long mn_character(const Partition& lambda, const Partition& rho) {
    if (lambda.size() != rho.size()) throw std::invalid_argument("character requires equal sizes");
    const auto& t = degree_tables(lambda.size());
    return t.chi[t.index.at(lambda)][t.index.at(rho)];
}

}  // namespace qtsym
