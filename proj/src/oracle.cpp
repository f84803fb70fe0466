#include "qtsym/oracle.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <stdexcept>

namespace qtsym::oracle {

namespace {

bool in_skew(const Partition& lambda, const Partition& mu, int i, int j) {
    return j < lambda[i] && j >= mu[i];
}

}  // namespace

long lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu) {
    if (lambda.size() != mu.size() + nu.size())
        throw std::invalid_argument("LR coefficient requires |lambda| = |mu| + |nu|");
    if (!contains(lambda, mu)) return 0;
    // Cells in reverse reading order: rows top to bottom, right to left.
    std::vector<std::pair<int, int>> cells;
    for (int i = 0; i < lambda.length(); ++i)
        for (int j = lambda[i] - 1; j >= mu[i]; --j) cells.push_back({i, j});
    std::vector<std::vector<int>> fill(lambda.length());
    for (int i = 0; i < lambda.length(); ++i) fill[i].assign(lambda[i], 0);
    std::vector<int> count(nu.length() + 1, 0);
    long total = 0;
    std::function<void(std::size_t)> rec = [&](std::size_t k) {
        if (k == cells.size()) {
            ++total;
            return;
        }
        auto [i, j] = cells[k];
        int hi = nu.length();
        if (j + 1 < lambda[i]) hi = std::min(hi, fill[i][j + 1]);
        int lo = 1;
        if (i > 0 && in_skew(lambda, mu, i - 1, j)) lo = fill[i - 1][j] + 1;
        for (int v = lo; v <= hi; ++v) {
            if (count[v] >= nu[v - 1]) continue;
            if (v > 1 && count[v] + 1 > count[v - 1]) continue;
            ++count[v];
            fill[i][j] = v;
            rec(k + 1);
            --count[v];
        }
        fill[i][j] = 0;
    };
    rec(0);
    return total;
}

long kostka_number(const Partition& lambda, const Partition& mu) {
    if (lambda.size() != mu.size()) throw std::invalid_argument("Kostka number requires equal sizes");
    static std::mutex m;
    static std::map<std::pair<Partition, Partition>, long> memo;
    {
        std::lock_guard lock(m);
        if (auto it = memo.find({lambda, mu}); it != memo.end()) return it->second;
    }
    long result = 0;
    if (mu.empty()) {
        result = lambda.empty() ? 1 : 0;
    } else {
        // The largest entry occupies a horizontal strip of size mu_last.
        const int k = mu[mu.length() - 1];
        std::vector<int> rest(mu.begin(), mu.end() - 1);
        Partition mu_rest(rest);
        std::vector<int> cur(lambda.length());
        std::function<void(int, int)> rec = [&](int i, int left) {
            if (i == lambda.length()) {
                if (left == 0) result += kostka_number(Partition(cur), mu_rest);
                return;
            }
            for (int v = lambda[i]; v >= std::max(lambda[i + 1], lambda[i] - left); --v) {
                cur[i] = v;
                rec(i + 1, left - (lambda[i] - v));
            }
        };
        rec(0, k);
    }
    std::lock_guard lock(m);
    memo.emplace(std::make_pair(lambda, mu), result);
    return result;
}

long syt_count(const Partition& lambda) {
    if (lambda.empty()) return 1;
    long total = 0;
    for (int i = 0; i < lambda.length(); ++i) {
        if (lambda[i] > lambda[i + 1]) {
            std::vector<int> p(lambda.begin(), lambda.end());
            --p[i];
            total += syt_count(Partition(p));
        }
    }
    return total;
}

namespace {

using Matrix = std::vector<std::vector<QTPoly>>;

// Fraction-free elimination; returns a nonzero polynomial null vector of a
// matrix whose rank is one less than its column count.
std::vector<QTPoly> null_vector(Matrix m, int cols) {
    const int rows = static_cast<int>(m.size());
    QTPoly prev(1L);
    int rank = 0;
    std::vector<int> pivots;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int p = rank;
        while (p < rows && m[p][col].is_zero()) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[rank]);
        for (int i = rank + 1; i < rows; ++i) {
            for (int j = col + 1; j < cols; ++j)
                m[i][j] = exact_div(m[rank][col] * m[i][j] - m[i][col] * m[rank][j], prev);
            m[i][col] = QTPoly();
        }
        prev = m[rank][col];
        pivots.push_back(col);
        ++rank;
    }
    if (rank != cols - 1) throw std::runtime_error("axiom system has rank " + std::to_string(rank) +
                                                   ", expected " + std::to_string(cols - 1));
    int free_col = 0;
    while (std::find(pivots.begin(), pivots.end(), free_col) != pivots.end()) ++free_col;
    std::vector<QTPoly> x(cols);
    x[free_col] = prev;
    for (int i = rank - 1; i >= 0; --i) {
        const int pc = pivots[i];
        QTPoly s;
        for (int j = pc + 1; j < cols; ++j)
            if (!m[i][j].is_zero() && !x[j].is_zero()) s += m[i][j] * x[j];
        x[pc] = exact_div(-s, m[i][pc]);
    }
    return x;
}

SymF solve(const Partition& mu, const std::map<Partition, SymF>& solved) {
    const int n = mu.size();
    std::vector<Partition> cols;
    for (const auto& l : partitions_of(n))
        if (dominance_leq(l, mu)) cols.push_back(l);

    // <m_l[X/(1-t)], H_nu>_{qt} is the h_l coefficient of H_nu[X(1-q)].
    const AlphabetExpr one_minus_q = AlphabetExpr::x_times(QTRat(QTPoly(1L) - QTPoly::q()));
    Matrix rows;
    for (const auto& [nu, h] : solved) {
        SymF hq = convert(plethysm(h, one_minus_q), Basis::homogeneous);
        std::vector<QTPoly> row;
        for (const auto& l : cols) row.push_back(hq.coeff(l));
        rows.push_back(std::move(row));
    }
    std::vector<QTPoly> c = rows.empty() ? std::vector<QTPoly>{QTPoly(1L)}
                                         : null_vector(rows, static_cast<int>(cols.size()));

    // N = sum c_l (t;t)_n m_l[X/(1-t)] has polynomial Schur coefficients.
    const AlphabetExpr over_one_minus_t =
        AlphabetExpr::x_times(QTRat(QTPoly(1L), QTPoly(1L) - QTPoly::t()));
    SymF num(Basis::schur);
    for (std::size_t i = 0; i < cols.size(); ++i) {
        if (c[i].is_zero()) continue;
        num += plethysm(SymF::element(Basis::monomial, cols[i]), over_one_minus_t, t_pochhammer(n)) * c[i];
    }
    QTPoly norm = num.coeff(Partition{n});
    if (norm.is_zero()) throw std::runtime_error("normalization coefficient vanishes");
    QTPoly tn = QTPoly::monomial(0, n_stat(mu));
    SymF h(Basis::schur);
    for (const auto& [lambda, x] : num.terms()) {
        auto quotient = try_exact_div(x * tn, norm);
        if (!quotient || !quotient->is_polynomial())
            throw std::runtime_error("non-polynomial coefficient for " + lambda.to_string());
        h.add_term(lambda, *quotient);
    }
    return h;
}

}  // namespace

SymF macdonald_axiomatic(const Partition& mu) {
    if (mu.empty()) return SymF::one();
    static std::mutex m;
    static std::map<int, std::map<Partition, SymF>> cache;
    std::lock_guard lock(m);
    auto& solved = cache[mu.size()];
    if (auto it = solved.find(mu); it != solved.end()) return it->second;
    // Increasing lexicographic order extends dominance.
    const auto& ps = partitions_of(mu.size());
    for (auto it = ps.rbegin(); it != ps.rend(); ++it) {
        if (solved.count(*it)) {
            if (*it == mu) break;
            continue;
        }
        std::map<Partition, SymF> before;
        for (const auto& [nu, h] : solved)
            if (nu < *it) before.emplace(nu, h);
        solved.emplace(*it, solve(*it, before));
        if (*it == mu) break;
    }
    return solved.at(mu);
}

}  // namespace qtsym::oracle
