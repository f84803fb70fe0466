#include "qtsym/ribbon_ops.hpp"

#include <algorithm>

#include "qtsym/operators.hpp"

namespace qtsym {

namespace {

// Sorts x_i - i strictly decreasing, tracking the sign; false when two agree.
bool sort_indices(std::vector<int>& x, int& sign) {
    const int l = static_cast<int>(x.size());
    for (int i = 0; i < l; ++i) x[i] -= i;
    for (int i = 1; i < l; ++i)
        for (int j = i; j > 0 && x[j - 1] <= x[j]; --j) {
            if (x[j - 1] == x[j]) return false;
            std::swap(x[j - 1], x[j]);
            sign = -sign;
        }
    for (int i = 0; i < l; ++i) x[i] += i;
    return true;
}

bool swap_indices(std::vector<int>& x, int& sign, std::mt19937& rng) {
    for (;;) {
        std::vector<std::size_t> bad;
        for (std::size_t i = 0; i + 1 < x.size(); ++i)
            if (x[i] < x[i + 1]) bad.push_back(i);
        if (bad.empty()) return true;
        std::size_t i = bad[rng() % bad.size()];
        if (x[i] + 1 == x[i + 1]) return false;
        int a = x[i], b = x[i + 1];
        x[i] = b - 1;
        x[i + 1] = a + 1;
        sign = -sign;
    }
}

StraightenedOp finish(std::vector<int> skew, std::vector<int> columns, int sign) {
    if (!skew.empty() && skew.back() < 0) return {};
    while (!skew.empty() && skew.back() == 0) skew.pop_back();
    return {sign, Partition(std::move(skew)), std::move(columns)};
}

LinOp stilde(int m) {
    static std::mutex mu;
    static std::map<int, LinOp> table;
    std::lock_guard lock(mu);
    auto it = table.find(m);
    if (it == table.end()) it = table.emplace(m, bernstein_Stilde(m)).first;
    return it->second;
}

// e_v-perp s_kappa for a partition v of the thickness entries.
const SymF& e_skew(const Partition& v, const Partition& kappa) {
    static std::mutex mu;
    static std::map<std::pair<Partition, Partition>, SymF> table;
    auto key = std::make_pair(v, kappa);
    {
        std::lock_guard lock(mu);
        if (auto it = table.find(key); it != table.end()) return it->second;
    }
    SymF r = SymF::s(kappa);
    for (int part : v) {
        SymF next(Basis::schur);
        for (const auto& [nu, c] : r.terms()) next += skew_e(part, nu) * c;
        r = std::move(next);
        if (r.is_zero()) break;
    }
    std::lock_guard lock(mu);
    return table.emplace(std::move(key), std::move(r)).first->second;
}

Partition sorted_thickness(const std::vector<int>& v) {
    std::vector<int> p(v);
    std::sort(p.begin(), p.end(), std::greater<>());
    return Partition(std::move(p));
}

void thickness_rec(int len, int k, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (static_cast<int>(cur.size()) == len - 1) {
        cur.push_back(k);
        out.push_back(cur);
        cur.pop_back();
        return;
    }
    for (int x = 0; x <= k; ++x) {
        cur.push_back(x);
        thickness_rec(len, k - x, cur, out);
        cur.pop_back();
    }
}

std::string ribbon_key(const Ribbon& r) {
    std::string s = std::to_string(r.size) + ":";
    for (int d : r.descents) s += std::to_string(d) + ",";
    return s;
}

}  // namespace

StraightenedOp straighten(const std::vector<int>& skew, const std::vector<int>& columns, int sign) {
    std::vector<int> a(skew), c(columns);
    if (sign == 0 || !sort_indices(c, sign) || !sort_indices(a, sign)) return {};
    return finish(std::move(a), std::move(c), sign);
}

StraightenedOp straighten_by_swaps(const std::vector<int>& skew, const std::vector<int>& columns, int sign,
                                   std::mt19937& rng) {
    std::vector<int> a(skew), c(columns);
    if (sign == 0 || !swap_indices(c, sign, rng) || !swap_indices(a, sign, rng)) return {};
    return finish(std::move(a), std::move(c), sign);
}

LinOp straightened_operator(const StraightenedOp& op) {
    if (op.is_zero()) return zero_op();
    static std::mutex mu;
    static std::map<std::tuple<int, Partition, std::vector<int>>, LinOp> table;
    auto key = std::make_tuple(op.sign, op.skew, op.columns);
    std::lock_guard lock(mu);
    if (auto it = table.find(key); it != table.end()) return it->second;
    LinOp r = identity_op();
    for (auto it = op.columns.rbegin(); it != op.columns.rend(); ++it) r = stilde(*it) * r;
    if (!op.skew.empty()) r = skewing_op(SymF::s(op.skew)) * r;
    if (op.sign < 0) r = scale(QTPoly(-1L), r);
    return table.emplace(std::move(key), r).first->second;
}

LinOp gen_ribbon_operator(const Ribbon& r, const std::vector<int>& v) {
    GenRibbonTerm g = gen_ribbon_term(r, v);
    return straightened_operator(straighten(g.alpha, g.beta, g.sign));
}

LinOp ribbon_operator(const Ribbon& r) { return gen_ribbon_operator(r, std::vector<int>(r.size, 0)); }

LinOp hl_column_op(int m) {
    static std::mutex mu;
    static std::map<int, LinOp> table;
    std::lock_guard lock(mu);
    if (auto it = table.find(m); it != table.end()) return it->second;
    auto ribbons = ribbons_of(m);
    LinOp op(
        [ribbons](const Partition& kappa) {
            SymF out(Basis::schur);
            for (const auto& r : ribbons) {
                const SymF& img = ribbon_operator(r).on_schur(kappa);
                if (!img.is_zero()) out += img * QTPoly::monomial(0, comaj(r));
            }
            return out;
        },
        m, "hlcol(" + std::to_string(m) + ")");
    return table.emplace(m, op).first->second;
}

LinOp qtwist_coeff_ribbon(const Ribbon& r, int k) {
    static std::mutex mu;
    static std::map<std::pair<std::string, int>, LinOp> table;
    auto key = std::make_pair(ribbon_key(r), k);
    std::lock_guard lock(mu);
    if (auto it = table.find(key); it != table.end()) return it->second;
    LinOp op(
        [r, k](const Partition& kappa) {
            SymF out(Basis::schur);
            if (k > kappa.size()) return out;
            for (const auto& v : thickness_vectors(r.size, k)) {
                GenRibbonTerm g = gen_ribbon_term(r, v);
                StraightenedOp so = straighten(g.alpha, g.beta, g.sign);
                if (so.is_zero()) continue;
                const SymF& ev = e_skew(sorted_thickness(v), kappa);
                if (ev.is_zero()) continue;
                out += straightened_operator(so)(ev);
            }
            return out;
        },
        r.size, "ribboncoeff(" + ribbon_key(r) + std::to_string(k) + ")");
    return table.emplace(std::move(key), op).first->second;
}

LinOp mac_column_op(int m) {
    static std::mutex mu;
    static std::map<int, LinOp> table;
    std::lock_guard lock(mu);
    if (auto it = table.find(m); it != table.end()) return it->second;
    auto ribbons = ribbons_of(m);
    LinOp op(
        [ribbons](const Partition& kappa) {
            SymF out(Basis::schur);
            for (const auto& r : ribbons)
                for (int k = 0; k <= kappa.size(); ++k) {
                    const SymF& img = qtwist_coeff_ribbon(r, k).on_schur(kappa);
                    if (!img.is_zero()) out += img * QTPoly::monomial(k, comaj(r));
                }
            return out;
        },
        m, "maccol(" + std::to_string(m) + ")");
    return table.emplace(m, op).first->second;
}

std::vector<std::vector<int>> thickness_vectors(int len, int k) {
    std::vector<std::vector<int>> out;
    if (len <= 0) {
        if (k == 0) out.emplace_back();
        return out;
    }
    std::vector<int> cur;
    thickness_rec(len, k, cur, out);
    return out;
}

}  // namespace qtsym
