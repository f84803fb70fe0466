#include "qtsym/qt_bases.hpp"

#include <atomic>
#include <thread>

#include "qtsym/operators.hpp"
#include "qtsym/oracle.hpp"
#include "qtsym/ribbon_ops.hpp"

namespace qtsym {

namespace {

template <class F>
LinOp cached_op(std::map<int, LinOp>& table, std::mutex& mu, int m, F make) {
    std::lock_guard lock(mu);
    if (auto it = table.find(m); it != table.end()) return it->second;
    return table.emplace(m, make(m)).first->second;
}

LinOp jing_t(int m) {
    static std::mutex mu;
    static std::map<int, LinOp> table;
    return cached_op(table, mu, m, [](int k) { return jing(k, QTPoly::t()); });
}

SymF apply_columns(const Partition& mu, LinOp (*column)(int)) {
    Partition lam = conjugate(mu);
    SymF r = SymF::one();
    for (int i = lam.length() - 1; i >= 0; --i) r = column(lam[i])(r);
    return r;
}

SymF compute_macdonald(const Partition& mu, Engine engine) {
    switch (engine) {
        case Engine::ribbon: return apply_columns(mu, mac_column_op);
        case Engine::twist: return apply_columns(mu, twisted_hl_column_op);
        case Engine::oracle: return oracle::macdonald_axiomatic(mu);
    }
    throw std::logic_error("unknown engine");
}

}  // namespace

std::string engine_name(Engine e) {
    switch (e) {
        case Engine::ribbon: return "ribbon";
        case Engine::twist: return "twist";
        case Engine::oracle: return "oracle";
    }
    return "?";
}

Engine engine_from_name(const std::string& name) {
    if (name == "ribbon") return Engine::ribbon;
    if (name == "twist") return Engine::twist;
    if (name == "oracle") return Engine::oracle;
    throw std::invalid_argument("unknown engine '" + name + "'");
}

QTPoly KostkaTable::entry(const Partition& lambda, const Partition& mu) const {
    auto it = rows.find(mu);
    return it == rows.end() ? QTPoly() : it->second.coeff(lambda);
}

SymF hall_littlewood(const Partition& mu) {
    SymF r = SymF::one();
    for (int i = mu.length() - 1; i >= 0; --i) r = jing_t(mu[i])(r);
    return r;
}

LinOp twisted_hl_column_op(int m) {
    static std::mutex mu;
    static std::map<int, LinOp> table;
    return cached_op(table, mu, m, [](int k) { return qtwist(hl_column_op(k), QTPoly::q()); });
}

SymF macdonald(const Partition& mu, Engine engine) {
    static std::mutex m;
    static std::map<std::pair<Partition, Engine>, SymF> cache;
    auto key = std::make_pair(mu, engine);
    {
        std::lock_guard lock(m);
        if (auto it = cache.find(key); it != cache.end()) return it->second;
    }
    SymF h = compute_macdonald(mu, engine);
    for (const auto& [lambda, c] : h.terms())
        if (!c.is_polynomial())
            throw std::runtime_error("non-polynomial coefficient of s" + lambda.to_string() + " in H" + mu.to_string());
    std::lock_guard lock(m);
    return cache.emplace(std::move(key), std::move(h)).first->second;
}

KostkaTable qt_kostka(int n, Engine engine, int jobs) {
    const auto& mus = partitions_of(n);
    std::vector<SymF> rows(mus.size());
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex fail_mu;
    auto worker = [&] {
        for (std::size_t i; (i = next++) < mus.size();) {
            try {
                rows[i] = macdonald(mus[i], engine);
            } catch (...) {
                std::lock_guard lock(fail_mu);
                if (!failure) failure = std::current_exception();
            }
        }
    };
    const int k = std::max(1, std::min<int>(jobs, static_cast<int>(mus.size())));
    if (k == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int i = 0; i < k; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    if (failure) std::rethrow_exception(failure);
    KostkaTable table{n, engine, {}};
    for (std::size_t i = 0; i < mus.size(); ++i) table.rows.emplace(mus[i], std::move(rows[i]));
    return table;
}

SymF gen_kostka(const std::vector<int>& mu, const Composition& eta) {
    if (eta.size() != static_cast<int>(mu.size())) throw std::invalid_argument("composition must sum to the length of mu");
    std::vector<LinOp> blocks;
    std::size_t pos = 0;
    for (int len : eta.parts()) {
        LinOp s = identity_op();
        for (int j = len - 1; j >= 0; --j) s = bernstein_S(mu[pos + j]) * s;
        blocks.push_back(qtwist(s, QTPoly::q()));
        pos += len;
    }
    SymF r = SymF::one();
    for (auto it = blocks.rbegin(); it != blocks.rend(); ++it) r = (*it)(r);
    return r;
}

SymF twisted_column_composition(const std::vector<Partition>& groups) {
    SymF r = SymF::one();
    for (auto g = groups.rbegin(); g != groups.rend(); ++g) {
        LinOp v = identity_op();
        for (int i = g->length() - 1; i >= 0; --i) v = hl_column_op((*g)[i]) * v;
        r = qtwist(v, QTPoly::q())(r);
    }
    return r;
}

LinOp homogeneous_column_op(int m, bool zero_extend) {
    LinOp::Domain dom = nullptr;
    if (!zero_extend) dom = [m](const Partition& l) { return l.length() <= m; };
    return LinOp(
        [m](const Partition& kappa) {
            SymF hb = convert(SymF::s(kappa), Basis::homogeneous);
            SymF out(Basis::homogeneous);
            for (const auto& [mu, c] : hb.terms())
                if (mu.length() <= m) out.add_term(add_column(m, mu), c);
            return to_schur(out);
        },
        m, std::string(zero_extend ? "homcol0(" : "homcol(") + std::to_string(m) + ")", dom);
}

SymF homogeneous_q_composition(const Partition& lambda) {
    SymF r = SymF::one();
    for (int i = lambda.length() - 1; i >= 0; --i)
        r = qtwist(homogeneous_column_op(lambda[i], true), QTPoly::q())(r);
    return r;
}

SymF homogeneous_q_family(const Partition& lambda) {
    Partition lc = conjugate(lambda);
    QTPoly scale(1L);
    for (int part : lc) scale *= q_pochhammer(part);
    const AlphabetExpr a = AlphabetExpr::x_times(QTRat(QTPoly(1L), QTPoly(1L) - QTPoly::q()));
    SymF closed = to_schur(plethysm(SymF::element(Basis::homogeneous, lc), a, scale));
    if (!(homogeneous_q_composition(lambda) == closed))
        throw std::runtime_error("twisted column composition differs from the closed form for " + lambda.to_string());
    return closed;
}

DualityReport duality_check(const Partition& mu, Engine engine) {
    DualityReport r;
    SymF h = macdonald(mu, engine);
    r.swap_conjugate = swap_qt(h) == omega(macdonald(conjugate(mu), engine));
    const AlphabetExpr a = AlphabetExpr::x_times(QTRat(QTPoly(1L), QTPoly(1L) - QTPoly::q()));
    r.q_equals_t = specialize(h, std::nullopt, QTPoly::q()) == plethysm(SymF::s(mu), a, hook_product(mu));
    return r;
}

}  // namespace qtsym
