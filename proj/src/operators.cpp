#include "qtsym/operators.hpp"

namespace qtsym {

namespace {

const QTPoly kOne(1L);

// Partitions contained in kappa, all sizes.
std::vector<Partition> subpartitions(const Partition& kappa) {
    std::vector<Partition> out;
    for (int d = 0; d <= kappa.size(); ++d)
        for (const auto& l : partitions_of(d))
            if (contains(kappa, l)) out.push_back(l);
    return out;
}

LinOp::Domain domain_of(const LinOp& v) {
    if (!v.partial()) return nullptr;
    return [v](const Partition& l) { return v.in_domain(l); };
}

}  // namespace

LinOp vertex(int m, const AlphabetExpr& a, int sign) {
    if (!a.x_free()) throw std::invalid_argument("vertex operator alphabet must be X-free");
    auto action = [m, a, sign](const Partition& kappa) {
        SymF out(Basis::schur);
        for (const auto& lambda : subpartitions(kappa)) {
            const int j = m + lambda.size();
            if (j < 0) continue;
            QTPoly c = eval_alphabet_poly(lambda, a);
            if (c.is_zero()) continue;
            if (sign < 0 && j % 2 != 0) c = -c;
            for (const auto& [nu, d] : schur_skew(lambda, kappa).terms()) {
                SymF grown = sign > 0 ? pieri_h(j, nu) : pieri_e(j, nu);
                out += grown * (c * d);
            }
        }
        return out;
    };
    return LinOp(action, m, "vertex(" + std::to_string(m) + ")");
}

LinOp bernstein_S(int m) {
    return LinOp(
        [m](const Partition& mu) {
            std::vector<int> idx{m};
            idx.insert(idx.end(), mu.begin(), mu.end());
            auto r = straighten_index(idx);
            if (!r) return SymF();
            return SymF::s(r->second, QTPoly(static_cast<long>(r->first)));
        },
        m, "S(" + std::to_string(m) + ")");
}

LinOp bernstein_Stilde(int m) {
    return LinOp(
        [m](const Partition& mu) {
            Partition c = conjugate(mu);
            std::vector<int> idx{m};
            idx.insert(idx.end(), c.begin(), c.end());
            auto r = straighten_index(idx);
            if (!r) return SymF();
            return SymF::s(conjugate(r->second), QTPoly(static_cast<long>(r->first)));
        },
        m, "St(" + std::to_string(m) + ")");
}

LinOp bernstein_S_vertex(int m) { return vertex(m, AlphabetExpr::constant(QTRat(-1L)), +1); }

LinOp bernstein_Stilde_vertex(int m) {
    return scale(QTPoly(m % 2 == 0 ? 1L : -1L), vertex(m, AlphabetExpr::constant(QTRat(1L)), -1));
}

LinOp jing(int m, const QTPoly& u) { return vertex(m, AlphabetExpr::constant(QTRat(u - kOne)), +1); }

LinOp dtilde(int m) {
    QTPoly a = (kOne - QTPoly::q()) * (kOne - QTPoly::monomial(0, -1));
    return vertex(m, AlphabetExpr::constant(QTRat(a)), -1);
}

LinOp dtilde_star(int m) {
    QTPoly a = -((kOne - QTPoly::monomial(-1, 0)) * (kOne - QTPoly::t()));
    return vertex(m, AlphabetExpr::constant(QTRat(a)), +1);
}

LinOp flip(const LinOp& v) {
    return LinOp(
        [v](const Partition& kappa) {
            SymF out(Basis::schur);
            for (const auto& lambda : subpartitions(kappa)) {
                const SymF& sk = schur_skew(lambda, kappa);
                if (sk.is_zero()) continue;
                SymF img = v.on_schur(conjugate(lambda));
                if (img.is_zero()) continue;
                if (lambda.size() % 2) img = -img;
                out += multiply(img, sk);
            }
            return out;
        },
        v.degree_shift(), "flip(" + v.name() + ")");
}

LinOp qtwist(const LinOp& v, const QTPoly& u) {
    if (!u.is_monomial()) throw std::invalid_argument("twist parameter must be a monomial");
    const AlphabetExpr a = AlphabetExpr::x_times(QTRat(kOne - u));
    return LinOp(
        [v, u, a](const Partition& kappa) {
            SymF out(Basis::schur);
            for (const auto& lambda : subpartitions(kappa)) {
                const SymF& sk = schur_skew(lambda, kappa);
                if (sk.is_zero()) continue;
                SymF inner = v(plethysm(sk, a));
                if (inner.is_zero()) continue;
                out += multiply(SymF::s(lambda), inner) * u.pow(static_cast<unsigned>(lambda.size()));
            }
            return out;
        },
        v.degree_shift(), "qtwist(" + v.name() + "," + u.to_string() + ")", domain_of(v));
}

LinOp qtwist_coeff(const LinOp& v, int k) {
    return LinOp(
        [v, k](const Partition& kappa) {
            SymF out(Basis::schur);
            if (k > kappa.size()) return out;
            for (const auto& lambda : partitions_of(k)) {
                const SymF& sk = schur_skew(lambda, kappa);
                if (sk.is_zero()) continue;
                for (const auto& mu : subpartitions(lambda)) {
                    SymF arg = multiply(SymF::s(conjugate(mu)), sk);
                    SymF img = v(arg);
                    if (img.is_zero()) continue;
                    SymF term = multiply(schur_skew(mu, lambda), img);
                    out += (mu.size() % 2) ? -term : term;
                }
            }
            return out;
        },
        v.degree_shift(), "qtwist_coeff(" + v.name() + "," + std::to_string(k) + ")", domain_of(v));
}

LinOp ft_conjugate(const LinOp& v) {
    const AlphabetExpr down = AlphabetExpr::x_times(QTRat(kOne - QTPoly::t()));
    const AlphabetExpr up = AlphabetExpr::x_times(QTRat(kOne, kOne - QTPoly::t()));
    return LinOp([v, down, up](const Partition& kappa) { return plethysm(v(plethysm(SymF::s(kappa), down)), up); },
                 v.degree_shift(), "ftconj(" + v.name() + ")");
}

LinOp plethysm_op(const QTPoly& g) {
    const AlphabetExpr a = AlphabetExpr::x_times(QTRat(g));
    return LinOp([a](const Partition& kappa) { return plethysm(SymF::s(kappa), a); }, 0, "pleth");
}

}  // namespace qtsym
