#pragma once

#include <map>
#include <string>
#include <vector>

#include "qtsym/linop.hpp"

namespace qtsym {

enum class Engine { ribbon, twist, oracle };

std::string engine_name(Engine e);
/// Throws std::invalid_argument for an unknown name.
Engine engine_from_name(const std::string& name);

/// Schur coefficients of H_mu for every mu of n.
struct KostkaTable {
    int n = 0;
    Engine engine = Engine::ribbon;
    std::map<Partition, SymF> rows;  // mu -> H_mu

    /// Coefficient of s_lambda in H_mu.
    QTPoly entry(const Partition& lambda, const Partition& mu) const;
};

/// Jing composition H_{mu_1} ... H_{mu_l} 1 in the parameter t.
SymF hall_littlewood(const Partition& mu);

/// H_mu[X;q,t], built by the chosen engine and cached per (mu, engine).
/// The ribbon and twist engines add columns of mu, shortest first.
SymF macdonald(const Partition& mu, Engine engine = Engine::ribbon);

/// The q-twisted Hall-Littlewood column operator.
LinOp twisted_hl_column_op(int m);

/// Full table for degree n; jobs > 1 spreads the rows over threads.
KostkaTable qt_kostka(int n, Engine engine = Engine::ribbon, int jobs = 1);

/// H^q_{mu^(1)} ... H^q_{mu^(k)} 1 where mu^(i) are the consecutive blocks of
/// mu cut by eta and H^q_nu is the q-twist of S_{nu_1} ... S_{nu_r}.
SymF gen_kostka(const std::vector<int>& mu, const Composition& eta);

/// Twists of the Hall-Littlewood column compositions H^t_{1^{lambda^(i)}},
/// applied right to left to 1.
SymF twisted_column_composition(const std::vector<Partition>& groups);

/// h_mu -> h_{1^m|mu} for l(mu) <= m. Strict: DomainError on s_lambda with
/// l(lambda) > m. Otherwise extended by h_mu -> 0 for l(mu) > m.
LinOp homogeneous_column_op(int m, bool zero_extend);

/// (q;q)_{lambda'} h_{lambda'}[X/(1-q)], after checking that the twisted
/// zero-extended column operators reproduce it. Throws std::runtime_error
/// on a mismatch.
SymF homogeneous_q_family(const Partition& lambda);
/// The twisted column composition alone.
SymF homogeneous_q_composition(const Partition& lambda);

struct DualityReport {
    bool swap_conjugate = false;  // H_mu[X;t,q] == omega H_mu'[X;q,t]
    bool q_equals_t = false;      // H_mu[X;q,q] == h_mu(q) s_mu[X/(1-q)]
    bool ok() const { return swap_conjugate && q_equals_t; }
};
DualityReport duality_check(const Partition& mu, Engine engine = Engine::ribbon);

}  // namespace qtsym
