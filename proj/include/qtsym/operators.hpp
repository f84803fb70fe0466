#pragma once

#include "qtsym/linop.hpp"

namespace qtsym {

/// P -> P[X + A/z] Omega[sign z X] |_{z^m}, i.e.
/// sum_lambda s_lambda[A] h_{m+|lambda|} s_lambda-perp P        (sign +1)
/// sum_lambda s_lambda[A] (-1)^{m+|lambda|} e_{m+|lambda|} s_lambda-perp P   (sign -1).
/// A must be X-free with Laurent polynomial Schur values.
LinOp vertex(int m, const AlphabetExpr& a, int sign);

/// Row creation: S_m s_mu = s_(m,mu), straightened.
LinOp bernstein_S(int m);
/// Column creation: S~_m = omega S_m omega.
LinOp bernstein_Stilde(int m);
/// The same operators through the generic vertex evaluator.
LinOp bernstein_S_vertex(int m);
LinOp bernstein_Stilde_vertex(int m);

/// Hall-Littlewood creation operator with parameter u (q or t):
/// vertex(m, -(1-u), +).
LinOp jing(int m, const QTPoly& u);

LinOp dtilde(int m);
LinOp dtilde_star(int m);

/// P -> V^Y P[X - Y] |_{Y=X}.
LinOp flip(const LinOp& v);
/// P -> V^Y P[uX + (1-u)Y] |_{Y=X}; u a Laurent monomial such as q, t, 1/t.
LinOp qtwist(const LinOp& v, const QTPoly& u);
/// Coefficient of q^k in the q-twist of a q-free operator.
LinOp qtwist_coeff(const LinOp& v, int k);
/// P -> (V(P[X(1-t)]))[X/(1-t)]; throws DivisionError when not polynomial.
LinOp ft_conjugate(const LinOp& v);

/// Plethystic substitution P -> P[gX] as an operator.
LinOp plethysm_op(const QTPoly& g);

}  // namespace qtsym
