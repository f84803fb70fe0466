#pragma once

#include <functional>
#include <map>
#include <string>

#include "qtsym/partition.hpp"
#include "qtsym/qtpoly.hpp"
#include "qtsym/qtrat.hpp"

namespace qtsym {

enum class Basis { schur, homogeneous, elementary, monomial, forgotten, powersum };

std::string basis_name(Basis b);
/// Single-letter prefix used in text output: s, h, e, m, f, p.
char basis_letter(Basis b);
Basis basis_from_letter(char c);

/// Symmetric function with Laurent polynomial coefficients in a fixed basis.
class SymF {
public:
    using Terms = std::map<Partition, QTPoly>;

    explicit SymF(Basis b = Basis::schur) : basis_(b) {}
    SymF(Basis b, Terms terms);

    static SymF one() { return element(Basis::schur, Partition{}); }
    static SymF scalar(const QTPoly& c) { return element(Basis::schur, Partition{}, c); }
    static SymF element(Basis b, const Partition& p, const QTPoly& c = QTPoly(1L));
    static SymF s(const Partition& p, const QTPoly& c = QTPoly(1L)) { return element(Basis::schur, p, c); }

    Basis basis() const { return basis_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    QTPoly coeff(const Partition& p) const;
    void add_term(const Partition& p, const QTPoly& c);

    /// Largest and smallest degree present; 0 for the zero function.
    int max_degree() const;
    int min_degree() const;
    bool is_homogeneous() const;
    SymF degree_part(int d) const;

    /// Applies f to every coefficient, dropping terms that become zero.
    SymF map_coeffs(const std::function<QTPoly(const QTPoly&)>& f) const;

    SymF operator-() const;
    SymF& operator+=(const SymF& o);
    SymF& operator-=(const SymF& o);
    SymF& operator*=(const QTPoly& c);

    friend SymF operator+(SymF a, const SymF& b) { return a += b; }
    friend SymF operator-(SymF a, const SymF& b) { return a -= b; }
    friend SymF operator*(SymF a, const QTPoly& c) { return a *= c; }
    friend SymF operator*(const QTPoly& c, SymF a) { return a *= c; }
    /// Equal as elements of the ring (bases may differ).
    friend bool operator==(const SymF& a, const SymF& b);

private:
    Basis basis_;
    Terms terms_;
};

/// Re-expresses P in another basis.
SymF convert(const SymF& p, Basis target);
inline SymF to_schur(const SymF& p) { return convert(p, Basis::schur); }

/// Product; the result is in the basis of the first factor.
SymF multiply(const SymF& a, const SymF& b);
/// f-perp applied to P (adjoint of multiplication by f); result in Schur.
SymF skew(const SymF& f, const SymF& p);

QTPoly inner_hall(const SymF& a, const SymF& b);
/// <p_l, p_m>_t = z_l prod (1 - t^{l_i}).
QTPoly inner_t(const SymF& a, const SymF& b);
/// <p_l, p_m>_{qt} = z_l prod (1 - q^{l_i})(1 - t^{l_i}).
QTPoly inner_qt(const SymF& a, const SymF& b);

SymF omega(const SymF& p);

/// Alphabet f + g X: p_k maps to f(q^k,t^k) + g(q^k,t^k) p_k.
struct AlphabetExpr {
    QTRat scalar;
    QTRat x_coeff;

    static AlphabetExpr x_times(const QTRat& g) { return {QTRat(0L), g}; }
    static AlphabetExpr constant(const QTRat& f) { return {f, QTRat(0L)}; }

    bool x_free() const { return x_coeff.is_zero(); }
    /// Image of p_k.
    std::pair<QTRat, QTRat> frobenius(int k) const { return {scalar.frobenius(k), x_coeff.frobenius(k)}; }
    std::string key() const;
};

/// scale * P[A]. Coefficients of P are not transformed. Throws DivisionError
/// when a coefficient of the result is not a Laurent polynomial.
SymF plethysm(const SymF& p, const AlphabetExpr& a, const QTPoly& scale = QTPoly(1L));

/// s_lambda[A] for an X-free alphabet.
QTRat eval_alphabet(const Partition& lambda, const AlphabetExpr& a);
/// Same value, required to be a Laurent polynomial.
QTPoly eval_alphabet_poly(const Partition& lambda, const AlphabetExpr& a);

/// Substitutes into every coefficient.
SymF specialize(const SymF& p, const Substitution& q_value, const Substitution& t_value);
/// Exchanges q and t in every coefficient.
SymF swap_qt(const SymF& p);

// Schur-level kernels, memoized.
const SymF& schur_product(const Partition& mu, const Partition& nu);
/// s_mu-perp s_lambda.
const SymF& schur_skew(const Partition& mu, const Partition& lambda);
/// Littlewood-Richardson coefficient <s_mu s_nu, s_lambda>.
Integer lr_coefficient_p(const Partition& lambda, const Partition& mu, const Partition& nu);
/// Pieri: s_lambda h_k and s_lambda e_k.
SymF pieri_h(int k, const Partition& lambda);
SymF pieri_e(int k, const Partition& lambda);
/// e_k-perp s_lambda (vertical strips removed).
SymF skew_e(int k, const Partition& lambda);

/// Linear extension of a Schur-level map: sum_lambda c_lambda f(lambda).
SymF extend_linear(const SymF& p, const std::function<SymF(const Partition&)>& f);

}  // namespace qtsym
