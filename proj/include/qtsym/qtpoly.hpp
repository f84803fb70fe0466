#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qtsym {

using Rational = mpq_class;
using Integer = mpz_class;

/// Raised when an exact division has a nonzero remainder.
class DivisionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Exponent pair (power of q, power of t). Ordered lexicographically.
struct Exponent {
    int q = 0;
    int t = 0;

    friend bool operator==(const Exponent&, const Exponent&) = default;
    friend auto operator<=>(const Exponent&, const Exponent&) = default;
};

/// Sparse Laurent polynomial in q and t over the rationals.
///
/// Terms are kept sorted by (exponent of q, exponent of t) ascending and no
/// stored coefficient is ever zero, so structural equality is equality of
/// polynomials.
class QTPoly {
public:
    struct Term {
        Exponent e;
        Rational c;
    };

    QTPoly() = default;
    QTPoly(long c);  // NOLINT: integers promote implicitly
    QTPoly(const Rational& c);  // NOLINT

    static QTPoly monomial(int eq, int et, const Rational& c = 1);
    static QTPoly q() { return monomial(1, 0); }
    static QTPoly t() { return monomial(0, 1); }
    /// Builds from unsorted terms, merging duplicates and dropping zeros.
    static QTPoly from_terms(std::vector<Term> terms);

    const std::vector<Term>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    bool is_monomial() const { return terms_.size() == 1; }
    /// Constant term (coefficient of q^0 t^0).
    Rational constant_term() const;
    Rational coeff(int eq, int et) const;
    /// Leading term in the lexicographic order on (eq, et).
    const Term& leading() const { return terms_.back(); }

    int min_q() const;
    int max_q() const;
    int min_t() const;
    int max_t() const;

    QTPoly operator-() const;
    QTPoly& operator+=(const QTPoly& o);
    QTPoly& operator-=(const QTPoly& o);
    QTPoly& operator*=(const QTPoly& o);
    QTPoly& operator*=(const Rational& c);

    friend QTPoly operator+(QTPoly a, const QTPoly& b) { return a += b; }
    friend QTPoly operator-(QTPoly a, const QTPoly& b) { return a -= b; }
    friend QTPoly operator*(const QTPoly& a, const QTPoly& b);
    friend QTPoly operator*(QTPoly a, const Rational& c) { return a *= c; }
    friend QTPoly operator*(const Rational& c, QTPoly a) { return a *= c; }
    friend bool operator==(const QTPoly& a, const QTPoly& b);

    /// Multiplies by q^eq t^et.
    QTPoly shifted(int eq, int et) const;
    QTPoly pow(unsigned k) const;

    /// Replaces q by q^k and t by t^k.
    QTPoly frobenius(int k) const;
    /// Exchanges the roles of q and t.
    QTPoly swap_qt() const;

    /// Coefficient of q^k as a Laurent polynomial in t (q-exponent 0).
    QTPoly q_coefficient(int k) const;
    QTPoly t_coefficient(int k) const;

    /// True when every coefficient is a nonnegative integer.
    bool nonnegative_integral() const;
    bool integral() const;
    /// True when no exponent is negative.
    bool is_polynomial() const;

    std::string to_string() const;

private:
    std::vector<Term> terms_;
};

/// Returns c with b*c == a, or throws DivisionError.
QTPoly exact_div(const QTPoly& a, const QTPoly& b);

/// Returns the quotient when b divides a, std::nullopt otherwise.
std::optional<QTPoly> try_exact_div(const QTPoly& a, const QTPoly& b);

/// Substitution target for one parameter: either left alone or replaced by a
/// polynomial (a rational constant, the other parameter, a monomial...).
using Substitution = std::optional<QTPoly>;

/// Ring homomorphism q -> q_value, t -> t_value. Negative powers require the
/// substituted value to be an invertible monomial; substituting 0 into a
/// negative power throws DivisionError.
QTPoly specialize(const QTPoly& a, const Substitution& q_value, const Substitution& t_value);

/// (q;q)_k = (1-q)(1-q^2)...(1-q^k) in the variable q.
QTPoly q_pochhammer(int k);
/// Same product in the variable t.
QTPoly t_pochhammer(int k);

}  // namespace qtsym
