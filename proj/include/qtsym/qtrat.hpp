#pragma once

#include <string>

#include "qtsym/qtpoly.hpp"

namespace qtsym {

/// Greatest common divisor in Q[q,t], normalized so its lex-leading
/// coefficient is 1. Inputs must have non-negative exponents.
QTPoly poly_gcd(const QTPoly& a, const QTPoly& b);

/// Element of Q(q,t) in lowest terms.
///
/// Canonical form: numerator and denominator have non-negative exponents
/// with no common monomial factor, their gcd is 1, and the denominator's
/// lex-leading coefficient is 1.
class QTRat {
public:
    QTRat() : den_(1L) {}
    QTRat(long c) : num_(c), den_(1L) {}  // NOLINT
    QTRat(const Rational& c) : num_(c), den_(1L) {}  // NOLINT
    QTRat(const QTPoly& p);  // NOLINT
    QTRat(const QTPoly& num, const QTPoly& den);

    const QTPoly& num() const { return num_; }
    const QTPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    /// True when the value is a Laurent polynomial.
    bool is_laurent() const { return den_.is_monomial(); }
    /// The value as a Laurent polynomial; throws DivisionError otherwise.
    QTPoly to_poly() const;

    QTRat operator-() const;
    QTRat& operator+=(const QTRat& o);
    QTRat& operator-=(const QTRat& o);
    QTRat& operator*=(const QTRat& o);
    QTRat& operator/=(const QTRat& o);

    friend QTRat operator+(QTRat a, const QTRat& b) { return a += b; }
    friend QTRat operator-(QTRat a, const QTRat& b) { return a -= b; }
    friend QTRat operator*(QTRat a, const QTRat& b) { return a *= b; }
    friend QTRat operator/(QTRat a, const QTRat& b) { return a /= b; }
    friend bool operator==(const QTRat& a, const QTRat& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

    /// Replaces q by q^k and t by t^k.
    QTRat frobenius(int k) const;

    std::string to_string() const;

private:
    void normalize();

    QTPoly num_;
    QTPoly den_;
};

}  // namespace qtsym
