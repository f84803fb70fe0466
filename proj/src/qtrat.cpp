#include "qtsym/qtrat.hpp"

#include <algorithm>

namespace qtsym {

namespace {

// Dense univariate polynomials in t over Q, index = degree, no trailing zeros.
using UPoly = std::vector<Rational>;

void trim(UPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

int deg(const UPoly& a) { return static_cast<int>(a.size()) - 1; }

UPoly umul(const UPoly& a, const UPoly& b) {
    if (a.empty() || b.empty()) return {};
    UPoly r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0)
            for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    trim(r);
    return r;
}

UPoly usub(const UPoly& a, const UPoly& b) {
    UPoly r(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    trim(r);
    return r;
}

// Quotient and remainder over Q.
std::pair<UPoly, UPoly> udivrem(UPoly a, const UPoly& b) {
    if (b.empty()) throw DivisionError("division by zero polynomial");
    if (deg(a) < deg(b)) return {{}, a};
    UPoly q(a.size() - b.size() + 1);
    for (int k = deg(a) - deg(b); k >= 0; --k) {
        Rational c = a[k + deg(b)] / b.back();
        q[k] = c;
        if (c != 0)
            for (std::size_t j = 0; j < b.size(); ++j) a[k + j] -= c * b[j];
    }
    trim(a);
    trim(q);
    return {q, a};
}

UPoly umonic(UPoly a) {
    if (a.empty()) return a;
    Rational lc = a.back();
    for (auto& c : a) c /= lc;
    return a;
}

UPoly ugcd(UPoly a, UPoly b) {
    while (!b.empty()) {
        UPoly r = udivrem(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return umonic(std::move(a));
}

UPoly uexact(const UPoly& a, const UPoly& b) {
    auto [q, r] = udivrem(a, b);
    if (!r.empty()) throw DivisionError("non-exact univariate division");
    return q;
}

// Polynomials in q with coefficients in Q[t], index = q-degree.
using BPoly = std::vector<UPoly>;

void btrim(BPoly& a) {
    while (!a.empty() && a.back().empty()) a.pop_back();
}

BPoly to_bpoly(const QTPoly& p) {
    BPoly r;
    for (const auto& x : p.terms()) {
        if (x.e.q < 0 || x.e.t < 0) throw std::invalid_argument("gcd requires non-negative exponents");
        if (static_cast<int>(r.size()) <= x.e.q) r.resize(x.e.q + 1);
        auto& u = r[x.e.q];
        if (static_cast<int>(u.size()) <= x.e.t) u.resize(x.e.t + 1);
        u[x.e.t] = x.c;
    }
    return r;
}

QTPoly from_bpoly(const BPoly& b) {
    std::vector<QTPoly::Term> ts;
    for (std::size_t i = 0; i < b.size(); ++i)
        for (std::size_t j = 0; j < b[i].size(); ++j)
            if (b[i][j] != 0) ts.push_back({{static_cast<int>(i), static_cast<int>(j)}, b[i][j]});
    return QTPoly::from_terms(std::move(ts));
}

UPoly content(const BPoly& a) {
    UPoly g;
    for (const auto& c : a) {
        if (c.empty()) continue;
        g = g.empty() ? umonic(c) : ugcd(g, c);
        if (g.size() == 1) break;
    }
    return g;
}

BPoly primitive(const BPoly& a) {
    UPoly c = content(a);
    BPoly r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!a[i].empty()) r[i] = uexact(a[i], c);
    return r;
}

BPoly prem(BPoly a, const BPoly& b) {
    const int db = static_cast<int>(b.size()) - 1;
    const UPoly& lb = b.back();
    while (!a.empty() && static_cast<int>(a.size()) - 1 >= db) {
        int k = static_cast<int>(a.size()) - 1 - db;
        UPoly la = a.back();
        for (auto& c : a) c = umul(c, lb);
        for (int j = 0; j <= db; ++j) a[k + j] = usub(a[k + j], umul(la, b[j]));
        btrim(a);
    }
    return a;
}

}  // namespace

QTPoly poly_gcd(const QTPoly& a, const QTPoly& b) {
    auto monic = [](const QTPoly& p) {
        return p.is_zero() ? p : p * Rational(1 / p.leading().c);
    };
    if (a.is_zero()) return monic(b);
    if (b.is_zero()) return monic(a);
    BPoly x = to_bpoly(a), y = to_bpoly(b);
    UPoly c = ugcd(content(x), content(y));
    x = primitive(x);
    y = primitive(y);
    if (x.size() < y.size()) std::swap(x, y);
    while (!y.empty()) {
        BPoly r = prem(x, y);
        x = std::move(y);
        y = r.empty() ? r : primitive(r);
    }
    x = primitive(x);
    for (auto& coef : x) coef = umul(coef, c);
    return monic(from_bpoly(x));
}

QTRat::QTRat(const QTPoly& p) : num_(p), den_(1L) {}

QTRat::QTRat(const QTPoly& num, const QTPoly& den) : num_(num), den_(den) { normalize(); }

void QTRat::normalize() {
    if (den_.is_zero()) throw DivisionError("zero denominator");
    if (num_.is_zero()) {
        den_ = QTPoly(1L);
        return;
    }
    const int eq = num_.min_q() - den_.min_q();
    const int et = num_.min_t() - den_.min_t();
    QTPoly n = num_.shifted(-num_.min_q(), -num_.min_t());
    QTPoly d = den_.shifted(-den_.min_q(), -den_.min_t());
    if (!d.is_constant() && !n.is_constant()) {
        QTPoly g = poly_gcd(n, d);
        if (!g.is_constant()) {
            n = exact_div(n, g);
            d = exact_div(d, g);
        }
    }
    n = n.shifted(std::max(eq, 0), std::max(et, 0));
    d = d.shifted(std::max(-eq, 0), std::max(-et, 0));
    Rational lc = d.leading().c;
    if (lc != 1) {
        Rational inv = 1 / lc;
        n *= inv;
        d *= inv;
    }
    num_ = std::move(n);
    den_ = std::move(d);
}

QTPoly QTRat::to_poly() const {
    if (!den_.is_monomial()) throw DivisionError("not a Laurent polynomial: " + to_string());
    const auto& m = den_.leading();
    return num_.shifted(-m.e.q, -m.e.t) * Rational(1 / m.c);
}

QTRat QTRat::operator-() const {
    QTRat r = *this;
    r.num_ = -r.num_;
    return r;
}

QTRat& QTRat::operator+=(const QTRat& o) {
    if (den_ == o.den_) {
        num_ += o.num_;
    } else {
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ *= o.den_;
    }
    normalize();
    return *this;
}

QTRat& QTRat::operator-=(const QTRat& o) { return *this += -o; }

QTRat& QTRat::operator*=(const QTRat& o) {
    num_ *= o.num_;
    den_ *= o.den_;
    normalize();
    return *this;
}

QTRat& QTRat::operator/=(const QTRat& o) {
    if (o.is_zero()) throw DivisionError("division by zero");
    num_ *= o.den_;
    den_ *= o.num_;
    normalize();
    return *this;
}

QTRat QTRat::frobenius(int k) const { return QTRat(num_.frobenius(k), den_.frobenius(k)); }

std::string QTRat::to_string() const {
    if (den_ == QTPoly(1L)) return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

}  // namespace qtsym
