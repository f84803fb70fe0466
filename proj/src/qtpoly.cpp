#include "qtsym/qtpoly.hpp"

#include <algorithm>
#include <sstream>

namespace qtsym {

namespace {

void normalize(std::vector<QTPoly::Term>& terms) {
    std::sort(terms.begin(), terms.end(),
              [](const QTPoly::Term& a, const QTPoly::Term& b) { return a.e < b.e; });
    std::size_t out = 0;
    for (std::size_t i = 0; i < terms.size();) {
        std::size_t j = i + 1;
        Rational acc = std::move(terms[i].c);
        while (j < terms.size() && terms[j].e == terms[i].e) {
            acc += terms[j].c;
            ++j;
        }
        if (acc != 0) {
            terms[out].e = terms[i].e;
            terms[out].c = std::move(acc);
            ++out;
        }
        i = j;
    }
    terms.resize(out);
}

// Merge of two sorted term lists with b scaled by sign.
std::vector<QTPoly::Term> merge(const std::vector<QTPoly::Term>& a,
                                const std::vector<QTPoly::Term>& b, bool subtract) {
    std::vector<QTPoly::Term> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].e < b[j].e)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].e < a[i].e) {
            out.push_back({b[j].e, subtract ? Rational(-b[j].c) : b[j].c});
            ++j;
        } else {
            Rational c = subtract ? Rational(a[i].c - b[j].c) : Rational(a[i].c + b[j].c);
            if (c != 0) out.push_back({a[i].e, std::move(c)});
            ++i;
            ++j;
        }
    }
    return out;
}

std::string monomial_text(const Exponent& e) {
    std::string s;
    auto var = [&](char v, int k) {
        if (k == 0) return;
        if (!s.empty()) s += '*';
        s += v;
        if (k != 1) s += '^' + std::to_string(k);
    };
    var('q', e.q);
    var('t', e.t);
    return s;
}

}  // namespace

QTPoly::QTPoly(long c) {
    if (c != 0) terms_.push_back({{0, 0}, Rational(c)});
}

QTPoly::QTPoly(const Rational& c) {
    if (c != 0) {
        terms_.push_back({{0, 0}, c});
        terms_.back().c.canonicalize();
    }
}

QTPoly QTPoly::monomial(int eq, int et, const Rational& c) {
    QTPoly p;
    if (c != 0) {
        p.terms_.push_back({{eq, et}, c});
        p.terms_.back().c.canonicalize();
    }
    return p;
}

QTPoly QTPoly::from_terms(std::vector<Term> terms) {
    for (auto& x : terms) x.c.canonicalize();
    normalize(terms);
    QTPoly p;
    p.terms_ = std::move(terms);
    return p;
}

bool QTPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].e == Exponent{0, 0});
}

Rational QTPoly::constant_term() const { return coeff(0, 0); }

Rational QTPoly::coeff(int eq, int et) const {
    Exponent key{eq, et};
    auto it = std::lower_bound(terms_.begin(), terms_.end(), key,
                               [](const Term& a, const Exponent& k) { return a.e < k; });
    if (it != terms_.end() && it->e == key) return it->c;
    return 0;
}

int QTPoly::min_q() const {
    if (terms_.empty()) return 0;
    return terms_.front().e.q;
}

int QTPoly::max_q() const {
    if (terms_.empty()) return 0;
    return terms_.back().e.q;
}

int QTPoly::min_t() const {
    if (terms_.empty()) return 0;
    int m = terms_.front().e.t;
    for (const auto& x : terms_) m = std::min(m, x.e.t);
    return m;
}

int QTPoly::max_t() const {
    if (terms_.empty()) return 0;
    int m = terms_.front().e.t;
    for (const auto& x : terms_) m = std::max(m, x.e.t);
    return m;
}

QTPoly QTPoly::operator-() const {
    QTPoly r = *this;
    for (auto& x : r.terms_) x.c = -x.c;
    return r;
}

QTPoly& QTPoly::operator+=(const QTPoly& o) {
    if (o.terms_.empty()) return *this;
    if (terms_.empty()) return *this = o;
    terms_ = merge(terms_, o.terms_, false);
    return *this;
}

QTPoly& QTPoly::operator-=(const QTPoly& o) {
    if (o.terms_.empty()) return *this;
    terms_ = merge(terms_, o.terms_, true);
    return *this;
}

QTPoly operator*(const QTPoly& a, const QTPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (b.is_constant()) return a * b.terms_[0].c;
    if (a.is_constant()) return b * a.terms_[0].c;
    std::vector<QTPoly::Term> prod;
    prod.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& x : a.terms_)
        for (const auto& y : b.terms_)
            prod.push_back({{x.e.q + y.e.q, x.e.t + y.e.t}, x.c * y.c});
    return QTPoly::from_terms(std::move(prod));
}

QTPoly& QTPoly::operator*=(const QTPoly& o) { return *this = *this * o; }

QTPoly& QTPoly::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    if (c == 1) return *this;
    for (auto& x : terms_) x.c *= c;
    return *this;
}

bool operator==(const QTPoly& a, const QTPoly& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
        if (a.terms_[i].e != b.terms_[i].e || a.terms_[i].c != b.terms_[i].c) return false;
    return true;
}

QTPoly QTPoly::shifted(int eq, int et) const {
    QTPoly r = *this;
    for (auto& x : r.terms_) {
        x.e.q += eq;
        x.e.t += et;
    }
    return r;
}

QTPoly QTPoly::pow(unsigned k) const {
    QTPoly result(1L);
    QTPoly base = *this;
    while (k) {
        if (k & 1u) result *= base;
        k >>= 1u;
        if (k) base *= base;
    }
    return result;
}

QTPoly QTPoly::frobenius(int k) const {
    if (k < 1) throw std::invalid_argument("frobenius power must be positive");
    QTPoly r = *this;
    for (auto& x : r.terms_) {
        x.e.q *= k;
        x.e.t *= k;
    }
    return r;
}

QTPoly QTPoly::swap_qt() const {
    std::vector<Term> ts = terms_;
    for (auto& x : ts) std::swap(x.e.q, x.e.t);
    return from_terms(std::move(ts));
}

QTPoly QTPoly::q_coefficient(int k) const {
    QTPoly r;
    for (const auto& x : terms_)
        if (x.e.q == k) r.terms_.push_back({{0, x.e.t}, x.c});
    return r;
}

QTPoly QTPoly::t_coefficient(int k) const {
    std::vector<Term> ts;
    for (const auto& x : terms_)
        if (x.e.t == k) ts.push_back({{x.e.q, 0}, x.c});
    return from_terms(std::move(ts));
}

bool QTPoly::nonnegative_integral() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const Term& x) {
        return x.c.get_den() == 1 && x.c > 0;
    });
}

bool QTPoly::integral() const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [](const Term& x) { return x.c.get_den() == 1; });
}

bool QTPoly::is_polynomial() const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [](const Term& x) { return x.e.q >= 0 && x.e.t >= 0; });
}

std::string QTPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& x : terms_) {
        Rational c = x.c;
        bool neg = c < 0;
        if (neg) c = -c;
        if (neg)
            os << '-';
        else if (!first)
            os << '+';
        std::string mono = monomial_text(x.e);
        if (mono.empty()) {
            os << c.get_str();
        } else {
            if (c != 1) os << c.get_str() << '*';
            os << mono;
        }
        first = false;
    }
    return os.str();
}

std::optional<QTPoly> try_exact_div(const QTPoly& a, const QTPoly& b) {
    if (b.is_zero()) throw DivisionError("division by zero polynomial");
    if (a.is_zero()) return QTPoly{};
    if (b.is_monomial()) {
        const auto& lb = b.leading();
        std::vector<QTPoly::Term> ts;
        ts.reserve(a.size());
        for (const auto& x : a.terms())
            ts.push_back({{x.e.q - lb.e.q, x.e.t - lb.e.t}, x.c / lb.c});
        return QTPoly::from_terms(std::move(ts));
    }
    // Newton polytope bounds on any exact quotient.
    const int qlo = a.min_q() - b.min_q(), qhi = a.max_q() - b.max_q();
    const int tlo = a.min_t() - b.min_t(), thi = a.max_t() - b.max_t();
    if (qlo > qhi || tlo > thi) return std::nullopt;
    const auto& lb = b.leading();
    std::vector<QTPoly::Term> quotient;
    QTPoly r = a;
    while (!r.is_zero()) {
        const auto& lr = r.leading();
        Exponent e{lr.e.q - lb.e.q, lr.e.t - lb.e.t};
        if (e.q < qlo || e.q > qhi || e.t < tlo || e.t > thi) return std::nullopt;
        Rational c = lr.c / lb.c;
        r -= b.shifted(e.q, e.t) * c;
        quotient.push_back({e, std::move(c)});
    }
    return QTPoly::from_terms(std::move(quotient));
}

QTPoly exact_div(const QTPoly& a, const QTPoly& b) {
    auto r = try_exact_div(a, b);
    if (!r) throw DivisionError("non-exact division: (" + a.to_string() + ") / (" + b.to_string() + ")");
    return *r;
}

namespace {

// Powers of a substituted value, including negative powers of a monomial.
class PowerTable {
public:
    explicit PowerTable(QTPoly value) : value_(std::move(value)) {}

    QTPoly power(int k) {
        if (k >= 0) {
            while (static_cast<int>(pos_.size()) <= k)
                pos_.push_back(pos_.empty() ? QTPoly(1L) : pos_.back() * value_);
            return pos_[k];
        }
        if (!value_.is_monomial())
            throw DivisionError("negative power of a non-invertible substitution value " + value_.to_string());
        const auto& m = value_.leading();
        Rational c = 1;
        for (int i = 0; i < -k; ++i) c /= m.c;
        return QTPoly::monomial(m.e.q * k, m.e.t * k, c);
    }

private:
    QTPoly value_;
    std::vector<QTPoly> pos_;
};

}  // namespace

QTPoly specialize(const QTPoly& a, const Substitution& q_value, const Substitution& t_value) {
    std::optional<PowerTable> qp, tp;
    if (q_value) qp.emplace(*q_value);
    if (t_value) tp.emplace(*t_value);
    QTPoly result;
    for (const auto& x : a.terms()) {
        QTPoly term = QTPoly::monomial(qp ? 0 : x.e.q, tp ? 0 : x.e.t, x.c);
        if (qp) term *= qp->power(x.e.q);
        if (tp) term *= tp->power(x.e.t);
        result += term;
    }
    return result;
}

QTPoly q_pochhammer(int k) {
    QTPoly r(1L);
    for (int i = 1; i <= k; ++i) r *= QTPoly(1L) - QTPoly::monomial(i, 0);
    return r;
}

QTPoly t_pochhammer(int k) {
    QTPoly r(1L);
    for (int i = 1; i <= k; ++i) r *= QTPoly(1L) - QTPoly::monomial(0, i);
    return r;
}

}  // namespace qtsym
