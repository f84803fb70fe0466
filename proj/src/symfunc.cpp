#include "qtsym/symfunc.hpp"

#include <mutex>
#include <stdexcept>

#include "qtsym/characters.hpp"

namespace qtsym {

namespace {

template <class Key, class Value>
class Memo {
public:
    template <class F>
    const Value& get(const Key& key, F&& compute) {
        {
            std::lock_guard lock(mu_);
            if (auto it = map_.find(key); it != map_.end()) return it->second;
        }
        Value v = compute();
        std::lock_guard lock(mu_);
        return map_.emplace(key, std::move(v)).first->second;
    }

private:
    std::mutex mu_;
    std::map<Key, Value> map_;
};

QTPoly times(const QTPoly& c, const Integer& k) { return c * Rational(k); }

// Schur coefficients of one degree, as a dense vector over partitions_of(n).
std::vector<QTPoly> dense(const SymF& schur, int n) {
    const auto& t = degree_tables(n);
    std::vector<QTPoly> v(t.parts.size());
    for (const auto& [p, c] : schur.terms())
        if (p.size() == n) v[t.index.at(p)] = c;
    return v;
}

std::vector<int> degrees(const SymF& p) {
    std::vector<int> ds;
    for (const auto& [part, c] : p.terms())
        if (ds.empty() || ds.back() != part.size()) ds.push_back(part.size());
    std::sort(ds.begin(), ds.end());
    ds.erase(std::unique(ds.begin(), ds.end()), ds.end());
    return ds;
}

SymF from_schur(const SymF& s, Basis target) {
    if (target == Basis::schur) return s;
    SymF out(target);
    for (int n : degrees(s)) {
        const auto& t = degree_tables(n);
        const int np = static_cast<int>(t.parts.size());
        std::vector<QTPoly> c = dense(s, n);
        if (target == Basis::elementary || target == Basis::forgotten) {
            std::vector<QTPoly> w(np);
            for (int i = 0; i < np; ++i) w[t.index.at(conjugate(t.parts[i]))] = c[i];
            c = std::move(w);
        }
        for (int j = 0; j < np; ++j) {
            QTPoly a;
            for (int i = 0; i < np; ++i) {
                if (c[i].is_zero()) continue;
                switch (target) {
                    case Basis::homogeneous:
                    case Basis::elementary:
                        if (t.kostka_inv[j][i] != 0) a += times(c[i], t.kostka_inv[j][i]);
                        break;
                    case Basis::monomial:
                    case Basis::forgotten:
                        if (t.kostka[i][j] != 0) a += times(c[i], t.kostka[i][j]);
                        break;
                    case Basis::powersum:
                        if (t.chi[i][j] != 0) a += c[i] * Rational(t.chi[i][j], 1);
                        break;
                    case Basis::schur:
                        break;
                }
            }
            if (target == Basis::powersum) a *= Rational(1) / Rational(t.z[j]);
            out.add_term(t.parts[j], a);
        }
    }
    return out;
}

SymF schur_of(Basis b, const Partition& mu, const QTPoly& c) {
    SymF out(Basis::schur);
    if (b == Basis::schur) {
        out.add_term(mu, c);
        return out;
    }
    const int n = mu.size();
    const auto& t = degree_tables(n);
    const int j = t.index.at(mu);
    const int np = static_cast<int>(t.parts.size());
    for (int i = 0; i < np; ++i) {
        switch (b) {
            case Basis::homogeneous:
                if (t.kostka[i][j] != 0) out.add_term(t.parts[i], times(c, t.kostka[i][j]));
                break;
            case Basis::elementary:
                if (t.kostka[i][j] != 0) out.add_term(conjugate(t.parts[i]), times(c, t.kostka[i][j]));
                break;
            case Basis::monomial:
                if (t.kostka_inv[j][i] != 0) out.add_term(t.parts[i], times(c, t.kostka_inv[j][i]));
                break;
            case Basis::forgotten:
                if (t.kostka_inv[j][i] != 0) out.add_term(conjugate(t.parts[i]), times(c, t.kostka_inv[j][i]));
                break;
            case Basis::powersum:
                if (t.chi[i][j] != 0) out.add_term(t.parts[i], c * Rational(t.chi[i][j], 1));
                break;
            case Basis::schur:
                break;
        }
    }
    return out;
}

void horizontal_strips(const Partition& lambda, int k, bool add, std::vector<Partition>& out) {
    const int l = lambda.length();
    const int rows = add ? l + 1 : l;
    std::vector<int> cur(rows);
    std::function<void(int, int)> rec = [&](int i, int left) {
        if (i == rows) {
            if (left == 0) out.emplace_back(cur);
            return;
        }
        int lo, hi;
        if (add) {
            lo = lambda[i];
            hi = (i == 0) ? lambda[0] + left : std::min(lambda[i - 1], lambda[i] + left);
        } else {
            lo = std::max(lambda[i + 1], lambda[i] - left);
            hi = lambda[i];
        }
        for (int v = lo; v <= hi; ++v) {
            cur[i] = v;
            rec(i + 1, left - (add ? v - lambda[i] : lambda[i] - v));
        }
    };
    rec(0, k);
}

Memo<std::pair<Partition, Partition>, SymF>& product_memo() {
    static Memo<std::pair<Partition, Partition>, SymF> m;
    return m;
}

Memo<std::pair<Partition, Partition>, SymF>& skew_memo() {
    static Memo<std::pair<Partition, Partition>, SymF> m;
    return m;
}

Memo<std::pair<std::string, Partition>, SymF>& plethysm_memo() {
    static Memo<std::pair<std::string, Partition>, SymF> m;
    return m;
}

Memo<std::pair<std::string, Partition>, QTPoly>& eval_memo() {
    static Memo<std::pair<std::string, Partition>, QTPoly> m;
    return m;
}

QTPoly binomial(int n, int k) {
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return QTPoly(Rational(r));
}

// Power-sum images for a degree-n piece: numerators and denominators of
// f(q^k,t^k) and g(q^k,t^k), k = 1..n.
struct FrobeniusImages {
    std::vector<QTPoly> fnum, fden, gnum, gden;
};

FrobeniusImages images(const AlphabetExpr& a, int n) {
    FrobeniusImages im;
    for (int k = 0; k <= n; ++k) {
        if (k == 0) {
            im.fnum.emplace_back(0L);
            im.fden.emplace_back(1L);
            im.gnum.emplace_back(0L);
            im.gden.emplace_back(1L);
            continue;
        }
        auto [f, g] = a.frobenius(k);
        im.fnum.push_back(f.num());
        im.fden.push_back(f.den());
        im.gnum.push_back(g.num());
        im.gden.push_back(g.den());
    }
    return im;
}

// Schur coefficients of sum over rho of coeff_rho p_rho[A] * common, for the
// degree-n piece given in power sums. `common` = prod_k (fden_k gden_k)^{n/k}.
SymF plethysm_powersum(const std::map<Partition, QTPoly>& pcoeffs, int n, const FrobeniusImages& im) {
    std::map<Partition, QTPoly> out_p;
    for (const auto& [rho, a] : pcoeffs) {
        if (a.is_zero()) continue;
        auto mult = multiplicities(rho);
        QTPoly base = a;
        for (int k = 1; k <= n; ++k) {
            int extra = n / k - (k < static_cast<int>(mult.size()) ? mult[k] : 0);
            QTPoly d = im.fden[k] * im.gden[k];
            if (!(d == QTPoly(1L)) && extra > 0) base *= d.pow(static_cast<unsigned>(extra));
        }
        std::map<Partition, QTPoly> acc{{Partition{}, base}};
        for (int k = 1; k < static_cast<int>(mult.size()); ++k) {
            const int m = mult[k];
            if (m == 0) continue;
            QTPoly fk = im.fnum[k] * im.gden[k];
            QTPoly gk = im.gnum[k] * im.fden[k];
            std::vector<QTPoly> factors(m + 1);
            for (int j = 0; j <= m; ++j) factors[j] = binomial(m, j) * fk.pow(m - j) * gk.pow(j);
            std::map<Partition, QTPoly> next;
            for (const auto& [sigma, c] : acc)
                for (int j = 0; j <= m; ++j) {
                    if (factors[j].is_zero()) continue;
                    std::vector<int> add(j, k);
                    next[merge_parts(sigma, Partition(add))] += c * factors[j];
                }
            acc = std::move(next);
        }
        for (auto& [sigma, c] : acc) out_p[sigma] += c;
    }
    SymF out(Basis::powersum);
    for (auto& [sigma, c] : out_p) out.add_term(sigma, c);
    return to_schur(out);
}

QTPoly common_denominator(int n, const FrobeniusImages& im) {
    QTPoly c(1L);
    for (int k = 1; k <= n; ++k) {
        QTPoly d = im.fden[k] * im.gden[k];
        if (!(d == QTPoly(1L))) c *= d.pow(static_cast<unsigned>(n / k));
    }
    return c;
}

SymF plethysm_degree(const SymF& schur_piece, int n, const AlphabetExpr& a, const QTPoly& scale) {
    const auto& t = degree_tables(n);
    std::vector<QTPoly> c = dense(schur_piece, n);
    std::map<Partition, QTPoly> pc;
    for (std::size_t j = 0; j < t.parts.size(); ++j) {
        QTPoly s;
        for (std::size_t i = 0; i < t.parts.size(); ++i)
            if (!c[i].is_zero() && t.chi[i][j] != 0) s += c[i] * Rational(t.chi[i][j], 1);
        if (!s.is_zero()) pc[t.parts[j]] = s * (Rational(1) / Rational(t.z[j]));
    }
    FrobeniusImages im = images(a, n);
    SymF r = plethysm_powersum(pc, n, im);
    QTPoly den = common_denominator(n, im);
    if (!(scale == QTPoly(1L))) r *= scale;
    if (den == QTPoly(1L)) return r;
    return r.map_coeffs([&](const QTPoly& x) { return exact_div(x, den); });
}

}  // namespace

std::string basis_name(Basis b) {
    switch (b) {
        case Basis::schur: return "schur";
        case Basis::homogeneous: return "homogeneous";
        case Basis::elementary: return "elementary";
        case Basis::monomial: return "monomial";
        case Basis::forgotten: return "forgotten";
        case Basis::powersum: return "powersum";
    }
    return "schur";
}

char basis_letter(Basis b) {
    switch (b) {
        case Basis::schur: return 's';
        case Basis::homogeneous: return 'h';
        case Basis::elementary: return 'e';
        case Basis::monomial: return 'm';
        case Basis::forgotten: return 'f';
        case Basis::powersum: return 'p';
    }
    return 's';
}

Basis basis_from_letter(char c) {
    switch (c) {
        case 's': return Basis::schur;
        case 'h': return Basis::homogeneous;
        case 'e': return Basis::elementary;
        case 'm': return Basis::monomial;
        case 'f': return Basis::forgotten;
        case 'p': return Basis::powersum;
        default: throw std::invalid_argument(std::string("unknown basis letter ") + c);
    }
}

SymF::SymF(Basis b, Terms terms) : basis_(b) {
    for (auto& [p, c] : terms)
        if (!c.is_zero()) terms_.emplace(p, std::move(c));
}

SymF SymF::element(Basis b, const Partition& p, const QTPoly& c) {
    SymF r(b);
    r.add_term(p, c);
    return r;
}

QTPoly SymF::coeff(const Partition& p) const {
    auto it = terms_.find(p);
    return it == terms_.end() ? QTPoly() : it->second;
}

void SymF::add_term(const Partition& p, const QTPoly& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(p, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

int SymF::max_degree() const {
    int d = 0;
    for (const auto& [p, c] : terms_) d = std::max(d, p.size());
    return d;
}

int SymF::min_degree() const {
    if (terms_.empty()) return 0;
    int d = terms_.begin()->first.size();
    for (const auto& [p, c] : terms_) d = std::min(d, p.size());
    return d;
}

bool SymF::is_homogeneous() const { return max_degree() == min_degree(); }

SymF SymF::degree_part(int d) const {
    SymF r(basis_);
    for (const auto& [p, c] : terms_)
        if (p.size() == d) r.terms_.emplace(p, c);
    return r;
}

SymF SymF::map_coeffs(const std::function<QTPoly(const QTPoly&)>& f) const {
    SymF r(basis_);
    for (const auto& [p, c] : terms_) {
        QTPoly v = f(c);
        if (!v.is_zero()) r.terms_.emplace(p, std::move(v));
    }
    return r;
}

SymF SymF::operator-() const {
    SymF r = *this;
    for (auto& [p, c] : r.terms_) c = -c;
    return r;
}

SymF& SymF::operator+=(const SymF& o) {
    if (o.basis_ != basis_) return *this += convert(o, basis_);
    for (const auto& [p, c] : o.terms_) add_term(p, c);
    return *this;
}

SymF& SymF::operator-=(const SymF& o) {
    if (o.basis_ != basis_) return *this -= convert(o, basis_);
    for (const auto& [p, c] : o.terms_) add_term(p, -c);
    return *this;
}

SymF& SymF::operator*=(const QTPoly& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [p, x] : terms_) x *= c;
    return *this;
}

bool operator==(const SymF& a, const SymF& b) {
    if (a.basis_ == b.basis_) {
        if (a.terms_.size() != b.terms_.size()) return false;
        auto i = a.terms_.begin();
        auto j = b.terms_.begin();
        for (; i != a.terms_.end(); ++i, ++j)
            if (!(i->first == j->first) || !(i->second == j->second)) return false;
        return true;
    }
    return to_schur(a) == to_schur(b);
}

SymF convert(const SymF& p, Basis target) {
    if (p.basis() == target) return p;
    SymF s(Basis::schur);
    if (p.basis() == Basis::schur) {
        s = p;
    } else {
        for (const auto& [mu, c] : p.terms()) s += schur_of(p.basis(), mu, c);
    }
    return from_schur(s, target);
}

const SymF& schur_product(const Partition& mu, const Partition& nu) {
    const auto& key = mu <= nu ? std::make_pair(mu, nu) : std::make_pair(nu, mu);
    return product_memo().get(key, [&] {
        const Partition& a = key.first;
        const Partition& b = key.second;
        if (a.empty()) return SymF::s(b);
        const auto& ta = degree_tables(a.size());
        const auto& tb = degree_tables(b.size());
        const auto& tn = degree_tables(a.size() + b.size());
        const int ia = ta.index.at(a), ib = tb.index.at(b);
        std::map<Partition, Rational> pc;
        for (std::size_t r = 0; r < ta.parts.size(); ++r) {
            if (ta.chi[ia][r] == 0) continue;
            Rational ca = Rational(ta.chi[ia][r], 1) / Rational(ta.z[r]);
            for (std::size_t s = 0; s < tb.parts.size(); ++s) {
                if (tb.chi[ib][s] == 0) continue;
                Rational cb = Rational(tb.chi[ib][s], 1) / Rational(tb.z[s]);
                pc[merge_parts(ta.parts[r], tb.parts[s])] += ca * cb;
            }
        }
        SymF out(Basis::schur);
        for (std::size_t l = 0; l < tn.parts.size(); ++l) {
            Rational c = 0;
            for (const auto& [sigma, x] : pc) c += x * tn.chi[l][tn.index.at(sigma)];
            if (c != 0) {
                if (c.get_den() != 1) throw std::logic_error("non-integral product coefficient");
                out.add_term(tn.parts[l], QTPoly(c));
            }
        }
        return out;
    });
}

Integer lr_coefficient_p(const Partition& lambda, const Partition& mu, const Partition& nu) {
    if (lambda.size() != mu.size() + nu.size()) return 0;
    QTPoly c = schur_product(mu, nu).coeff(lambda);
    return c.is_zero() ? Integer(0) : Integer(c.constant_term().get_num());
}

const SymF& schur_skew(const Partition& mu, const Partition& lambda) {
    return skew_memo().get({mu, lambda}, [&] {
        SymF out(Basis::schur);
        if (!contains(lambda, mu)) return out;
        if (mu.empty()) return SymF::s(lambda);
        for (const auto& nu : partitions_of(lambda.size() - mu.size())) {
            if (!contains(lambda, nu)) continue;
            out.add_term(nu, schur_product(mu, nu).coeff(lambda));
        }
        return out;
    });
}

SymF pieri_h(int k, const Partition& lambda) {
    SymF out(Basis::schur);
    if (k < 0) return out;
    std::vector<Partition> ps;
    horizontal_strips(lambda, k, true, ps);
    for (auto& p : ps) out.add_term(p, QTPoly(1L));
    return out;
}

SymF pieri_e(int k, const Partition& lambda) {
    SymF out(Basis::schur);
    if (k < 0) return out;
    std::vector<Partition> ps;
    horizontal_strips(conjugate(lambda), k, true, ps);
    for (auto& p : ps) out.add_term(conjugate(p), QTPoly(1L));
    return out;
}

SymF skew_e(int k, const Partition& lambda) {
    SymF out(Basis::schur);
    if (k < 0) return out;
    std::vector<Partition> ps;
    horizontal_strips(conjugate(lambda), k, false, ps);
    for (auto& p : ps) out.add_term(conjugate(p), QTPoly(1L));
    return out;
}

SymF extend_linear(const SymF& p, const std::function<SymF(const Partition&)>& f) {
    SymF s = to_schur(p);
    SymF out(Basis::schur);
    for (const auto& [lambda, c] : s.terms()) {
        SymF img = f(lambda);
        if (img.is_zero()) continue;
        out += (c == QTPoly(1L)) ? img : img * c;
    }
    return out;
}

SymF multiply(const SymF& a, const SymF& b) {
    SymF sa = to_schur(a), sb = to_schur(b);
    SymF out(Basis::schur);
    for (const auto& [mu, c] : sa.terms())
        for (const auto& [nu, d] : sb.terms()) out += schur_product(mu, nu) * (c * d);
    return convert(out, a.basis());
}

SymF skew(const SymF& f, const SymF& p) {
    SymF sf = to_schur(f), sp = to_schur(p);
    SymF out(Basis::schur);
    for (const auto& [mu, c] : sf.terms())
        for (const auto& [lambda, d] : sp.terms()) {
            const SymF& r = schur_skew(mu, lambda);
            if (!r.is_zero()) out += r * (c * d);
        }
    return out;
}

QTPoly inner_hall(const SymF& a, const SymF& b) {
    SymF sa = to_schur(a), sb = to_schur(b);
    QTPoly r;
    for (const auto& [lambda, c] : sa.terms()) {
        auto it = sb.terms().find(lambda);
        if (it != sb.terms().end()) r += c * it->second;
    }
    return r;
}

namespace {

QTPoly inner_weighted(const SymF& a, const SymF& b, bool with_q) {
    SymF pa = convert(a, Basis::powersum), pb = convert(b, Basis::powersum);
    QTPoly r;
    for (const auto& [rho, c] : pa.terms()) {
        auto it = pb.terms().find(rho);
        if (it == pb.terms().end()) continue;
        QTPoly w(Rational(z_stat(rho)));
        for (int k : rho) {
            w *= QTPoly(1L) - QTPoly::monomial(0, k);
            if (with_q) w *= QTPoly(1L) - QTPoly::monomial(k, 0);
        }
        r += c * it->second * w;
    }
    return r;
}

}  // namespace

QTPoly inner_t(const SymF& a, const SymF& b) { return inner_weighted(a, b, false); }
QTPoly inner_qt(const SymF& a, const SymF& b) { return inner_weighted(a, b, true); }

SymF omega(const SymF& p) {
    SymF s = to_schur(p);
    SymF out(Basis::schur);
    for (const auto& [lambda, c] : s.terms()) out.add_term(conjugate(lambda), c);
    return convert(out, p.basis());
}

std::string AlphabetExpr::key() const { return scalar.to_string() + "|" + x_coeff.to_string(); }

SymF plethysm(const SymF& p, const AlphabetExpr& a, const QTPoly& scale) {
    SymF s = to_schur(p);
    const bool polynomial = a.scalar.den() == QTPoly(1L) && a.x_coeff.den() == QTPoly(1L);
    SymF out(Basis::schur);
    if (polynomial) {
        const std::string key = a.key();
        for (const auto& [lambda, c] : s.terms()) {
            const SymF& img = plethysm_memo().get({key, lambda}, [&] {
                return plethysm_degree(SymF::s(lambda), lambda.size(), a, QTPoly(1L));
            });
            out += img * c;
        }
        if (!(scale == QTPoly(1L))) out *= scale;
        return out;
    }
    for (int n : degrees(s)) out += plethysm_degree(s.degree_part(n), n, a, scale);
    return out;
}

QTRat eval_alphabet(const Partition& lambda, const AlphabetExpr& a) {
    if (!a.x_free()) throw std::invalid_argument("alphabet must not involve X");
    const int n = lambda.size();
    const auto& t = degree_tables(n);
    FrobeniusImages im = images(a, n);
    const int i = t.index.at(lambda);
    QTPoly num;
    for (std::size_t j = 0; j < t.parts.size(); ++j) {
        if (t.chi[i][j] == 0) continue;
        const Partition& rho = t.parts[j];
        auto mult = multiplicities(rho);
        QTPoly term(Rational(t.chi[i][j], 1) / Rational(t.z[j]));
        for (int k = 1; k <= n; ++k) {
            int m = k < static_cast<int>(mult.size()) ? mult[k] : 0;
            if (m) term *= im.fnum[k].pow(m);
            if (n / k - m > 0 && !(im.fden[k] == QTPoly(1L))) term *= im.fden[k].pow(n / k - m);
        }
        num += term;
    }
    return QTRat(num, common_denominator(n, im));
}

QTPoly eval_alphabet_poly(const Partition& lambda, const AlphabetExpr& a) {
    return eval_memo().get({a.key(), lambda}, [&] { return eval_alphabet(lambda, a).to_poly(); });
}

SymF specialize(const SymF& p, const Substitution& q_value, const Substitution& t_value) {
    return p.map_coeffs([&](const QTPoly& c) { return qtsym::specialize(c, q_value, t_value); });
}

SymF swap_qt(const SymF& p) {
    return p.map_coeffs([](const QTPoly& c) { return c.swap_qt(); });
}

}  // namespace qtsym
