#include "qtsym/serialize.hpp"

#include <algorithm>
#include <sstream>

namespace qtsym {

namespace {

constexpr Basis kBases[] = {Basis::schur,    Basis::homogeneous, Basis::elementary,
                            Basis::monomial, Basis::forgotten,   Basis::powersum};

Basis basis_from_name(const std::string& name) {
    for (Basis b : kBases)
        if (basis_name(b) == name) return b;
    throw std::invalid_argument("unknown basis '" + name + "'");
}

// Degree ascending, then lexicographically decreasing.
bool json_order(const Partition& a, const Partition& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return b < a;
}

std::vector<std::pair<Partition, QTPoly>> sorted_terms(const SymF& f, bool (*less)(const Partition&, const Partition&)) {
    std::vector<std::pair<Partition, QTPoly>> ts(f.terms().begin(), f.terms().end());
    std::sort(ts.begin(), ts.end(), [less](const auto& x, const auto& y) { return less(x.first, y.first); });
    return ts;
}

std::string latex_index(const Partition& p) {
    bool wide = std::any_of(p.begin(), p.end(), [](int x) { return x >= 10; });
    std::string s;
    for (int i = 0; i < p.length(); ++i) {
        if (wide && i) s += ',';
        s += std::to_string(p[i]);
    }
    return s.empty() ? "\\emptyset" : s;
}

std::string latex_rational(const Rational& c) {
    if (c.get_den() == 1) return c.get_num().get_str();
    return "\\frac{" + c.get_num().get_str() + "}{" + c.get_den().get_str() + "}";
}

// Joins signed pieces: "a + b - c".
std::string join_signed(const std::vector<std::string>& pieces) {
    std::string out;
    for (const auto& piece : pieces) {
        if (out.empty()) {
            out = piece;
        } else if (piece[0] == '-') {
            out += " - " + piece.substr(1);
        } else {
            out += " + " + piece;
        }
    }
    return out.empty() ? "0" : out;
}

std::string coeff_prefix(const QTPoly& c, bool latex) {
    if (c == QTPoly(1L)) return "";
    if (c == QTPoly(-1L)) return "-";
    std::string body = latex ? to_latex(c) : c.to_string();
    if (c.is_monomial()) return body + (latex ? "\\," : " ");
    return "(" + body + ")" + (latex ? "\\," : " ");
}

}  // namespace

json to_json(const Partition& p) { return json(std::vector<int>(p.begin(), p.end())); }

Partition partition_from_json(const json& j) { return Partition(j.get<std::vector<int>>()); }

json to_json(const QTPoly& p) {
    json out = json::array();
    for (const auto& x : p.terms()) out.push_back({{"c", x.c.get_str()}, {"eq", x.e.q}, {"et", x.e.t}});
    return out;
}

QTPoly qtpoly_from_json(const json& j) {
    std::vector<QTPoly::Term> ts;
    for (const auto& x : j) {
        Rational c(x.at("c").get<std::string>());
        ts.push_back({{x.at("eq").get<int>(), x.at("et").get<int>()}, c});
    }
    return QTPoly::from_terms(std::move(ts));
}

json to_json(const SymF& f) {
    json terms = json::array();
    for (const auto& [l, c] : sorted_terms(f, json_order)) terms.push_back({{"lambda", to_json(l)}, {"coeff", to_json(c)}});
    return {{"basis", basis_name(f.basis())}, {"terms", terms}};
}

SymF symf_from_json(const json& j) {
    SymF f(basis_from_name(j.at("basis").get<std::string>()));
    for (const auto& term : j.at("terms")) f.add_term(partition_from_json(term.at("lambda")), qtpoly_from_json(term.at("coeff")));
    return f;
}

json to_json(const KostkaTable& t) {
    json rows = json::array();
    for (const auto& mu : partitions_of(t.n)) {
        auto it = t.rows.find(mu);
        if (it == t.rows.end()) continue;
        json coeffs = json::array();
        for (const auto& l : partitions_of(t.n)) {
            QTPoly c = it->second.coeff(l);
            if (!c.is_zero()) coeffs.push_back({{"lambda", to_json(l)}, {"poly", to_json(c)}});
        }
        rows.push_back({{"mu", to_json(mu)}, {"coeffs", coeffs}});
    }
    return {{"n", t.n}, {"engine", engine_name(t.engine)}, {"rows", rows}};
}

KostkaTable kostka_from_json(const json& j) {
    KostkaTable t;
    t.n = j.at("n").get<int>();
    t.engine = engine_from_name(j.at("engine").get<std::string>());
    for (const auto& row : j.at("rows")) {
        SymF f(Basis::schur);
        for (const auto& c : row.at("coeffs")) f.add_term(partition_from_json(c.at("lambda")), qtpoly_from_json(c.at("poly")));
        t.rows.emplace(partition_from_json(row.at("mu")), std::move(f));
    }
    return t;
}

std::string canonical(const json& j) { return j.dump(); }

std::string to_text(const SymF& f) {
    std::vector<std::string> pieces;
    const char b = basis_letter(f.basis());
    for (const auto& [l, c] : sorted_terms(f, [](const Partition& x, const Partition& y) { return x < y; })) {
        if (l.empty()) {
            pieces.push_back(c.is_monomial() ? c.to_string() : "(" + c.to_string() + ")");
            continue;
        }
        pieces.push_back(coeff_prefix(c, false) + b + l.to_string());
    }
    return join_signed(pieces);
}

std::string to_latex(const QTPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (const auto& x : p.terms()) {
        Rational c = x.c;
        const bool neg = c < 0;
        if (neg) c = -c;
        if (neg)
            out += "-";
        else if (!out.empty())
            out += "+";
        std::string mono;
        auto var = [&mono](char v, int k) {
            if (k == 0) return;
            mono += v;
            if (k != 1) mono += "^{" + std::to_string(k) + "}";
        };
        var('q', x.e.q);
        var('t', x.e.t);
        if (mono.empty())
            out += latex_rational(c);
        else
            out += (c == 1 ? "" : latex_rational(c)) + mono;
    }
    return out;
}

std::string to_latex(const SymF& f) {
    std::vector<std::string> pieces;
    const char b = basis_letter(f.basis());
    for (const auto& [l, c] : sorted_terms(f, [](const Partition& x, const Partition& y) { return x < y; })) {
        if (l.empty()) {
            pieces.push_back(c.is_monomial() ? to_latex(c) : "(" + to_latex(c) + ")");
            continue;
        }
        pieces.push_back(coeff_prefix(c, true) + b + "_{" + latex_index(l) + "}");
    }
    return join_signed(pieces);
}

std::string to_text(const KostkaTable& t) {
    std::ostringstream os;
    os << "n=" << t.n << " engine=" << engine_name(t.engine) << "\n";
    for (const auto& mu : partitions_of(t.n)) {
        auto it = t.rows.find(mu);
        if (it != t.rows.end()) os << "H" << mu.to_string() << " = " << to_text(it->second) << "\n";
    }
    return os.str();
}

std::string to_latex(const KostkaTable& t) {
    const auto& ps = partitions_of(t.n);
    std::ostringstream os;
    os << "\\begin{tabular}{c|" << std::string(ps.size(), 'c') << "}\n";
    os << "$\\lambda \\backslash \\mu$";
    for (const auto& mu : ps) os << " & $" << latex_index(mu) << "$";
    os << " \\\\\n\\hline\n";
    for (const auto& l : ps) {
        os << "$" << latex_index(l) << "$";
        for (const auto& mu : ps) os << " & $" << to_latex(t.entry(l, mu)) << "$";
        os << " \\\\\n";
    }
    os << "\\end{tabular}\n";
    return os.str();
}

}  // namespace qtsym
