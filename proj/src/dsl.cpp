#include "qtsym/dsl.hpp"

#include <cctype>
#include <map>

#include "qtsym/operators.hpp"
#include "qtsym/qt_bases.hpp"
#include "qtsym/ribbon_ops.hpp"

namespace qtsym {

ParseError::ParseError(std::string input, std::size_t pos, const std::string& message)
    : std::runtime_error(message + " at column " + std::to_string(pos + 1)),
      input_(std::move(input)),
      pos_(pos),
      message_(message) {}

std::string ParseError::diagnostic() const {
    return "parse error: " + message_ + "\n  " + input_ + "\n  " + std::string(pos_, ' ') + "^";
}

namespace {

struct Token {
    enum Kind { number, ident, symbol, end } kind;
    std::string text;
    std::size_t pos;
};

std::vector<Token> tokenize(const std::string& s) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < s.size()) {
        const unsigned char c = s[i];
        if (std::isspace(c)) {
            ++i;
        } else if (std::isdigit(c)) {
            std::size_t j = i;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
            out.push_back({Token::number, s.substr(i, j - i), i});
            i = j;
        } else if (std::isalpha(c) || c == '_') {
            std::size_t j = i;
            while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
            out.push_back({Token::ident, s.substr(i, j - i), i});
            i = j;
        } else if (std::string_view("()[],+-*/^").find(static_cast<char>(c)) != std::string_view::npos) {
            out.push_back({Token::symbol, std::string(1, static_cast<char>(c)), i});
            ++i;
        } else {
            throw ParseError(s, i, std::string("unexpected character '") + static_cast<char>(c) + "'");
        }
    }
    out.push_back({Token::end, "", s.size()});
    return out;
}

class Cursor {
public:
    explicit Cursor(const std::string& s) : input_(s), toks_(tokenize(s)) {}

    const Token& peek() const { return toks_[i_]; }
    const Token& next() { return toks_[i_ == toks_.size() - 1 ? i_ : i_++]; }
    bool at(const char* sym) const { return peek().kind == Token::symbol && peek().text == sym; }
    bool accept(const char* sym) {
        if (!at(sym)) return false;
        ++i_;
        return true;
    }
    void expect(const char* sym) {
        if (!accept(sym)) fail(std::string("expected '") + sym + "'");
    }
    [[noreturn]] void fail(const std::string& msg) const { fail_at(peek().pos, msg); }
    [[noreturn]] void fail_at(std::size_t pos, const std::string& msg) const { throw ParseError(input_, pos, msg); }
    void expect_end() {
        if (peek().kind != Token::end) fail("unexpected '" + peek().text + "'");
    }

    long integer() {
        const Token& tk = peek();
        if (tk.kind != Token::number) fail("expected an integer");
        if (tk.text.size() > 9) fail("integer too large");
        ++i_;
        return std::stol(tk.text);
    }
    long signed_integer() {
        const bool neg = accept("-");
        long v = integer();
        return neg ? -v : v;
    }
    // number ['/' number]
    Rational rational() {
        Rational num(peek().text);
        next();
        if (!accept("/")) return num;
        if (peek().kind != Token::number) fail("expected a denominator");
        Rational den(peek().text);
        if (den == 0) fail("division by zero");
        next();
        Rational r = num / den;
        r.canonicalize();
        return r;
    }
    // 'q' or 't' with optional signed exponent; the current token is the variable.
    QTPoly variable_power() {
        const bool is_q = peek().text == "q";
        next();
        long k = 1;
        if (accept("^")) k = signed_integer();
        return is_q ? QTPoly::monomial(static_cast<int>(k), 0) : QTPoly::monomial(0, static_cast<int>(k));
    }
    bool at_variable() const { return peek().kind == Token::ident && (peek().text == "q" || peek().text == "t"); }

private:
    std::string input_;
    std::vector<Token> toks_;
    std::size_t i_ = 0;
};

OpExpr scalar_node(QTPoly v) {
    OpExpr e;
    e.kind = OpExpr::Kind::scalar;
    e.value = std::move(v);
    return e;
}

// Argument shape of each call: 'i' integer, 'e' expression.
const std::map<std::string, char>& call_table() {
    static const std::map<std::string, char> table{
        {"S", 'i'},     {"St", 'i'},    {"jing", 'i'},  {"Dt", 'i'},     {"Dts", 'i'},    {"hlcol", 'i'},  {"maccol", 'i'},
        {"homcol", 'i'}, {"homcol0", 'i'}, {"flip", 'e'}, {"qtwist", 'e'}, {"ttwist", 'e'}, {"ftconj", 'e'}};
    return table;
}

class OpParser {
public:
    explicit OpParser(const std::string& s) : c_(s) {}

    OpExpr parse() {
        OpExpr e = sum();
        c_.expect_end();
        return e;
    }

private:
    OpExpr sum() {
        std::vector<OpExpr> items;
        std::vector<int> signs;
        int sign = 1;
        if (c_.accept("-"))
            sign = -1;
        else
            c_.accept("+");
        items.push_back(product());
        signs.push_back(sign);
        while (c_.at("+") || c_.at("-")) {
            signs.push_back(c_.next().text == "+" ? 1 : -1);
            items.push_back(product());
        }
        if (items.size() == 1 && signs[0] == 1) return items[0];
        bool all_scalar = true;
        for (const auto& x : items) all_scalar = all_scalar && x.kind == OpExpr::Kind::scalar;
        if (all_scalar) {
            QTPoly v;
            for (std::size_t i = 0; i < items.size(); ++i) v += items[i].value * Rational(signs[i]);
            return scalar_node(v);
        }
        OpExpr e;
        e.kind = OpExpr::Kind::sum;
        e.args = std::move(items);
        e.signs = std::move(signs);
        return e;
    }

    OpExpr product() {
        std::vector<OpExpr> factors;
        auto push = [&factors](OpExpr f) {
            if (f.kind == OpExpr::Kind::compose)
                for (auto& g : f.args) factors.push_back(std::move(g));
            else
                factors.push_back(std::move(f));
        };
        push(unary());
        while (c_.accept("*")) push(unary());
        std::vector<OpExpr> merged;
        for (auto& f : factors) {
            if (f.kind == OpExpr::Kind::scalar && !merged.empty() && merged.back().kind == OpExpr::Kind::scalar)
                merged.back().value = merged.back().value * f.value;
            else
                merged.push_back(std::move(f));
        }
        if (merged.size() == 1) return merged[0];
        OpExpr e;
        e.kind = OpExpr::Kind::compose;
        e.args = std::move(merged);
        return e;
    }

    OpExpr unary() {
        if (c_.accept("-")) {
            OpExpr x = unary();
            if (x.kind == OpExpr::Kind::scalar) return scalar_node(-x.value);
            OpExpr e;
            e.kind = OpExpr::Kind::sum;
            e.args = {std::move(x)};
            e.signs = {-1};
            return e;
        }
        return atom();
    }

    OpExpr atom() {
        const Token tk = c_.peek();
        if (tk.kind == Token::number) return scalar_node(QTPoly(c_.rational()));
        if (c_.at_variable()) return scalar_node(c_.variable_power());
        if (c_.accept("(")) {
            OpExpr e = sum();
            c_.expect(")");
            return e;
        }
        if (tk.kind != Token::ident) c_.fail(tk.kind == Token::end ? "unexpected end of input" : "unexpected '" + tk.text + "'");
        auto it = call_table().find(tk.text);
        if (it == call_table().end()) c_.fail("unknown operator '" + tk.text + "'");
        c_.next();
        c_.expect("(");
        OpExpr e;
        e.kind = OpExpr::Kind::call;
        e.name = tk.text;
        if (it->second == 'e') {
            e.args.push_back(sum());
        } else {
            const std::size_t pos = c_.peek().pos;
            const long m = c_.signed_integer();
            const bool nonneg = e.name == "hlcol" || e.name == "maccol" || e.name == "homcol" || e.name == "homcol0";
            if (nonneg && m < 0) c_.fail_at(pos, e.name + " needs a nonnegative argument");
            e.ints.push_back(static_cast<int>(m));
            if (e.name == "jing") {
                e.value = QTPoly::q();
                if (c_.accept(",")) {
                    if (!c_.at_variable()) c_.fail("expected q or t");
                    e.value = c_.peek().text == "q" ? QTPoly::q() : QTPoly::t();
                    c_.next();
                }
            }
        }
        c_.expect(")");
        return e;
    }

    Cursor c_;
};

std::string print_scalar(const QTPoly& v) {
    if (v.is_monomial() && v.leading().c > 0) {
        const auto& x = v.leading();
        std::string s;
        auto var = [&s](char name, int k) {
            if (k == 0) return;
            if (!s.empty()) s += '*';
            s += name;
            if (k != 1) s += '^' + std::to_string(k);
        };
        if (x.c != 1 || (x.e.q == 0 && x.e.t == 0)) s = x.c.get_str();
        var('q', x.e.q);
        var('t', x.e.t);
        return s;
    }
    return "(" + v.to_string() + ")";
}

}  // namespace

OpExpr parse_op(const std::string& text) { return OpParser(text).parse(); }

std::string print_op(const OpExpr& e) {
    switch (e.kind) {
        case OpExpr::Kind::scalar:
            return print_scalar(e.value);
        case OpExpr::Kind::call: {
            if (!e.args.empty()) return e.name + "(" + print_op(e.args[0]) + ")";
            std::string s = e.name + "(" + std::to_string(e.ints[0]);
            if (e.name == "jing" && e.value == QTPoly::t()) s += ",t";
            return s + ")";
        }
        case OpExpr::Kind::compose: {
            std::string s;
            for (const auto& f : e.args) {
                if (!s.empty()) s += '*';
                s += f.kind == OpExpr::Kind::sum ? "(" + print_op(f) + ")" : print_op(f);
            }
            return s;
        }
        case OpExpr::Kind::sum: {
            std::string s;
            for (std::size_t i = 0; i < e.args.size(); ++i) {
                const auto& f = e.args[i];
                std::string body = f.kind == OpExpr::Kind::sum ? "(" + print_op(f) + ")" : print_op(f);
                if (i == 0)
                    s = (e.signs[i] < 0 ? "-" : "") + body;
                else
                    s += (e.signs[i] < 0 ? " - " : " + ") + body;
            }
            return s;
        }
    }
    return "";
}

LinOp build_op(const OpExpr& e) {
    switch (e.kind) {
        case OpExpr::Kind::scalar:
            return scale(e.value, identity_op());
        case OpExpr::Kind::compose: {
            LinOp r = build_op(e.args[0]);
            for (std::size_t i = 1; i < e.args.size(); ++i) r = compose(r, build_op(e.args[i]));
            return r;
        }
        case OpExpr::Kind::sum: {
            LinOp r = e.signs[0] < 0 ? scale(QTPoly(-1L), build_op(e.args[0])) : build_op(e.args[0]);
            for (std::size_t i = 1; i < e.args.size(); ++i) {
                LinOp x = build_op(e.args[i]);
                r = e.signs[i] < 0 ? r - x : r + x;
            }
            return r;
        }
        case OpExpr::Kind::call:
            break;
    }
    const std::string& n = e.name;
    if (!e.args.empty()) {
        LinOp inner = build_op(e.args[0]);
        if (n == "flip") return flip(inner);
        if (n == "qtwist") return qtwist(inner, QTPoly::q());
        if (n == "ttwist") return qtwist(inner, QTPoly::t());
        if (n == "ftconj") return ft_conjugate(inner);
    } else {
        const int m = e.ints[0];
        if (n == "S") return bernstein_S(m);
        if (n == "St") return bernstein_Stilde(m);
        if (n == "jing") return jing(m, e.value);
        if (n == "Dt") return dtilde(m);
        if (n == "Dts") return dtilde_star(m);
        if (n == "hlcol") return hl_column_op(m);
        if (n == "maccol") return mac_column_op(m);
        if (n == "homcol") return homogeneous_column_op(m, false);
        if (n == "homcol0") return homogeneous_column_op(m, true);
    }
    throw std::invalid_argument("unknown operator '" + n + "'");
}

namespace {

class SymFParser {
public:
    explicit SymFParser(const std::string& s) : c_(s) {}

    SymF parse() {
        SymF f = sum();
        c_.expect_end();
        return f;
    }

private:
    SymF sum() {
        SymF acc;
        bool neg = c_.accept("-");
        if (!neg) c_.accept("+");
        acc = neg ? -product() : product();
        while (c_.at("+") || c_.at("-")) {
            const bool minus = c_.next().text == "-";
            SymF x = product();
            acc = minus ? acc - x : acc + x;
        }
        return acc;
    }

    bool starts_atom() const {
        const Token& tk = c_.peek();
        return tk.kind == Token::number || tk.kind == Token::ident || (tk.kind == Token::symbol && tk.text == "(");
    }

    SymF product() {
        SymF acc = unary();
        while (true) {
            if (c_.accept("*")) {
                acc = multiply(acc, unary());
            } else if (starts_atom()) {
                acc = multiply(acc, unary());
            } else {
                return acc;
            }
        }
    }

    SymF unary() {
        if (c_.accept("-")) return -unary();
        SymF base = atom();
        if (c_.accept("^")) {
            const long k = c_.integer();
            SymF r = SymF::one();
            for (long i = 0; i < k; ++i) r = multiply(r, base);
            return r;
        }
        return base;
    }

    SymF atom() {
        const Token tk = c_.peek();
        if (tk.kind == Token::number) return SymF::scalar(QTPoly(c_.rational()));
        if (c_.at_variable()) return SymF::scalar(c_.variable_power());
        if (c_.accept("(")) {
            SymF f = sum();
            c_.expect(")");
            return f;
        }
        if (tk.kind == Token::end) c_.fail("unexpected end of input");
        if (tk.kind != Token::ident) c_.fail("unexpected '" + tk.text + "'");
        if (tk.text.size() != 1 || std::string_view("shempf").find(tk.text[0]) == std::string_view::npos)
            c_.fail("unknown symbol '" + tk.text + "'");
        const Basis b = basis_from_letter(tk.text[0]);
        c_.next();
        c_.expect("[");
        std::vector<int> parts;
        const std::size_t pos = c_.peek().pos;
        if (!c_.at("]")) {
            do {
                parts.push_back(static_cast<int>(c_.integer()));
            } while (c_.accept(","));
        }
        c_.expect("]");
        for (std::size_t i = 0; i < parts.size(); ++i)
            if (parts[i] <= 0 || (i && parts[i] > parts[i - 1])) c_.fail_at(pos, "not a partition");
        return to_schur(SymF::element(b, Partition(parts)));
    }

    Cursor c_;
};

}  // namespace

SymF parse_symf(const std::string& text) { return SymFParser(text).parse(); }

QTPoly parse_qtpoly(const std::string& text) {
    OpExpr e = parse_op(text);
    if (e.kind != OpExpr::Kind::scalar) throw ParseError(text, 0, "expected a polynomial in q and t");
    return e.value;
}

}  // namespace qtsym
