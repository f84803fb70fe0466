#include <random>

#include "doctest.h"
#include "qtsym/operators.hpp"
#include "qtsym/ribbon_ops.hpp"

using namespace qtsym;

namespace {

const QTPoly one(1L);
const QTPoly q = QTPoly::q();
const QTPoly t = QTPoly::t();

SymF s(std::initializer_list<int> p) { return SymF::s(Partition(p)); }

void check_equal(const LinOp& v, const LinOp& w, int d) {
    auto diff = first_difference(v, w, d);
    INFO(v.name(), " vs ", w.name());
    CHECK_MESSAGE(!diff.has_value(), "differ on s", (diff ? diff->to_string() : std::string()));
}

StraightenedOp canon(int sign, Partition skew, std::vector<int> cols) { return {sign, std::move(skew), std::move(cols)}; }

StraightenedOp term_form(const Ribbon& r, const std::vector<int>& v) {
    GenRibbonTerm g = gen_ribbon_term(r, v);
    return straighten(g.alpha, g.beta, g.sign);
}

SymF q_part(const SymF& f, int k) {
    return f.map_coeffs([k](const QTPoly& c) { return c.q_coefficient(k); });
}

const SymF h111 = s({1, 1, 1}) + s({2, 1}) * (t + t * t) + s({3}) * t.pow(3);

}  // namespace

TEST_CASE("straightening") {
    CHECK(straighten({-1, 3, 2, 1}, {6, 6, 5, 7, 3}, -1) == canon(1, Partition{2, 1, 1, 1}, {6, 6, 6, 6, 3}));
    CHECK(straighten({}, {3, 4}).is_zero());
    CHECK(straighten({0, 1}, {3, 3}).is_zero());
    CHECK(straighten({1, -2}, {2}).is_zero());
    CHECK(straighten({2, 0}, {2}) == canon(1, Partition{2}, {2}));
    CHECK(straighten({1, 3}, {1}) == canon(-1, Partition{2, 2}, {1}));
    CHECK(straighten({}, {1, 4}) == canon(-1, Partition{}, {3, 2}));
    CHECK(straighten({}, {0, 5}, 1) == canon(-1, Partition{}, {4, 1}));

    std::mt19937 rng(11);
    std::uniform_int_distribution<int> len(0, 5), val(-2, 7);
    int zeros = 0;
    for (int trial = 0; trial < 500; ++trial) {
        std::vector<int> a(len(rng)), c(len(rng));
        for (int& x : a) x = val(rng);
        for (int& x : c) x = val(rng);
        StraightenedOp x = straighten(a, c, 1);
        StraightenedOp y = straighten_by_swaps(a, c, 1, rng);
        CHECK(x == y);
        zeros += x.is_zero();
        if (!x.is_zero())
            for (std::size_t i = 0; i + 1 < x.columns.size(); ++i) CHECK(x.columns[i] >= x.columns[i + 1]);
    }
    CHECK(zeros > 0);
    CHECK(zeros < 500);
}

TEST_CASE("generalized ribbons from the worked pictures") {
    Ribbon r4 = make_ribbon(4, {2, 3});
    CHECK(term_form(r4, {1, 0, 0, 0}) == canon(1, Partition{1, 1}, {4, 3}));
    CHECK(term_form(r4, {0, 1, 0, 0}).is_zero());
    CHECK(term_form(r4, {0, 0, 1, 0}) == canon(-1, Partition{1}, {3, 3}));
    CHECK(term_form(r4, {0, 0, 0, 1}).is_zero());

    Ribbon r9 = make_ribbon(9, {3, 4, 7, 8});
    CHECK(term_form(r9, {1, 1, 0, 1, 0, 2, 0, 1, 0}) == canon(1, Partition{4, 3, 2, 1}, {6, 6, 5, 5, 3}));
    CHECK(term_form(r9, {1, 1, 0, 1, 0, 4, 0, 1, 5}) == canon(1, Partition{2, 1, 1, 1}, {6, 6, 6, 6, 3}));

    check_equal(gen_ribbon_operator(r4, {0, 0, 0, 0}), ribbon_operator(r4), 4);
    check_equal(gen_ribbon_operator(r4, {0, 0, 1, 0}),
                scale(-one, skewing_op(s({1})) * bernstein_Stilde(3) * bernstein_Stilde(3)), 3);
}

TEST_CASE("ribbon operators") {
    check_equal(ribbon_operator(make_ribbon(1, {})), bernstein_Stilde(1), 5);
    for (int m = 1; m <= 4; ++m) {
        std::vector<int> all;
        for (int i = 1; i < m; ++i) all.push_back(i);
        check_equal(ribbon_operator(make_ribbon(m, all)), bernstein_Stilde(m), 4);
    }
    CHECK(ribbon_operator(make_ribbon(3, {1, 2}))(SymF::one()) == s({1, 1, 1}));

    // Adding a descent at the end: S^{R+} = flip(flip(S^R) S_1).
    for (int m = 1; m <= 3; ++m)
        for (const auto& r : ribbons_of(m)) {
            std::vector<int> d = r.descents;
            d.push_back(m);
            Ribbon rp = make_ribbon(m + 1, d);
            check_equal(ribbon_operator(rp), flip(flip(ribbon_operator(r)) * bernstein_S(1)), 4);
        }
}

TEST_CASE("Hall-Littlewood column operator") {
    check_equal(hl_column_op(1), bernstein_Stilde(1), 5);
    CHECK(hl_column_op(3)(SymF::one()) == h111);

    for (int m = 1; m <= 4; ++m) {
        LinOp at0([m](const Partition& l) { return specialize(hl_column_op(m).on_schur(l), std::nullopt, QTPoly()); },
                  m, "hlcol|t=0");
        check_equal(at0, bernstein_Stilde(m), m <= 3 ? 5 : 4);
    }

    for (int m = 1; m <= 3; ++m) {
        LinOp rhs = scale(t.pow(m), hl_column_op(m) * bernstein_Stilde(1)) + flip(flip(hl_column_op(m)) * bernstein_S(1));
        check_equal(hl_column_op(m + 1), rhs, 4);
    }

    for (int n = 1; n <= 6; ++n)
        for (const auto& lam : partitions_of(n)) {
            SymF cols = SymF::one(), rows = SymF::one();
            for (int i = lam.length() - 1; i >= 0; --i) cols = hl_column_op(lam[i])(cols);
            Partition mu = conjugate(lam);
            for (int i = mu.length() - 1; i >= 0; --i) rows = jing(mu[i], t)(rows);
            INFO(lam.to_string());
            CHECK(cols == rows);
        }
}

TEST_CASE("thickened ribbons reproduce the twist coefficients") {
    auto tv = thickness_vectors(3, 2);
    CHECK(tv.size() == 6);
    CHECK(tv.front() == std::vector<int>{0, 0, 2});
    CHECK(tv.back() == std::vector<int>{2, 0, 0});

    for (int m = 1; m <= 3; ++m)
        for (const auto& r : ribbons_of(m)) {
            check_equal(qtwist_coeff_ribbon(r, 0), ribbon_operator(r), 4);
            for (int k = 1; k <= 4; ++k) check_equal(qtwist_coeff_ribbon(r, k), qtwist_coeff(ribbon_operator(r), k), 4);
        }
    Ribbon r = make_ribbon(2, {1});
    CHECK(qtwist_coeff_ribbon(r, 3)(s({2})).is_zero());
}

TEST_CASE("Macdonald column operator") {
    for (int m = 1; m <= 4; ++m) check_equal(mac_column_op(m), qtwist(hl_column_op(m), q), 4);

    CHECK(mac_column_op(3)(SymF::one()) == h111);
    SymF h222 = mac_column_op(3)(h111);
    CHECK(q_part(h222, 0) == s({2, 2, 2}) + s({3, 2, 1}) * (t + t * t) + s({3, 3}) * t.pow(3) + s({4, 1, 1}) * t.pow(3) +
                                 s({4, 2}) * (t.pow(2) + t.pow(3) + t.pow(4)) + s({5, 1}) * (t.pow(4) + t.pow(5)) +
                                 s({6}) * t.pow(6));
    CHECK(q_part(h222, 3) == s({3, 3}) * t.pow(6) + s({3, 2, 1}) * (t.pow(4) + t.pow(5)) + s({3, 1, 1, 1}) * t.pow(3) +
                                 s({2, 2, 2}) * t.pow(3) + s({2, 2, 1, 1}) * ((t * t + t + one) * t * t) +
                                 s({2, 1, 1, 1, 1}) * (t + t * t) + s({1, 1, 1, 1, 1, 1}));
}
