#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "qtsym/partition.hpp"
#include "qtsym/ribbon.hpp"

using namespace qtsym;

namespace {

// Cells of a diagram as (row, col) pairs.
std::set<std::pair<int, int>> cells(const Partition& p) {
    std::set<std::pair<int, int>> s;
    for (int i = 0; i < p.length(); ++i)
        for (int j = 0; j < p[i]; ++j) s.insert({i, j});
    return s;
}

long long factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }

}  // namespace

TEST_CASE("partition construction") {
    CHECK(Partition(std::vector<int>{3, 1, 0, 0}) == Partition{3, 1});
    CHECK_THROWS(Partition(std::vector<int>{1, 2}));
    CHECK_THROWS(Partition(std::vector<int>{2, -1}));
    CHECK(Partition{2, 2, 1}.size() == 5);
    CHECK(Partition{2, 2, 1}.to_string() == "[2,2,1]");
    CHECK(partitions_of(4).front() == Partition{4});
    CHECK(partitions_of(4).back() == Partition{1, 1, 1, 1});
    CHECK(partitions_of(0).size() == 1);
    // Partition numbers p(n).
    const int p[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77};
    for (int n = 0; n <= 12; ++n) CHECK(partitions_of(n).size() == static_cast<std::size_t>(p[n]));
}

TEST_CASE("conjugate") {
    CHECK(conjugate(Partition{}) == Partition{});
    CHECK(conjugate(Partition{1, 1, 1}) == Partition{3});
    CHECK(conjugate(Partition{2, 2, 1}) == Partition{3, 2});
    for (int n = 0; n <= 12; ++n)
        for (const auto& l : partitions_of(n)) {
            Partition c = conjugate(l);
            CHECK(conjugate(c) == l);
            CHECK(c.size() == l.size());
            std::set<std::pair<int, int>> transposed;
            for (auto [i, j] : cells(l)) transposed.insert({j, i});
            CHECK(cells(c) == transposed);
        }
}

TEST_CASE("dominance") {
    CHECK(dominance_leq(Partition{1, 1, 1}, Partition{3}));
    CHECK_FALSE(dominance_leq(Partition{3}, Partition{1, 1, 1}));
    CHECK(dominance_leq(Partition{2, 2}, Partition{3, 1}));
    CHECK_THROWS_AS(dominance_leq(Partition{2}, Partition{1}), std::invalid_argument);
    for (int n = 1; n <= 7; ++n) {
        const auto& ps = partitions_of(n);
        for (const auto& a : ps) {
            CHECK(dominance_leq(a, a));
            for (const auto& b : ps) {
                if (dominance_leq(a, b) && dominance_leq(b, a)) CHECK(a == b);
                // Lex order extends dominance.
                if (dominance_leq(a, b)) CHECK(a <= b);
                // Conjugation reverses dominance.
                CHECK(dominance_leq(a, b) == dominance_leq(conjugate(b), conjugate(a)));
                for (const auto& c : ps)
                    if (dominance_leq(a, b) && dominance_leq(b, c)) CHECK(dominance_leq(a, c));
            }
        }
    }
}

TEST_CASE("statistics") {
    CHECK(n_stat(Partition{5}) == 0);
    CHECK(n_stat(Partition{1, 1, 1}) == 3);
    CHECK(n_stat(Partition{2, 2, 2}) == 6);
    CHECK(z_stat(Partition{1}) == 1);
    CHECK(z_stat(Partition{2, 1}) == 2);
    CHECK(z_stat(Partition{2, 2}) == 8);
    // sum over lambda of n!/z_lambda = n!
    for (int n = 1; n <= 9; ++n) {
        Rational s = 0;
        for (const auto& l : partitions_of(n)) s += Rational(1) / Rational(z_stat(l));
        CHECK(s == 1);
    }
    CHECK(z_stat(Partition{1, 1, 1, 1}) == static_cast<long>(factorial(4)));
}

TEST_CASE("hook products") {
    QTPoly one(1L), q = QTPoly::q();
    CHECK(hook_product(Partition{1}) == one - q);
    CHECK(hook_product(Partition{2}) == (one - q) * (one - q.pow(2)));
    CHECK(hook_product(Partition{2, 1}) == (one - q).pow(2) * (one - q.pow(3)));
    // Hook length formula: n!/prod hooks = number of SYT; check (3,2) -> 5.
    Partition l{3, 2};
    long long prod = 1;
    for (int i = 0; i < l.length(); ++i)
        for (int j = 0; j < l[i]; ++j) prod *= hook_length(l, i, j);
    CHECK(factorial(5) / prod == 5);
}

TEST_CASE("column and row addition") {
    CHECK(add_column(3, Partition{2, 1}) == Partition{3, 2, 1});
    CHECK(add_column(2, Partition{}) == Partition{1, 1});
    CHECK_THROWS(add_column(1, Partition{1, 1}));
    CHECK(add_row(3, Partition{2, 1}) == Partition{3, 2, 1});
    CHECK(contains(Partition{3, 2}, Partition{2, 2}));
    CHECK_FALSE(contains(Partition{3, 2}, Partition{1, 1, 1}));
}

TEST_CASE("ribbons") {
    CHECK(ribbons_of(1).size() == 1);
    CHECK(ribbons_of(1)[0].descents.empty());
    CHECK(ribbons_of(3).size() == 4);

    Ribbon r = make_ribbon(4, {2, 3});
    auto shape = ribbon_shape(r);
    CHECK(shape.outer == Partition{2, 2, 2});
    CHECK(shape.inner == Partition{1, 1});
    CHECK(comaj(make_ribbon(3, {})) == 3);
    CHECK(comaj(make_ribbon(3, {1, 2})) == 0);
    CHECK(comaj(r) == 1);

    CHECK(ribbon_shape(make_ribbon(4, {})).outer == Partition{4});
    CHECK(ribbon_shape(make_ribbon(4, {1, 2, 3})).outer == Partition{1, 1, 1, 1});

    for (int m = 1; m <= 8; ++m) {
        auto rs = ribbons_of(m);
        CHECK(rs.size() == (1u << (m - 1)));
        std::set<std::vector<int>> seen;
        for (const auto& x : rs) {
            seen.insert(x.descents);
            CHECK(maj(x) + comaj(x) == m * (m - 1) / 2);
            auto s = ribbon_shape(x);
            CHECK(s.outer.size() - s.inner.size() == m);
            CHECK(s.outer[0] + s.outer.length() - 1 == m);
            CHECK(contains(s.outer, s.inner));
            // No 2x2 block: consecutive rows overlap in exactly one column.
            for (int i = 0; i + 1 < s.outer.length(); ++i) CHECK(s.inner[i] == s.outer[i + 1] - 1);
            CHECK(ribbon_from_shape(s.outer, s.inner) == x);
        }
        CHECK(seen.size() == rs.size());
    }
}

TEST_CASE("generalized ribbon terms") {
    Ribbon r = make_ribbon(4, {2, 3});
    auto zero = gen_ribbon_term(r, {0, 0, 0, 0});
    CHECK(zero.alpha == std::vector<int>{1, 1});
    CHECK(zero.beta == std::vector<int>{3, 3});
    CHECK(zero.sign == 1);

    auto a = gen_ribbon_term(r, {1, 0, 0, 0});
    CHECK(a.alpha == std::vector<int>{1, 1});
    CHECK(a.beta == std::vector<int>{4, 3});
    CHECK(a.sign == 1);

    auto b = gen_ribbon_term(r, {0, 1, 0, 0});
    CHECK(b.alpha == std::vector<int>{1, 1});
    CHECK(b.beta == std::vector<int>{3, 4});

    auto c = gen_ribbon_term(r, {0, 0, 1, 0});
    CHECK(c.alpha == std::vector<int>{1, 0});
    CHECK(c.beta == std::vector<int>{3, 3});
    CHECK(c.sign == -1);

    auto d = gen_ribbon_term(r, {0, 0, 0, 1});
    CHECK(d.alpha == std::vector<int>{0, 1});
    CHECK(d.beta == std::vector<int>{3, 3});
    CHECK(d.sign == -1);

    Ribbon big = ribbon_from_shape(Partition{5, 5, 5, 3, 3}, Partition{4, 4, 2, 2});
    CHECK(big.descents == std::vector<int>{3, 4, 7, 8});
    auto e = gen_ribbon_term(big, {1, 1, 0, 1, 0, 2, 0, 1, 0});
    CHECK(e.alpha == std::vector<int>{4, 3, 2, 1});
    CHECK(e.beta == std::vector<int>{6, 6, 5, 5, 3});
    CHECK(e.sign == 1);
    auto f = gen_ribbon_term(big, {1, 1, 0, 1, 0, 4, 0, 1, 5});
    CHECK(f.alpha == std::vector<int>{-1, 3, 2, 1});
    CHECK(f.beta == std::vector<int>{6, 6, 5, 7, 3});
    CHECK(f.sign == -1);

    CHECK_THROWS(gen_ribbon_term(r, {0, 0, 0}));
    CHECK_THROWS(gen_ribbon_term(r, {0, -1, 0, 0}));

    std::mt19937 rng(5);
    for (int i = 0; i < 200; ++i) {
        int m = 1 + static_cast<int>(rng() % 7);
        auto rs = ribbons_of(m);
        const Ribbon& x = rs[rng() % rs.size()];
        std::vector<int> v(m);
        for (auto& e2 : v) e2 = static_cast<int>(rng() % 3);
        auto g = gen_ribbon_term(x, v);
        int inner = ribbon_shape(x).inner.size(), asum = 0;
        for (int k : g.alpha) asum += k;
        CHECK(g.sign == ((inner - asum) % 2 == 0 ? 1 : -1));
    }
}
