#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "toro/characters.hpp"

#include <random>
#include <set>

using namespace toro;
using M = Monomial;

namespace {

// Partitions of exactly s, built by a recursion independent of the library enumerator.
void parts_of(int s, int cap, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (s == 0) {
        out.push_back(cur);
        return;
    }
    for (int p = std::min(s, cap); p >= 1; --p) {
        cur.push_back(p);
        parts_of(s - p, p, cur, out);
        cur.pop_back();
    }
}

std::vector<std::vector<int>> all_parts(int s) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    parts_of(s, s, cur, out);
    return out;
}

int at(const std::vector<int>& p, int i) { return i <= (int)p.size() ? p[i - 1] : 0; }

// number of n-tuples of partitions of total size s
long colored_count(int n, int s) {
    if (n == 0) return s == 0 ? 1 : 0;
    long c = 0;
    for (int a = 0; a <= s; ++a) c += (long)all_parts(a).size() * colored_count(n - 1, s - a);
    return c;
}

// triples λ1 ⊇ λ2 ⊇ λ3 of total size s
long nested_triples(int s) {
    long c = 0;
    for (int a = 0; a <= s; ++a)
        for (int b = 0; a + b <= s; ++b)
            for (auto& l1 : all_parts(a))
                for (auto& l2 : all_parts(b)) {
                    bool in = true;
                    for (int i = 1; i <= (int)l2.size(); ++i) in = in && at(l1, i) >= at(l2, i);
                    if (!in) continue;
                    for (auto& l3 : all_parts(s - a - b)) {
                        bool in3 = true;
                        for (int i = 1; i <= (int)l3.size(); ++i) in3 = in3 && at(l2, i) >= at(l3, i);
                        if (in3) ++c;
                    }
                }
    return c;
}

std::vector<std::pair<Partition, Partition>> sample_pairs(int n, int count, unsigned seed) {
    auto all = admissible_pairs(n, 5);
    std::mt19937 rng(seed);
    std::shuffle(all.begin(), all.end(), rng);
    all.resize(count);
    return all;
}

}  // namespace

TEST_CASE("power series basics") {
    PowerSeriesZ a(std::vector<Int>{1, 2, 3}), b(std::vector<Int>{1, -1, 0, 5});
    CHECK((a * b).str() == "1 1 1");
    CHECK((a + b).order() == 2);
    CHECK(first_mismatch(a, a) == -1);
    CHECK(first_mismatch(a, b) == 1);
    CHECK(PowerSeriesZ::monomial(2, -1, 4).str() == "0 0 -1 0 0");
    CHECK(PowerSeriesZ::monomial(9, 1, 4).str() == "0 0 0 0 0");
    CHECK(to_tsv(a).rfind("degree\tdimension\n0\t1\n", 0) == 0);
    CHECK(to_json(a)["coefficients"][2] == "3");
}

TEST_CASE("inverse Pochhammer coefficients count colored partitions") {
    for (int n = 1; n <= 4; ++n) {
        auto s = PowerSeriesZ::inverse_pochhammer(n, 12);
        for (int t = 0; t <= 12; ++t) CHECK(s[t] == colored_count(n, t));
    }
}

TEST_CASE("enumerated characters") {
    auto f = char_enumerate(fock_module({{3, 0}, M::U()}), 10);
    for (int t = 0; t <= 10; ++t) CHECK(f[t] == (long)all_parts(t).size());
    auto g = char_enumerate(g_module({}, {}, {3, 0}), 8);
    for (int t = 0; t <= 8; ++t) CHECK(g[t] == nested_triples(t));
    CHECK(char_enumerate(vacuum_macmahon({3, 0}), 7).str() == "1 1 3 6 13 24 48 86");
}

TEST_CASE("the layer view of G and the n-tuple view agree") {
    for (auto [mu, nu] : std::vector<std::pair<Partition, Partition>>{{{2, 1, 1}, {2, 2, 2}}, {{1}, {}}, {{2}, {1, 1, 1}}}) {
        int n = 3;
        auto g = g_module(mu, nu, {n, 0});
        for (int t = 0; t <= 7; ++t) {
            auto tuples = ntuple_basis(mu, nu, n, t);
            std::set<std::vector<Partition>> want(tuples.begin(), tuples.end()), got;
            for (auto& l : g.basis_by_degree(t)) got.insert(g_label_to_tuple(mu, nu, n, l));
            CHECK(got.size() == g.basis_by_degree(t).size());
            CHECK(got == want);
        }
        CHECK(ntuple_char(mu, nu, n, 10) == char_enumerate(g, 10));
    }
}

TEST_CASE("alternating sum: small cases") {
    // μ = ν = ∅, n = 3: exponents 0, 1, 1, 3, 3, 4 with signs of the lengths
    std::multiset<std::pair<int, int>> got;
    for (auto& t : weyl_summands({}, {}, 3)) got.insert({t.e, t.sign});
    CHECK(got == std::multiset<std::pair<int, int>>{{0, 1}, {1, -1}, {1, -1}, {3, 1}, {3, 1}, {4, -1}});
    for (auto& t : weyl_summands({2, 1}, {1, 1, 1}, 3)) {
        CHECK(t.e >= 0);
        if (t.s == Permutation::identity(3)) {
            CHECK(t.e == 0);
            CHECK(t.sign == 1);
        }
    }
    // one reflection: (μ'_i - μ'_{i+1} + 1)(ν'_i - ν'_{i+1} + 1)
    for (auto [mu, nu] : sample_pairs(3, 8, 11)) {
        auto ex = kt_exponents(lambda_weight(mu, nu, 0, 3), beta_roots(nu, 3, 0, WidthBound::Below));
        auto mc = conjugate(mu), nc = conjugate(nu);
        for (int i = 1; i <= 2; ++i)
            CHECK(ex.at(Permutation::simple(i, 3)) == (mc[i] - mc[i + 1] + 1) * (nc[i] - nc[i + 1] + 1));
    }
    LambdaWeight bad{{1, 0}, M::one()};
    CHECK_THROWS_AS(kt_exponents(bad, beta_roots({}, 3, 0, WidthBound::Below)), NonIntegralPairing);
}

TEST_CASE("character identity for G") {
    std::vector<std::tuple<Partition, Partition, int>> cases{
        {{}, {}, 3}, {{1}, {}, 3}, {{2, 1, 1}, {2, 2, 2}, 3}, {{}, {}, 4}};
    for (auto& [mu, nu, n] : cases) {
        auto e = char_enumerate(g_module(mu, nu, {n, 0}), 10);
        auto w = weyl_sum_char(mu, nu, n, 10);
        auto k = kt_char(mu, nu, n, 0, 10);
        CHECK_MESSAGE(first_mismatch(e, w) == -1, mu.str() << nu.str() << " " << e.str() << " vs " << w.str());
        CHECK(first_mismatch(w, k) == -1);
        CHECK(ntuple_char(mu, nu, n, 10) == e);
        auto c = select_convention(mu, nu, n, 8);
        REQUIRE(c.chosen.has_value());
        CHECK(*c.chosen == WeylConvention::Primary);
    }
    CHECK(char_enumerate(g_module({}, {}, {3, 0}), 10).str() == "1 1 3 6 12 21 40 67 117 193 319");
}

TEST_CASE("orbit sum equals the alternating sum term by term") {
    for (int k : {0, 1})
        for (auto [mu, nu] : sample_pairs(3, 5, 2026 + k)) {
            auto ws = weyl_summands(mu, nu, 3);
            auto ex = kt_exponents(lambda_weight(mu, nu, k, 3), beta_roots(nu, 3, k, WidthBound::Below));
            std::set<int> distinct;
            for (auto& t : ws) {
                CHECK(ex.at(t.s) == t.e);
                distinct.insert(t.e);
            }
            if (distinct.size() != ws.size()) MESSAGE("e not injective for " << mu.str() << " " << nu.str());
            CHECK(kt_char(mu, nu, 3, k, 12) == weyl_sum_char(mu, nu, 3, 12));
            CHECK(weyl_sum_char(mu, nu, 3, 8) == char_enumerate(g_module(mu, nu, {3, k}), 8));
        }
}

TEST_CASE("lowest weight of G") {
    auto r = hwt_check({2, 1, 1}, {2, 2, 2}, {3, 0});
    CHECK_MESSAGE(r.ok(), to_json(r).dump());
    CHECK(r.k_delta == M{0, 3, -3, 0});  // q1^{-3/2}
    REQUIRE(r.entries.size() == 2);
    CHECK(r.entries[1].eigenvalue == M::q(2));
    CHECK(r.entries[1].sharp == 1);
    CHECK(r.entries[1].v1 == M::q(-4));
    CHECK(r.entries[1].v2 == M::q(6));

    auto e = hwt_check({}, {}, {3, 0});
    CHECK(e.ok());
    for (auto& x : e.entries) CHECK(x.eigenvalue.is_one());

    for (int k : {0, 1, 2})
        for (auto [mu, nu] : sample_pairs(3, 5, 99 + k)) {
            auto rr = hwt_check(mu, nu, {3, k});
            CHECK_MESSAGE(rr.ok(), to_json(rr).dump());
        }
    auto t = r;
    t.entries[0].eigenvalue = M::q(5);
    CHECK_THROWS_AS(require_hwt(t), EigenvalueMismatch);
    CHECK(sharp(2, 0, {2, 2, 2}, 3) == 1);
    CHECK(sharp(1, 0, {2, 2, 2}, 3) == 0);
}
