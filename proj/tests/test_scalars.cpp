#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "metatok/scalars.hpp"
#include "test_support.hpp"

#include <functional>
#include <set>

using namespace metatok;

namespace {

std::vector<int> exps_of(const GaussMonomial& m) { return {m.exps().begin(), m.exps().end()}; }

// Every normal form reachable by applying g_a g_{n-a} -> v in any order.
std::set<std::pair<std::vector<int>, int>> all_normal_forms(std::vector<int> e, int n) {
    std::set<std::pair<std::vector<int>, int>> out;
    std::function<void(std::vector<int>&, int)> go = [&](std::vector<int>& cur, int shift) {
        bool reducible = false;
        for (int a = 1; a < n; ++a) {
            const int b = n - a;
            if (a > b) break;
            const bool can = a == b ? cur[a - 1] >= 2 : cur[a - 1] >= 1 && cur[b - 1] >= 1;
            if (!can) continue;
            reducible = true;
            --cur[a - 1];
            --cur[b - 1];
            go(cur, shift + 1);
            ++cur[a - 1];
            ++cur[b - 1];
        }
        if (!reducible) out.insert({cur, shift});
    };
    go(e, 0);
    return out;
}

} // namespace

TEST_CASE("gamma_canonicalize examples") {
    auto c = gamma_canonicalize(std::vector<int>{1, 1}, 3);
    CHECK(c.monomial.empty());
    CHECK(c.v_shift == 1);
    c = gamma_canonicalize(std::vector<int>{2}, 2);
    CHECK(c.monomial.empty());
    CHECK(c.v_shift == 1);
    c = gamma_canonicalize(std::vector<int>{2, 0, 1}, 4);
    CHECK(exps_of(c.monomial) == std::vector<int>{1, 0, 0});
    CHECK(c.v_shift == 1);
    CHECK(gamma_canonicalize(std::vector<int>{}, 1).monomial.empty());
}

TEST_CASE("canonicalization is confluent on all raw monomials of degree <= 4") {
    for (int n = 2; n <= 6; ++n) {
        std::vector<int> e(static_cast<std::size_t>(n - 1), 0);
        std::function<void(int, int)> fill = [&](int idx, int left) {
            if (idx == n - 1) {
                const auto forms = all_normal_forms(e, n);
                REQUIRE(forms.size() == 1);
                const auto c = gamma_canonicalize(e, n);
                CHECK(exps_of(c.monomial) == forms.begin()->first);
                CHECK(c.v_shift == forms.begin()->second);
                return;
            }
            for (int k = 0; k <= left; ++k) {
                e[idx] = k;
                fill(idx + 1, left - k);
            }
            e[idx] = 0;
        };
        fill(0, 4);
    }
}

TEST_CASE("scalar_mul examples") {
    CHECK(scalar_mul(ScalarPoly::gamma(3, 1), ScalarPoly::gamma(3, 2)) == ScalarPoly::v_power(3, 1));
    const ScalarPoly one_minus_v = ScalarPoly(3, 1) - ScalarPoly::v_power(3, 1);
    const ScalarPoly a = one_minus_v * ScalarPoly::gamma(3, 1);
    const ScalarPoly b = ScalarPoly::gamma(3, 2) * ScalarPoly::v_power(3, -1);
    CHECK(scalar_mul(a, b) == one_minus_v);
    std::mt19937_64 rng(3);
    for (int k = 0; k < 20; ++k) {
        const ScalarPoly x = testing::random_scalar(rng, 4);
        CHECK(x * ScalarPoly(4, 1) == x);
    }
}

TEST_CASE("h_flat, g_flat, v_times_g") {
    CHECK(h_flat(3, 2).is_zero());
    CHECK(h_flat(4, 2) == ScalarPoly(2, 1) - ScalarPoly::v_power(2, 1));
    CHECK(h_flat(0, 1) == ScalarPoly(1, 1) - ScalarPoly::v_power(1, 1));
    CHECK(g_flat(2, 1) == ScalarPoly::v_power(1, 1, -1));
    CHECK(g_flat(1, 3) == ScalarPoly::gamma(3, 1));
    CHECK(g_flat(5, 3) == ScalarPoly::gamma(3, 2));
    CHECK(g_flat(-1, 3) == ScalarPoly::gamma(3, 2));
    CHECK(v_times_g(2, 2) == ScalarPoly::v_power(2, 1, -1));
    CHECK(v_times_g(1, 2) == ScalarPoly::gamma(2, 1));
    CHECK(v_times_g(0, 1) == ScalarPoly::v_power(1, 1, -1));
    for (int n = 1; n <= 5; ++n)
        for (int a = -6; a <= 6; ++a) {
            CHECK(v_times_g(a, n) == g_flat(a, n));
            for (const auto& t : h_flat(a, n).terms()) CHECK(t.gamma.empty());
            if (a % n != 0) CHECK(g_flat(a, n) * g_flat(n - a, n) == ScalarPoly::v_power(n, 1));
        }
}

TEST_CASE("rendering uses t at n = 1") {
    CHECK((ScalarPoly(1, 1) - ScalarPoly::v_power(1, 1)).to_string() == "1 - t");
    CHECK((ScalarPoly(2, 1) - ScalarPoly::v_power(2, 1)).to_string() == "1 - v");
    CHECK(ScalarPoly::gamma(3, 1).to_string() == "g1");
    CHECK(ScalarPoly(2).to_string() == "0");
}

TEST_CASE("ring axioms on random samples") {
    std::mt19937_64 rng(11);
    for (int n = 1; n <= 4; ++n)
        for (int k = 0; k < 30; ++k) {
            const auto a = testing::random_scalar(rng, n);
            const auto b = testing::random_scalar(rng, n);
            const auto c = testing::random_scalar(rng, n);
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a * b == b * a);
            CHECK(a + b == b + a);
            CHECK((a - a).is_zero());
        }
}

TEST_CASE("scalar_evaluate") {
    const std::map<int, std::complex<double>> none;
    CHECK(std::abs(scalar_evaluate(ScalarPoly(1, 1) - ScalarPoly::v_power(1, 1), 0.2, none) - 0.8) < 1e-12);
    CHECK(std::abs(scalar_evaluate(ScalarPoly(1), 0.3, none)) == 0.0);
    // g1 g2 = v with numerically consistent values
    const std::complex<double> g1(0.3, 0.4);
    const std::complex<double> v = 1.0 / 7.0;
    const std::map<int, std::complex<double>> vals{{1, g1}, {2, v / g1}};
    const ScalarPoly raw = ScalarPoly::gamma(3, 1);
    CHECK(std::abs(scalar_evaluate(raw * ScalarPoly::gamma(3, 2), v, vals) - v) < 1e-9);
    std::mt19937_64 rng(5);
    for (int k = 0; k < 20; ++k) {
        const auto a = testing::random_scalar(rng, 3);
        const auto b = testing::random_scalar(rng, 3);
        const auto lhs = scalar_evaluate(a * b, v, vals);
        const auto rhs = scalar_evaluate(a, v, vals) * scalar_evaluate(b, v, vals);
        CHECK(std::abs(lhs - rhs) <= 1e-9 * std::max(1.0, std::abs(lhs)));
    }
}
