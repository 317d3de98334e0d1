#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "metatok/errors.hpp"
#include "metatok/laurent.hpp"
#include "test_support.hpp"

using namespace metatok;

namespace {

LaurentPoly mono(int r, int n, std::initializer_list<int> e, long long c = 1) {
    return LaurentPoly::monomial(r, exponents(e), ScalarPoly(n, c));
}

ScalarPoly v(int n, int k = 1, long long c = 1) { return ScalarPoly::v_power(n, k, c); }

} // namespace

TEST_CASE("lp_mul examples") {
    CHECK(lp_mul(mono(1, 1, {1, 0}), mono(1, 1, {0, 1})) == mono(1, 1, {1, 1}));
    LaurentPoly a = mono(1, 2, {0, 0});
    a.add_term(exponents({1, -1}), v(2, 1, -1));
    LaurentPoly expected = mono(1, 2, {0, 1}, -1);
    expected.add_term(exponents({1, 0}), v(2));
    CHECK(lp_mul(a, mono(1, 2, {0, 1}, -1)) == expected);
}

TEST_CASE("deformed denominators") {
    LaurentPoly r1 = mono(1, 1, {0, 0});
    r1.add_term(exponents({1, -1}), v(1, 1, -1));
    CHECK(deformed_denominator(1, 1, true) == r1);
    LaurentPoly r1n2 = mono(1, 2, {0, 0}) - mono(1, 2, {2, -2});
    CHECK(deformed_denominator(1, 2, false) == r1n2);
    // (1 - t x1/x2)(1 - t x2/x3)(1 - t x1/x3): x1/x3 appears twice, 7 distinct monomials remain
    const LaurentPoly d = deformed_denominator(2, 1, true);
    CHECK(d.size() == 7);
    CHECK(d.coefficient(exponents({1, 0, -1})) == v(1, 1, -1) + v(1, 2));
    CHECK(lp_mul(d, mono(2, 1, {0, 0, 0})) == d);
}

TEST_CASE("permute_variables") {
    CHECK(permute_variables(Permutation::simple(1, 2), mono(1, 1, {1, 0})) == mono(1, 1, {0, 1}));
    CHECK(permute_variables(longest_element(3), mono(2, 1, {3, 1, 0})) == mono(2, 1, {0, 1, 3}));
    const LaurentPoly sym = mono(1, 1, {1, 0}) + mono(1, 1, {0, 1});
    CHECK(permute_variables(Permutation::simple(1, 2), sym) == sym);
    std::mt19937_64 rng(2);
    const auto perms = all_permutations(4);
    for (int k = 0; k < 30; ++k) {
        const auto& u = perms[rng() % perms.size()];
        const auto& w = perms[rng() % perms.size()];
        const auto f = testing::random_poly(rng, 3, 2);
        CHECK(permute_variables(u * w, f) == permute_variables(u, permute_variables(w, f)));
    }
}

TEST_CASE("exact_divide_binomial") {
    const LaurentPoly p = mono(1, 1, {1, 0}) - mono(1, 1, {0, 1});
    CHECK(exact_divide_binomial(p, {1, 2, 0}) == mono(1, 1, {0, 1}, -1));
    const LaurentPoly p2 = mono(1, 2, {2, 0}) - mono(1, 2, {0, 2});
    CHECK(exact_divide_binomial(p2, {1, 2, 0}) == mono(1, 2, {0, 2}, -1));
    CHECK_THROWS_AS(exact_divide_binomial(mono(1, 1, {1, 0}), {1, 2, 0}), NotDivisible);
    std::mt19937_64 rng(9);
    for (int n = 1; n <= 3; ++n)
        for (int k = 0; k < 25; ++k) {
            const int r = 1 + static_cast<int>(rng() % 3);
            const int i = 1 + static_cast<int>(rng() % r);
            const int j = i + 1 + static_cast<int>(rng() % (r + 1 - i));
            const BinomialFactor d{i, j, static_cast<int>(rng() % 2)};
            const auto q = testing::random_poly(rng, r, n);
            CHECK(exact_divide_binomial(lp_mul(q, expand(d, r, n)), d) == q);
        }
}

TEST_CASE("rational elements") {
    const LaurentPoly x1 = mono(1, 1, {1, 0});
    const RationalElement a(x1, {{1, 2, 1}});
    LaurentPoly top = x1;
    top.add_term(exponents({2, -1}), v(1, 1, -1));
    const RationalElement b(top, {{1, 2, 1}, {1, 2, 1}});
    CHECK(rat_eq(a, b));
    CHECK_FALSE(rat_eq(RationalElement(x1), RationalElement(mono(1, 1, {0, 1}))));
    const LaurentPoly p = mono(1, 1, {1, 0}) - mono(1, 1, {0, 1});
    CHECK(rat_to_poly(RationalElement(p, {{1, 2, 0}})) == mono(1, 1, {0, 1}, -1));
    CHECK(rat_to_poly(RationalElement(x1)) == x1);
    CHECK_THROWS_AS(rat_to_poly(a), NotDivisible);
    CHECK(RationalElement(p, {{1, 2, 0}}).reduced().denominator().empty());
}

TEST_CASE("negative-root factors are normalized") {
    // 1/(1 - x2/x1) = -x1/x2 / (1 - x1/x2)
    const RationalElement one(mono(1, 1, {0, 0}));
    const RationalElement neg = one.divided_by(2, 1, 0);
    CHECK(rat_eq(neg, RationalElement(mono(1, 1, {1, -1}, -1), {{1, 2, 0}})));
}

TEST_CASE("ring axioms and rat_eq equivalence on random samples") {
    std::mt19937_64 rng(4);
    for (int n = 1; n <= 3; ++n)
        for (int k = 0; k < 15; ++k) {
            const auto a = testing::random_poly(rng, 2, n);
            const auto b = testing::random_poly(rng, 2, n);
            const auto c = testing::random_poly(rng, 2, n);
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * b == b * a);
            CHECK(a * (b + c) == a * b + a * c);
            // a/d1 = (a e)/(d1 e) = (a e f)/(d1 e f)
            const BinomialFactor d1{1, 2, 1}, e{2, 3, 0}, f{1, 3, 1};
            const RationalElement x(a, {d1});
            const RationalElement y(lp_mul(a, expand(e, 2, n)), {d1, e});
            const RationalElement z(lp_mul(lp_mul(a, expand(e, 2, n)), expand(f, 2, n)), {d1, e, f});
            CHECK(rat_eq(x, x));
            CHECK(rat_eq(x, y) == rat_eq(y, x));
            CHECK(rat_eq(x, y));
            CHECK(rat_eq(y, z));
            CHECK(rat_eq(x, z));
        }
}

TEST_CASE("mixing degrees is rejected") {
    CHECK_THROWS_AS(mono(1, 1, {1, 0}) + mono(1, 2, {1, 0}), InvalidArgument);
    CHECK_THROWS_AS(mono(1, 1, {1, 0}) + mono(2, 1, {1, 0, 0}), InvalidArgument);
}

TEST_CASE("rendering and json") {
    LaurentPoly f = mono(1, 1, {0, 1});
    f.add_term(exponents({1, 0}), ScalarPoly(1, 1) - v(1));
    f.add_term(exponents({2, -1}), v(1, 1, -1));
    CHECK(f.to_string() == "x2 + (1 - t)*x1 - t*x1^2*x2^-1");
    CHECK(LaurentPoly(1, 1).to_string() == "0");
    CHECK(f.to_json().is_array());
    CHECK(f.to_json().size() == 3);
}
