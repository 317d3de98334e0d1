#include "metatok/operators.hpp"

#include "metatok/errors.hpp"

#include <algorithm>

namespace metatok {

namespace {

Exponents simple_root(int i, int r, int scale) {
    Exponents e(static_cast<std::size_t>(r + 1), 0);
    e[i - 1] = scale;
    e[i] = -scale;
    return e;
}

// f (1 - v X^n) - X^n N where sigma_i(f) = N / (1 - v X^n).
LaurentPoly demazure_numerator(int i, const LaurentPoly& f) {
    const int r = f.rank();
    const int n = f.degree();
    const Exponents xn = simple_root(i, r, n);
    LaurentPoly out = f - f.shifted(xn).scaled(ScalarPoly::v_power(n, 1));
    out -= sigma_numerator(i, f).shifted(xn);
    return out;
}

// Elements sorted so that s_i u precedes u for the smallest left descent i.
std::map<Permutation, LaurentPoly> build_table(const LaurentPoly& f, std::vector<Permutation> elements) {
    std::stable_sort(elements.begin(), elements.end(),
                     [](const Permutation& a, const Permutation& b) { return a.length() < b.length(); });
    std::map<Permutation, LaurentPoly> table;
    for (const auto& u : elements) {
        if (u.is_identity()) {
            table.emplace(u, f);
            continue;
        }
        int i = 1;
        while (!u.has_left_descent(i)) ++i;
        auto below = table.find(Permutation::simple(i, u.size()) * u);
        if (below == table.end()) throw InvalidArgument("element set is not closed under descent");
        table.emplace(u, demazure_lusztig(i, below->second));
    }
    return table;
}

} // namespace

RationalElement demazure(int i, const LaurentPoly& f) {
    if (i < 1 || i > f.rank()) throw InvalidArgument("simple reflection index out of range");
    return RationalElement(demazure_numerator(i, f), {BinomialFactor{i, i + 1, 0}, BinomialFactor{i, i + 1, 1}})
        .reduced();
}

RationalElement demazure(int i, const RationalElement& f) {
    if (i < 1 || i > f.rank()) throw InvalidArgument("simple reflection index out of range");
    if (f.denominator().empty()) return demazure(i, f.numerator());
    const RationalElement moved = LaurentPoly::monomial(f.rank(), f.degree(), simple_root(i, f.rank(), f.degree())) *
                                  sigma_rational(i, f);
    return (f - moved).divided_by(i, i + 1, 0).reduced();
}

LaurentPoly demazure_lusztig(int i, const LaurentPoly& f) {
    if (i < 1 || i > f.rank()) throw InvalidArgument("simple reflection index out of range");
    try {
        return exact_divide_binomial(demazure_numerator(i, f), BinomialFactor{i, i + 1, 0}) - f;
    } catch (const NotDivisible&) {
        throw InternalNonPolynomial("Demazure-Lusztig operator produced a non-polynomial value");
    }
}

RationalElement apply_demazure_word(const Word& w, const RationalElement& f) {
    RationalElement out = f;
    const auto& letters = w.letters();
    for (auto it = letters.rbegin(); it != letters.rend(); ++it) out = demazure(*it, out);
    return out;
}

LaurentPoly apply_dl_word(const Word& w, const LaurentPoly& f) {
    LaurentPoly out = f;
    const auto& letters = w.letters();
    for (auto it = letters.rbegin(); it != letters.rend(); ++it) out = demazure_lusztig(*it, out);
    return out;
}

std::map<Permutation, LaurentPoly> dl_table(const LaurentPoly& f, const std::vector<Permutation>& elements) {
    return build_table(f, elements);
}

LaurentPoly bruhat_dl_sum(const Permutation& w, const LaurentPoly& f) {
    if (w.size() != f.rank() + 1) throw InvalidArgument("permutation size mismatch");
    LaurentPoly sum(f.rank(), f.degree());
    for (const auto& [u, value] : build_table(f, lower_interval(w))) sum += value;
    return sum;
}

LaurentPoly chinta_offen_j(const Permutation& w, int r, int n) {
    if (w.size() != r + 1) throw InvalidArgument("permutation size mismatch");
    Exponents e(static_cast<std::size_t>(r + 1), 0);
    for (auto [i, j] : inversion_set_phi(w.inverse())) {
        e[i - 1] += n;
        e[j - 1] -= n;
    }
    return LaurentPoly::monomial(r, e, ScalarPoly(n, w.sign()));
}

RationalElement chinta_offen_sum(const LaurentPoly& f) {
    const int r = f.rank();
    const int n = f.degree();
    // w(f) for all w, each from s_i w' with i the smallest left descent.
    auto elements = all_permutations(r + 1);
    std::stable_sort(elements.begin(), elements.end(),
                     [](const Permutation& a, const Permutation& b) { return a.length() < b.length(); });
    std::map<Permutation, RationalElement> images;
    RationalElement sum{LaurentPoly(r, n)};
    for (const auto& w : elements) {
        if (w.is_identity()) {
            images.emplace(w, RationalElement(f));
        } else {
            int i = 1;
            while (!w.has_left_descent(i)) ++i;
            const auto& below = images.at(Permutation::simple(i, w.size()) * w);
            images.emplace(w, sigma_rational(i, below));
        }
        sum = sum + chinta_offen_j(w, r, n) * images.at(w);
    }
    return sum;
}

RationalElement longword_demazure_formula(const LaurentPoly& f) {
    const int r = f.rank();
    RationalElement out = chinta_offen_sum(f);
    for (int i = 1; i <= r + 1; ++i)
        for (int j = i + 1; j <= r + 1; ++j) out = out.divided_by(i, j, 0);
    return out;
}

bool is_dominant(const std::vector<int>& lam) {
    return std::is_sorted(lam.rbegin(), lam.rend());
}

LaurentPoly whittaker_value(const std::vector<int>& lam, int n) {
    if (lam.size() < 2) throw InvalidArgument("weight must have at least two entries");
    if (!is_dominant(lam)) throw InvalidArgument("weight is not dominant");
    const int r = static_cast<int>(lam.size()) - 1;
    Exponents e(lam.rbegin(), lam.rend());
    return bruhat_dl_sum(longest_element(r + 1), LaurentPoly::monomial(r, n, e));
}

} // namespace metatok
