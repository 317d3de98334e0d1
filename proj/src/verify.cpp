#include "metatok/verify.hpp"

#include "metatok/action.hpp"
#include "metatok/coefficients.hpp"
#include "metatok/errors.hpp"
#include "metatok/gauss.hpp"
#include "metatok/operators.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <sstream>

namespace metatok {

namespace {

CheckReport make_report(std::string statement, nlohmann::json params) {
    CheckReport rep;
    rep.statement = std::move(statement);
    rep.params = std::move(params);
    return rep;
}

void settle(CheckReport& rep, const LaurentPoly& difference) {
    rep.pass = difference.is_zero();
    if (!rep.pass) rep.difference = difference;
}

int rank_of(const Weight& lam) {
    if (lam.size() < 2) throw InvalidArgument("weight needs at least two entries");
    return static_cast<int>(lam.size()) - 1;
}

void require_dominant_effective(const Weight& lam) {
    if (!is_dominant_effective(lam)) throw InvalidArgument("weight must be dominant and effective");
}

LaurentPoly monomial_of(const Weight& e, int n) {
    return LaurentPoly::monomial(static_cast<int>(e.size()) - 1, n, exponents(e));
}

// Sum of G(v) x^{wt(v) - w0 rho} for the given patterns.
LaurentPoly weighted_pattern_sum(const std::vector<GTPattern>& patterns, int r, int n) {
    LaurentPoly out(r, n);
    for (const auto& p : patterns) {
        ScalarPoly c = gt_coefficient(p, n);
        if (c.is_zero()) continue;
        Weight wt = weight_of(p);
        for (int t = 0; t <= r; ++t) wt[t] -= t;
        out.add_term(exponents(wt), c);
    }
    return out;
}

Permutation section_element(int r, int w_length) {
    return evaluate_word(beginning_section(r, w_length).word, r);
}

} // namespace

nlohmann::json CheckReport::to_json() const {
    nlohmann::json j;
    j["statement"] = statement;
    j["params"] = params;
    j["pass"] = pass;
    if (difference) j["difference"] = difference->to_json();
    if (!detail.empty()) j["detail"] = detail;
    return j;
}

std::string CheckReport::to_text() const {
    std::ostringstream out;
    out << (pass ? "PASS " : "FAIL ") << statement;
    for (const auto& [key, value] : params.items()) {
        out << ' ' << key << '=';
        if (value.is_array()) {
            for (std::size_t i = 0; i < value.size(); ++i) out << (i ? "," : "") << value[i].dump();
        } else if (value.is_string()) {
            out << value.get<std::string>();
        } else {
            out << value.dump();
        }
    }
    if (!detail.empty()) out << " (" << detail << ")";
    if (difference) out << " difference: " << difference->to_string();
    return out.str();
}

Weight rho(int r) {
    Weight w(static_cast<std::size_t>(r + 1));
    for (int i = 0; i <= r; ++i) w[i] = r - i;
    return w;
}

Weight plus_rho(const Weight& lam) {
    Weight out = lam;
    const Weight p = rho(static_cast<int>(lam.size()) - 1);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += p[i];
    return out;
}

bool is_dominant_effective(const Weight& lam) { return is_valid_top_row(lam); }

LaurentPoly crystal_side(const Weight& lam, int w_length, int n) {
    const int r = rank_of(lam);
    require_dominant_effective(lam);
    return weighted_pattern_sum(demazure_members(plus_rho(lam), w_length), r, n);
}

LaurentPoly operator_side(const Weight& lam, int w_length, int n) {
    const int r = rank_of(lam);
    require_dominant_effective(lam);
    return bruhat_dl_sum(section_element(r, w_length), monomial_of(reversed(lam), n));
}

LaurentPoly embed_with_last(const LaurentPoly& f, int last) {
    LaurentPoly out(f.rank() + 1, f.degree());
    for (const auto& [e, c] : f.terms()) {
        Exponents grown = e;
        grown.push_back(last);
        out.add_term(grown, c);
    }
    return out;
}

namespace {

nlohmann::json main_params(const Weight& lam, int w_length, int n) {
    return {{"r", static_cast<int>(lam.size()) - 1}, {"n", n}, {"lambda", lam}, {"w_length", w_length}};
}

void corrupt(LaurentPoly& crystal) {
    Exponents e(static_cast<std::size_t>(crystal.rank() + 1), 0);
    e[0] = 99;
    crystal.add_term(e, ScalarPoly(crystal.degree(), 1));
}

// For w_length <= C(r,2) the element lies in S_r and x_{r+1}^{lam_1} factors out.
void compare_reduced(CheckReport& rep, const Weight& lam, int w_length, int n, const LaurentPoly& op) {
    const int r = static_cast<int>(lam.size()) - 1;
    if (r < 2 || w_length > binomial2(r)) return;
    const Weight lower(lam.begin() + 1, lam.end());
    const LaurentPoly reduced = embed_with_last(operator_side(lower, w_length, n), lam.front());
    if (!(reduced == op)) {
        rep.pass = false;
        rep.detail = "rank-reduced operator side disagrees";
        rep.difference = reduced - op;
    }
}

} // namespace

CheckReport check_main(const Weight& lam, int w_length, int n, FaultInjection fault) {
    CheckReport rep = make_report("main", main_params(lam, w_length, n));
    const LaurentPoly op = operator_side(lam, w_length, n);
    LaurentPoly cr = crystal_side(lam, w_length, n);
    if (fault.corrupt_crystal_side) corrupt(cr);
    settle(rep, op - cr);
    if (rep.pass) compare_reduced(rep, lam, w_length, n, op);
    return rep;
}

std::vector<CheckReport> check_main_all_lengths(const Weight& lam, int n, FaultInjection fault) {
    const int r = rank_of(lam);
    require_dominant_effective(lam);
    const auto table = dl_table(monomial_of(reversed(lam), n), all_permutations(r + 1));

    struct Vertex {
        GammaArray gamma;
        ScalarPoly coeff;
        Exponents wt;
    };
    std::vector<Vertex> vertices;
    for (const auto& p : enumerate_patterns(plus_rho(lam))) {
        ScalarPoly c = gt_coefficient(p, n);
        if (c.is_zero()) continue;
        Weight wt = weight_of(p);
        for (int t = 0; t <= r; ++t) wt[t] -= t;
        vertices.push_back({gamma_of(p), std::move(c), exponents(wt)});
    }

    std::vector<CheckReport> out;
    for (int l = 0; l <= binomial2(r + 1); ++l) {
        CheckReport rep = make_report("main", main_params(lam, l, n));
        LaurentPoly op(r, n);
        for (const auto& u : lower_interval(section_element(r, l))) op += table.at(u);
        LaurentPoly cr(r, n);
        for (const auto& v : vertices)
            if (is_demazure_member(v.gamma, l)) cr.add_term(v.wt, v.coeff);
        if (fault.corrupt_crystal_side) corrupt(cr);
        settle(rep, op - cr);
        if (rep.pass) compare_reduced(rep, lam, l, n, op);
        out.push_back(std::move(rep));
    }
    return out;
}

CheckReport check_tokuyama(const Weight& lam, int n) {
    const int r = rank_of(lam);
    CheckReport rep = check_main(lam, binomial2(r + 1), n);
    rep.statement = "tokuyama";
    rep.params.erase("w_length");
    return rep;
}

LaurentPoly schur(const Weight& lam) {
    const int r = rank_of(lam);
    LaurentPoly out(r, 1);
    for (const auto& p : enumerate_patterns(lam)) out.add_term(exponents(weight_of(p)), ScalarPoly(1, 1));
    return out;
}

LaurentPoly schur_weyl_ratio(const Weight& lam) {
    const int r = rank_of(lam);
    const Weight top = plus_rho(lam);
    LaurentPoly alt(r, 1);
    for (const auto& w : all_permutations(r + 1)) {
        Exponents e(static_cast<std::size_t>(r + 1), 0);
        for (int i = 1; i <= r + 1; ++i) e[w(i) - 1] = top[i - 1];
        alt.add_term(e, ScalarPoly(1, w.sign()));
    }
    // x_i - x_j = -x_j (1 - x_i / x_j)
    Exponents shift(static_cast<std::size_t>(r + 1), 0);
    int sign = 1;
    for (int i = 1; i <= r + 1; ++i) {
        for (int j = i + 1; j <= r + 1; ++j) {
            alt = exact_divide_binomial(alt, BinomialFactor{i, j, 0});
            shift[j - 1] -= 1;
            sign = -sign;
        }
    }
    return alt.shifted(shift).scaled(ScalarPoly(1, sign));
}

CheckReport check_classic_tokuyama(const Weight& lam) {
    const int r = rank_of(lam);
    require_dominant_effective(lam);
    CheckReport rep = make_report("classic", {{"r", r}, {"lambda", lam}});
    const LaurentPoly s = schur(lam);
    if (!(s == schur_weyl_ratio(lam))) {
        rep.pass = false;
        rep.detail = "pattern sum and Weyl ratio disagree";
        rep.difference = s - schur_weyl_ratio(lam);
        return rep;
    }
    LaurentPoly lhs = s;
    for (int i = 1; i <= r + 1; ++i) {
        for (int j = i + 1; j <= r + 1; ++j) {
            Exponents ej(static_cast<std::size_t>(r + 1), 0);
            Exponents ei = ej;
            ej[j - 1] = 1;
            ei[i - 1] = 1;
            LaurentPoly factor = LaurentPoly::monomial(r, 1, ej);
            factor.add_term(ei, ScalarPoly::v_power(1, 1, -1));
            lhs = lhs * factor;
        }
    }
    LaurentPoly rhs(r, 1);
    for (const auto& p : enumerate_patterns(plus_rho(lam))) {
        ScalarPoly c = gt_coefficient(p, 1);
        if (!c.is_zero()) rhs.add_term(exponents(weight_of(p)), c);
    }
    settle(rep, lhs - rhs);
    return rep;
}

namespace {

// T_r T_{r-1} ... T_{r-m}
Word descending_word(int r, int m) {
    std::vector<int> letters;
    for (int i = r; i >= r - m; --i) letters.push_back(i);
    return Word(std::move(letters));
}

Exponents all_ones(int r, int k) { return Exponents(static_cast<std::size_t>(r + 1), k); }

} // namespace

LaurentPoly mn_operator_side(MNKind kind, int k, const Weight& lam, int n) {
    const int r = rank_of(lam);
    if (k < 0 || k >= r) throw InvalidArgument("k out of range");
    const LaurentPoly f = monomial_of(reversed(lam), n);
    if (kind == MNKind::N) return apply_dl_word(descending_word(r, k), f);
    LaurentPoly out = f;
    for (int m = 0; m <= k; ++m) out += apply_dl_word(descending_word(r, m), f);
    return out;
}

LaurentPoly mn_row_side(MNKind kind, int k, const Weight& lam, int n) {
    const int r = rank_of(lam);
    LaurentPoly out(r, n);
    for (const auto& row : admissible_rows(lam)) {
        if (!classify_row(row, k).k_admissible) continue;
        if (kind == MNKind::N && row.at(k + 1) == 0) continue;
        ScalarPoly c = row_coefficient(row, n);
        if (!c.is_zero()) out.add_term(row_weight(row), c);
    }
    return out;
}

RationalElement parabolic_long_demazure(const LaurentPoly& f, int r) {
    return apply_demazure_word(favourite_long_word(r - 1), RationalElement(f));
}

CheckReport check_MN(MNKind kind, int k, const Weight& lam, int n) {
    const int r = rank_of(lam);
    if (!std::is_sorted(lam.rbegin(), lam.rend())) throw InvalidArgument("weight must be dominant");
    CheckReport rep =
        make_report(kind == MNKind::M ? "M" : "N", {{"r", r}, {"k", k}, {"n", n}, {"lambda", lam}});
    // Shift to an effective weight and back; (x_1 ... x_{r+1})^K commutes with every operator.
    const int shift = -lam.back();
    Weight kappa = lam;
    for (int& a : kappa) a += shift;
    const LaurentPoly diff =
        (mn_operator_side(kind, k, kappa, n) - mn_row_side(kind, k, kappa, n)).shifted(all_ones(r, -shift));
    const RationalElement image = parabolic_long_demazure(diff, r);
    rep.pass = image.is_zero();
    if (!rep.pass) {
        rep.difference = diff;
        rep.detail = "difference is not annihilated";
    }
    return rep;
}

CheckReport check_F(const Weight& mu, int a, int n) {
    const int r = static_cast<int>(mu.size());
    CheckReport rep = make_report("F", {{"r", r}, {"n", n}, {"mu", mu}, {"a", a}});
    const LaurentPoly f = big_F(mu, a, n);
    rep.pass = parabolic_long_demazure(f, r).is_zero();
    if (!rep.pass) {
        rep.difference = f;
        rep.detail = "F is not annihilated";
    }
    return rep;
}

CheckReport check_little_f(int a, int gamma13, int lam2, int lam3, int n, int r) {
    CheckReport rep = make_report(
        "little_f", {{"r", r}, {"n", n}, {"a", a}, {"gamma13", gamma13}, {"lam2", lam2}, {"lam3", lam3}});
    const LaurentPoly f = little_f(a, gamma13, lam2, lam3, n, r);
    if (!demazure(r - 1, f).is_zero()) {
        rep.pass = false;
        rep.difference = f;
        rep.detail = "f is not annihilated";
        return rep;
    }
    const RationalElement p(little_f_invariant_part(a, gamma13, lam2, lam3, n, r));
    rep.pass = rat_eq(sigma_rational(r - 1, p), p);
    if (!rep.pass) {
        rep.difference = p.numerator();
        rep.detail = "(1 - v) P is not sigma-invariant";
    }
    return rep;
}

CheckReport check_longword_formulas(int r, int n, int sample_count, unsigned long long seed) {
    CheckReport rep =
        make_report("longword", {{"r", r}, {"n", n}, {"samples", sample_count}, {"seed", seed}});
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick(-2, 3);
    const Word w0 = favourite_long_word(r);
    const Permutation top = longest_element(r + 1);
    const LaurentPoly delta_v = deformed_denominator(r, n, true);
    const LaurentPoly delta = deformed_denominator(r, n, false);
    rep.pass = true;
    for (int s = 0; s < sample_count && rep.pass; ++s) {
        Exponents e(static_cast<std::size_t>(r + 1));
        for (auto& x : e) x = pick(rng);
        const LaurentPoly f = LaurentPoly::monomial(r, n, e);
        const RationalElement d = apply_demazure_word(w0, RationalElement(f));
        std::string which;
        if (!rat_eq(longword_demazure_formula(f), d)) which = "long-word Demazure formula";
        if (which.empty()) {
            try {
                if (!(rat_to_poly(delta_v * d) == bruhat_dl_sum(top, f))) which = "Demazure-Lusztig sum";
            } catch (const NotDivisible&) {
                which = "Demazure-Lusztig sum (not polynomial)";
            }
        }
        if (which.empty() && !rat_eq(chinta_offen_sum(f), delta * d)) which = "j-weighted orbit sum";
        if (!which.empty()) {
            rep.pass = false;
            rep.difference = f;
            rep.detail = which + " fails on the monomial";
        }
    }
    return rep;
}

CheckReport check_branching(const Weight& lam, int n) {
    const int r = rank_of(lam);
    require_dominant_effective(lam);
    CheckReport rep = make_report("branching", {{"r", r}, {"n", n}, {"lambda", lam}});
    const Weight top = plus_rho(lam);
    int top_sum = 0;
    for (int a : top) top_sum += a;
    rep.pass = true;
    for (int l = binomial2(r); l <= binomial2(r + 1) && rep.pass; ++l) {
        const int k = l - binomial2(r) - 1;
        LaurentPoly rhs(r, n);
        for (const auto& comp : mu_components(top)) {
            bool in_demazure = true;
            for (int j = k + 2; j <= r; ++j)
                if (comp.mu[j - 1] != lam[j] + r - j) in_demazure = false;
            if (in_demazure != is_demazure_member(gamma_of(lowest_vertex(top, comp.mu)), l)) {
                rep.pass = false;
                rep.detail = "component membership criteria disagree at w_length " + std::to_string(l);
                break;
            }
            if (!in_demazure) continue;
            const ScalarPoly g_low = gt_coefficient(lowest_vertex(top, comp.mu), n);
            if (g_low.is_zero()) continue;
            int mu_sum = 0;
            for (int a : comp.mu) mu_sum += a;
            LaurentPoly inner = weighted_pattern_sum(enumerate_patterns(comp.mu), r - 1, n);
            rhs += embed_with_last(inner, top_sum - mu_sum - r).scaled(g_low);
        }
        if (!rep.pass) break;
        const LaurentPoly diff = crystal_side(lam, l, n) - rhs;
        if (!diff.is_zero()) {
            rep.pass = false;
            rep.difference = diff;
            rep.detail = "w_length " + std::to_string(l);
        }
    }
    return rep;
}

CheckReport check_gauss(int p, int n) {
    CheckReport rep = make_report("gauss", {{"p", p}, {"n", n}});
    const GaussContext ctx(p, n);
    const double tol = 1e-9;
    const double q = ctx.q();
    std::string failure;
    for (int a = 1; a < n && failure.empty(); ++a)
        if (std::abs(gauss_gflat(a, ctx) * gauss_gflat(n - a, ctx) - 1.0 / q) > tol)
            failure = "g_flat(" + std::to_string(a) + ") g_flat(n-a) != 1/q";
    for (int a = 0; a <= 2 * n && failure.empty(); ++a) {
        const double expected = a % n == 0 ? 1.0 - 1.0 / q : 0.0;
        if (std::abs(gauss_hflat(a, ctx) - expected) > tol) failure = "h_flat case split at a=" + std::to_string(a);
        if (a % n == 0 && std::abs(gauss_gflat(a, ctx) + 1.0 / q) > tol) failure = "g_flat at a multiple of n";
        if (a % n != 0 && std::abs(std::abs(gauss_gflat(a, ctx)) - 1.0 / std::sqrt(q)) > tol)
            failure = "|g_flat| != q^{-1/2}";
    }
    const std::vector<std::complex<double>> xs{{1.3, 0.2}, {0.7, -0.4}, {1.1, 0.5}};
    for (const Weight& lam : {Weight{1, 0}, Weight{1, 1, 0}}) {
        if (!failure.empty()) break;
        const int r = static_cast<int>(lam.size()) - 1;
        const int l = binomial2(r + 1);
        const std::vector<std::complex<double>> x(xs.begin(), xs.begin() + r + 1);
        const auto a = specialize_poly(crystal_side(lam, l, n), ctx, x);
        const auto b = specialize_poly(operator_side(lam, l, n), ctx, x);
        if (std::abs(a - b) > tol * std::max(1.0, std::abs(a))) failure = "specialized sides differ";
    }
    rep.pass = failure.empty();
    rep.detail = failure;
    return rep;
}

std::vector<Weight> dominant_weights(int r, int max_entry, int min_entry) {
    std::vector<Weight> out;
    Weight w(static_cast<std::size_t>(r + 1));
    std::function<void(int, int)> fill = [&](int pos, int cap) {
        if (pos == r + 1) {
            out.push_back(w);
            return;
        }
        for (int a = min_entry; a <= cap; ++a) {
            w[pos] = a;
            fill(pos + 1, a);
        }
    };
    fill(0, max_entry);
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace metatok
