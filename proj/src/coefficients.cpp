#include "metatok/coefficients.hpp"

#include "metatok/errors.hpp"

#include <algorithm>
#include <functional>

namespace metatok {

ScalarPoly gt_coefficient(const GTPattern& p, int n) {
    const int r = p.rank();
    const GammaArray g = gamma_of(p);
    const Decoration d = decorations(p);
    ScalarPoly c(n, 1);
    for (int i = 1; i <= r; ++i) {
        for (int j = i; j <= r; ++j) {
            switch (d.at(i, j)) {
            case Decor::Circled: break;
            case Decor::Undecorated: c *= h_flat(g.at(i, j), n); break;
            case Decor::Boxed: c *= g_flat(g.at(i, j), n); break;
            case Decor::CircledBoxed: return ScalarPoly(n);
            }
            if (c.is_zero()) return c;
        }
    }
    return c;
}

RowClass classify_row(const AdmissibleRow& row, std::optional<int> k) {
    const int r = static_cast<int>(row.gamma.size());
    if (row.lam.size() != static_cast<std::size_t>(r + 1)) throw InvalidArgument("row and weight lengths differ");
    RowClass out;
    out.admissible = true;
    for (int j = 1; j <= r; ++j)
        if (row.at(j) < row.lower(j) || row.at(j) > row.upper(j)) out.admissible = false;
    out.k_admissible = out.admissible;
    if (k)
        for (int j = *k + 2; j <= r; ++j)
            if (row.at(j) != 0) out.k_admissible = false;
    out.strict = true;
    for (int j = 2; j <= r; ++j)
        if (row.at(j - 1) == row.at(j) && row.at(j) == row.upper(j)) out.strict = false;
    return out;
}

Exponents row_weight(const AdmissibleRow& row) {
    if (!classify_row(row).admissible) throw InvalidArgument("row is not admissible");
    const int r = static_cast<int>(row.gamma.size());
    Exponents e(static_cast<std::size_t>(r + 1));
    // entry t (0-based) pairs lam_{r+1-t} with Gamma_{1,r-t} - Gamma_{1,r+1-t}
    for (int t = 0; t <= r; ++t) {
        const int j = r + 1 - t;
        e[t] = row.lam[j - 1] + (j >= 2 ? row.at(j - 1) : 0) - row.at(j);
    }
    return e;
}

ScalarPoly row_coefficient(const AdmissibleRow& row, int n) {
    const int r = static_cast<int>(row.gamma.size());
    ScalarPoly c(n, 1);
    for (int j = 1; j <= r; ++j) {
        const int g = row.at(j);
        const int lo = row.lower(j);
        const int hi = row.upper(j);
        if (g == lo && lo < hi) continue;
        if (lo < g && g < hi)
            c *= h_flat(g, n);
        else if (lo < g && g == hi)
            c *= g_flat(g, n);
        else
            return ScalarPoly(n);
        if (c.is_zero()) return c;
    }
    return c;
}

std::vector<AdmissibleRow> admissible_rows(const Weight& lam) {
    const int r = static_cast<int>(lam.size()) - 1;
    std::vector<AdmissibleRow> out;
    if (r < 1) return out;
    AdmissibleRow row{std::vector<int>(static_cast<std::size_t>(r), 0), lam};
    std::function<void(int)> fill = [&](int j) {
        if (j == 0) {
            out.push_back(row);
            return;
        }
        for (int g = row.lower(j); g <= row.upper(j); ++g) {
            row.gamma[j - 1] = g;
            fill(j - 1);
        }
    };
    fill(r);
    std::sort(out.begin(), out.end(), [](const AdmissibleRow& a, const AdmissibleRow& b) { return a.gamma < b.gamma; });
    return out;
}

AdmissibleRow row_of_component(const Weight& lam, const Weight& mu) {
    const int r = static_cast<int>(lam.size()) - 1;
    Weight top(lam);
    for (int j = 0; j <= r; ++j) top[j] += r - j;
    return AdmissibleRow{gamma_of(lowest_vertex(top, mu)).entries().front(), lam};
}

ScalarPoly delta(int a, int b, int n) {
    if (a < b) return h_flat(a, n);
    if (a == b) return h_flat(a, n) - ScalarPoly(n, 1);
    return ScalarPoly(n);
}

LaurentPoly big_F(const Weight& mu, int a, int n) {
    if (mu.size() < 2) throw InvalidArgument("mu needs at least two entries");
    if (a < 1) throw InvalidArgument("a must be positive");
    const int r = static_cast<int>(mu.size());
    LaurentPoly out(r - 1, n);
    for (const auto& row : admissible_rows(mu)) {
        if (row.gamma.back() == 0) continue;
        ScalarPoly c = delta(a, row.gamma.front(), n);
        if (c.is_zero()) continue;
        c *= row_coefficient(row, n);
        if (c.is_zero()) continue;
        Exponents e = row_weight(row);
        e[r - 1] += a;
        out.add_term(e, c);
    }
    return out;
}

namespace {

void check_little_f_args(int a, int r, int n) {
    if (a < 1 || a % n != 0) throw InvalidArgument("little_f needs a positive multiple of n");
    if (r < 2) throw InvalidArgument("little_f needs r >= 2");
}

} // namespace

LaurentPoly little_f(int a, int gamma13, int lam2, int lam3, int n, int r) {
    check_little_f_args(a, r, n);
    LaurentPoly out(r - 1, n);
    const int upper = gamma13 + lam2 - lam3 + 1;
    for (int g12 = 1; g12 <= upper; ++g12) {
        ScalarPoly c = delta(a, g12, n);
        if (c.is_zero()) continue;
        c *= g12 < upper ? h_flat(g12, n) : g_flat(g12, n);
        Exponents e(static_cast<std::size_t>(r), 0);
        e[r - 2] = lam3 + g12 - gamma13;
        e[r - 1] = lam2 + a - g12;
        out.add_term(e, c);
    }
    return out;
}

LaurentPoly little_f_invariant_part(int a, int gamma13, int lam2, int lam3, int n, int r) {
    Exponents shift(static_cast<std::size_t>(r), 0);
    const int s = lam3 + a - gamma13;
    shift[r - 2] = -s;
    shift[r - 1] = n - s;
    return little_f(a, gamma13, lam2, lam3, n, r).shifted(shift);
}

} // namespace metatok
