#pragma once

#include "metatok/crystal.hpp"
#include "metatok/laurent.hpp"
#include "metatok/scalars.hpp"

#include <optional>
#include <vector>

namespace metatok {

// prod over entries of 1 / h_flat / g_flat / 0 by decoration.
ScalarPoly gt_coefficient(const GTPattern& p, int n);

// (Gamma_11, ..., Gamma_1r) against lam of length r+1; Gamma_{1,r+1} = 0.
struct AdmissibleRow {
    std::vector<int> gamma;
    Weight lam;

    int at(int j) const { return j > static_cast<int>(gamma.size()) ? 0 : gamma[j - 1]; }
    int lower(int j) const { return at(j + 1); }
    int upper(int j) const { return at(j + 1) + lam[j - 1] - lam[j] + 1; }
};

struct RowClass {
    bool admissible = false;
    bool k_admissible = false;
    bool strict = false;
};

RowClass classify_row(const AdmissibleRow& row, std::optional<int> k = std::nullopt);

// (lam_{r+1} + G_r, lam_r + G_{r-1} - G_r, ..., lam_1 - G_1)
Exponents row_weight(const AdmissibleRow& row);

ScalarPoly row_coefficient(const AdmissibleRow& row, int n);

// All lam-admissible rows, lexicographic.
std::vector<AdmissibleRow> admissible_rows(const Weight& lam);

// The row of lowest_vertex(top, mu) read against lam with top = lam + rho.
AdmissibleRow row_of_component(const Weight& lam, const Weight& mu);

ScalarPoly delta(int a, int b, int n);

// Sum over mu-admissible (G_12, ..., G_1r) with G_1r != 0 of
// delta(a, G_12) G_1(G) y^{wt(G)} x_r^a, in x_1..x_r where r = |mu|.
LaurentPoly big_F(const Weight& mu, int a, int n);

// Sum_{G12=1}^{U} delta_a(G12) h(G12) x_{r-1}^{lam3+G12-G13} x_r^{lam2+a-G12},
// U = G13 + lam2 - lam3 + 1, in x_1..x_r.
LaurentPoly little_f(int a, int gamma13, int lam2, int lam3, int n, int r);

// x_r^n f / (x_{r-1} x_r)^{lam3 + a - G13}, which is (1 - v) P.
LaurentPoly little_f_invariant_part(int a, int gamma13, int lam2, int lam3, int n, int r);

} // namespace metatok
