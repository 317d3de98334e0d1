#pragma once

#include "metatok/crystal.hpp"
#include "metatok/laurent.hpp"

#include "json.hpp"

#include <optional>
#include <string>
#include <vector>

namespace metatok {

struct CheckReport {
    std::string statement;
    nlohmann::json params;
    bool pass = false;
    // Set on failure.
    std::optional<LaurentPoly> difference;
    std::string detail;

    nlohmann::json to_json() const;
    // One line: "PASS main r=2 n=2 lambda=1,1,0 w_length=3"
    std::string to_text() const;
};

// (r, r-1, ..., 0)
Weight rho(int r);
Weight plus_rho(const Weight& lam);
bool is_dominant_effective(const Weight& lam);

// x^{-w0 rho} sum over the Demazure crystal of G(v) x^{wt(v)}
LaurentPoly crystal_side(const Weight& lam, int w_length, int n);

// (sum_{u <= w} T_u) x^{w0 lam}, w the beginning section of length w_length
LaurentPoly operator_side(const Weight& lam, int w_length, int n);

// Appends x_{r+2}^{last} to every term.
LaurentPoly embed_with_last(const LaurentPoly& f, int last);

// Adds a spurious term to the crystal side; used to exercise failure reporting.
struct FaultInjection {
    bool corrupt_crystal_side = false;
};

CheckReport check_main(const Weight& lam, int w_length, int n, FaultInjection fault = {});

// check_main for every w_length, sharing one table of T_u x^{w0 lam}.
std::vector<CheckReport> check_main_all_lengths(const Weight& lam, int n, FaultInjection fault = {});

CheckReport check_tokuyama(const Weight& lam, int n);

// Sum over patterns with top row lam of x^{wt}.
LaurentPoly schur(const Weight& lam);
// a_{lam+rho} / a_rho by exact division.
LaurentPoly schur_weyl_ratio(const Weight& lam);

CheckReport check_classic_tokuyama(const Weight& lam);

enum class MNKind { M, N };

// Operator string applied to x^{w0 lam}, before comparison.
LaurentPoly mn_operator_side(MNKind kind, int k, const Weight& lam, int n);
// Admissible-row sum.
LaurentPoly mn_row_side(MNKind kind, int k, const Weight& lam, int n);

// D along favourite_long_word(r-1) applied to f, as a rational element.
RationalElement parabolic_long_demazure(const LaurentPoly& f, int r);

CheckReport check_MN(MNKind kind, int k, const Weight& lam, int n);

CheckReport check_F(const Weight& mu, int a, int n);
CheckReport check_little_f(int a, int gamma13, int lam2, int lam3, int n, int r);

// Long-word D formula, the Bruhat sum of T_u at w0 and the j-weighted orbit sum,
// on random monomials with exponents in [-2, 3].
CheckReport check_longword_formulas(int r, int n, int sample_count, unsigned long long seed);

CheckReport check_branching(const Weight& lam, int n);

// g_flat(a) g_flat(n-a) = 1/q, the h_flat case split, and crystal side against
// operator side after specializing both at sample points.
CheckReport check_gauss(int p, int n);

// All dominant effective weights of length r+1 with entries <= max_entry, lexicographic.
std::vector<Weight> dominant_weights(int r, int max_entry, int min_entry = 0);

} // namespace metatok
