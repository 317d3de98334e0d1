#pragma once

#include <boost/container/small_vector.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <complex>
#include <compare>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace metatok {

struct CanonicalGauss;

using Integer = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                              boost::multiprecision::et_off>;

// Monomial in the symbols g1..g_{n-1}, kept in canonical form:
// at most one of e_a, e_{n-a} is nonzero, and e_{n/2} <= 1 for even n.
class GaussMonomial {
public:
    using Exps = boost::container::small_vector<int, 4>;

    explicit GaussMonomial(int n = 1);

    int degree() const { return n_; }
    const Exps& exps() const { return exps_; }
    int exponent(int a) const { return exps_[a - 1]; }
    bool empty() const;

    friend bool operator==(const GaussMonomial&, const GaussMonomial&) = default;
    friend std::strong_ordering operator<=>(const GaussMonomial& a, const GaussMonomial& b);

private:
    friend CanonicalGauss gamma_canonicalize(std::span<const int> raw, int n);
    int n_;
    Exps exps_;
};

struct CanonicalGauss {
    GaussMonomial monomial;
    int v_shift = 0;
};

// Rewrites g_a*g_{n-a} -> v (and g_{n/2}^2 -> v) until canonical.
CanonicalGauss gamma_canonicalize(std::span<const int> raw_exps, int n);

// Element of Z[v, 1/v][g1..g_{n-1}] / (g_a g_{n-a} - v).
class ScalarPoly {
public:
    struct Term {
        int v_exp = 0;
        GaussMonomial gamma;
        Integer coeff;
    };

    explicit ScalarPoly(int n = 1);
    ScalarPoly(int n, long long c);

    static ScalarPoly v_power(int n, int k, long long c = 1);
    static ScalarPoly gamma(int n, int a);

    int degree() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    const std::vector<Term>& terms() const { return terms_; }

    // Multiplies by v^k.
    ScalarPoly shifted(int k) const;

    ScalarPoly operator-() const;
    ScalarPoly& operator+=(const ScalarPoly& o);
    ScalarPoly& operator-=(const ScalarPoly& o);
    ScalarPoly& operator*=(const ScalarPoly& o);
    friend ScalarPoly operator+(ScalarPoly a, const ScalarPoly& b) { return a += b; }
    friend ScalarPoly operator-(ScalarPoly a, const ScalarPoly& b) { return a -= b; }
    friend ScalarPoly operator*(const ScalarPoly& a, const ScalarPoly& b);
    friend bool operator==(const ScalarPoly& a, const ScalarPoly& b);

    // "1 - v + g1*v^2"; the variable prints as t when n = 1.
    std::string to_string() const;

private:
    void add_term(int v_exp, const GaussMonomial& g, const Integer& c);
    void check_same(const ScalarPoly& o) const;

    int n_;
    std::vector<Term> terms_; // sorted by (v_exp, gamma), no zero coefficients
};

ScalarPoly scalar_mul(const ScalarPoly& a, const ScalarPoly& b);

// 1 - v if n | a, else 0.
ScalarPoly h_flat(int a, int n);
// -v if n | a, else g_{a mod n}.
ScalarPoly g_flat(int a, int n);
// v * g_j; same values as g_flat, used by the action formula.
ScalarPoly v_times_g(int j, int n);

// Non-negative remainder of a mod n.
int residue(int a, int n);

std::complex<double> scalar_evaluate(const ScalarPoly& s, std::complex<double> v_value,
                                     const std::map<int, std::complex<double>>& gamma_values);

} // namespace metatok
