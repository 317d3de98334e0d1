#pragma once

#include "metatok/scalars.hpp"
#include "metatok/weyl.hpp"

#include "json.hpp"

#include <boost/container/small_vector.hpp>

#include <compare>
#include <map>
#include <string>
#include <vector>

namespace metatok {

// Exponents of x1..x_{r+1}.
using Exponents = boost::container::small_vector<int, 6>;

Exponents exponents(std::initializer_list<int> e);
Exponents exponents(const std::vector<int>& e);

// Sparse Laurent polynomial in x1..x_{r+1} over ScalarPoly.
class LaurentPoly {
public:
    using TermMap = std::map<Exponents, ScalarPoly>;

    LaurentPoly(int r, int n);
    static LaurentPoly monomial(int r, int n, const Exponents& e);
    static LaurentPoly monomial(int r, const Exponents& e, const ScalarPoly& c);
    static LaurentPoly constant(int r, const ScalarPoly& c);

    int rank() const { return r_; }
    int degree() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }
    // Zero scalar when absent.
    ScalarPoly coefficient(const Exponents& e) const;

    void add_term(const Exponents& e, const ScalarPoly& c);

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    LaurentPoly& operator*=(const LaurentPoly& o);
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b);

    LaurentPoly scaled(const ScalarPoly& c) const;
    // Multiplies by x^e.
    LaurentPoly shifted(const Exponents& e) const;

    // Terms in lexicographic exponent order: "x2 + (1 - t)*x1 - t*x1^2*x2^-1".
    std::string to_string() const;
    nlohmann::json to_json() const;

private:
    void check_same(const LaurentPoly& o) const;

    int r_;
    int n_;
    TermMap terms_;
};

LaurentPoly lp_mul(const LaurentPoly& a, const LaurentPoly& b);

// The plain action: x_a -> x_{w(a)}.
LaurentPoly permute_variables(const Permutation& w, const LaurentPoly& f);

// The factor 1 - v^c_power * x^{n(e_i - e_j)} with i < j.
struct BinomialFactor {
    int i = 1;
    int j = 2;
    int c_power = 0;

    friend bool operator==(const BinomialFactor&, const BinomialFactor&) = default;
    friend auto operator<=>(const BinomialFactor&, const BinomialFactor&) = default;
};

LaurentPoly expand(const BinomialFactor& d, int r, int n);
LaurentPoly expand(const std::vector<BinomialFactor>& ds, int r, int n);

// q with q * d = p; NotDivisible otherwise.
LaurentPoly exact_divide_binomial(const LaurentPoly& p, const BinomialFactor& d);

// prod over positive roots of (1 - v x^{n alpha}), or with v = 1.
LaurentPoly deformed_denominator(int r, int n, bool deformed);

// numerator / product of binomial factors, all on positive roots.
class RationalElement {
public:
    explicit RationalElement(LaurentPoly numerator);
    RationalElement(LaurentPoly numerator, std::vector<BinomialFactor> denominator);

    // Divides by 1 - v^c x^{n(e_i - e_j)} for any i != j; a negative root is
    // rewritten as -v^{-c} x^{-n(e_i-e_j)} times a positive-root factor.
    RationalElement divided_by(int i, int j, int c_power) const;

    // Cancels every denominator factor that divides the numerator exactly.
    RationalElement reduced() const;
    bool is_zero() const { return num_.is_zero(); }

    const LaurentPoly& numerator() const { return num_; }
    const std::vector<BinomialFactor>& denominator() const { return den_; }
    int rank() const { return num_.rank(); }
    int degree() const { return num_.degree(); }

    friend RationalElement operator+(const RationalElement& a, const RationalElement& b);
    friend RationalElement operator-(const RationalElement& a, const RationalElement& b);
    friend RationalElement operator*(const LaurentPoly& p, const RationalElement& a);
    friend RationalElement operator-(const RationalElement& a) { return RationalElement(-a.num_, a.den_); }

private:
    LaurentPoly num_;
    std::vector<BinomialFactor> den_; // sorted multiset
};

bool rat_eq(const RationalElement& a, const RationalElement& b);
LaurentPoly rat_to_poly(const RationalElement& a);

} // namespace metatok
