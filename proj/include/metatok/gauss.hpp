#pragma once

#include "metatok/laurent.hpp"

#include <complex>
#include <vector>

namespace metatok {

// A prime p with p = 1 mod 2n, q = p and psi(b) = exp(2 pi i b / p).
class GaussContext {
public:
    GaussContext(int p, int n);

    int p() const { return p_; }
    int n() const { return n_; }
    int q() const { return p_; }
    // Smallest primitive root mod p; it is sent to exp(2 pi i / (p - 1)).
    int primitive_root() const { return g_; }
    // e with g^e = m mod p, for m prime to p.
    int discrete_log(long long m) const;

private:
    int p_;
    int n_;
    int g_;
    std::vector<int> log_; // log_[m] for 1 <= m < p
};

// n-th power residue symbol (m/p); 0 when p | m.
std::complex<double> residue_symbol(long long m, const GaussContext& ctx);

// q^{-1} sum_b (b/p)^a psi(b/p)
std::complex<double> gauss_gflat(int a, const GaussContext& ctx);

// q^{-1} sum_b (b/p)^a, checked against 0 or 1 - 1/q.
std::complex<double> gauss_hflat(int a, const GaussContext& ctx);

std::complex<double> specialize_scalar(const ScalarPoly& s, const GaussContext& ctx);

// v -> 1/q, g_a -> gauss_gflat(a), x_i -> x_values[i-1].
std::complex<double> specialize_poly(const LaurentPoly& f, const GaussContext& ctx,
                                     const std::vector<std::complex<double>>& x_values);

} // namespace metatok
