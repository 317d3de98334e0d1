#include "metatok/gauss.hpp"

#include "metatok/errors.hpp"

#include <cmath>
#include <map>
#include <numbers>

namespace metatok {

namespace {

bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

std::complex<double> unit_root(long long k, long long m) {
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(k % m) / static_cast<double>(m);
    return std::polar(1.0, angle);
}

constexpr double tolerance = 1e-9;

} // namespace

GaussContext::GaussContext(int p, int n) : p_(p), n_(n), g_(0) {
    if (n < 1) throw InvalidArgument("degree must be positive");
    if (!is_prime(p) || p == 2) throw InvalidArgument("p must be an odd prime");
    if (p % (2 * n) != 1) throw InvalidArgument("p must be 1 mod 2n");
    for (int cand = 2; cand < p && g_ == 0; ++cand) {
        std::vector<int> log(static_cast<std::size_t>(p), -1);
        long long x = 1;
        bool full = true;
        for (int e = 0; e < p - 1; ++e) {
            if (log[x] != -1) {
                full = false;
                break;
            }
            log[x] = e;
            x = x * cand % p;
        }
        if (full) {
            g_ = cand;
            log_ = std::move(log);
        }
    }
}

int GaussContext::discrete_log(long long m) const {
    const long long r = ((m % p_) + p_) % p_;
    if (r == 0) throw InvalidArgument("no discrete log of a multiple of p");
    return log_[r];
}

std::complex<double> residue_symbol(long long m, const GaussContext& ctx) {
    if (m % ctx.p() == 0) return 0.0;
    // g^{(p-1)/n} is a primitive n-th root mod p, sent to exp(2 pi i / n).
    return unit_root(ctx.discrete_log(m), ctx.n());
}

namespace {

std::complex<double> character_power(int b, int a, const GaussContext& ctx) {
    const long long e = static_cast<long long>(ctx.discrete_log(b)) * a;
    return unit_root(((e % ctx.n()) + ctx.n()) % ctx.n(), ctx.n());
}

} // namespace

std::complex<double> gauss_gflat(int a, const GaussContext& ctx) {
    std::complex<double> sum = 0.0;
    for (int b = 1; b < ctx.p(); ++b) sum += character_power(b, a, ctx) * unit_root(b, ctx.p());
    return sum / static_cast<double>(ctx.q());
}

std::complex<double> gauss_hflat(int a, const GaussContext& ctx) {
    std::complex<double> sum = 0.0;
    for (int b = 1; b < ctx.p(); ++b) sum += character_power(b, a, ctx);
    sum /= static_cast<double>(ctx.q());
    const double expected = a % ctx.n() == 0 ? 1.0 - 1.0 / ctx.q() : 0.0;
    if (std::abs(sum - expected) > tolerance) throw std::logic_error("h_flat character sum disagrees with its closed form");
    return sum;
}

std::complex<double> specialize_scalar(const ScalarPoly& s, const GaussContext& ctx) {
    if (s.degree() != ctx.n()) throw InvalidArgument("degree mismatch");
    std::map<int, std::complex<double>> gammas;
    for (int a = 1; a < ctx.n(); ++a) gammas[a] = gauss_gflat(a, ctx);
    return scalar_evaluate(s, 1.0 / ctx.q(), gammas);
}

std::complex<double> specialize_poly(const LaurentPoly& f, const GaussContext& ctx,
                                     const std::vector<std::complex<double>>& x_values) {
    if (f.degree() != ctx.n()) throw InvalidArgument("degree mismatch");
    if (x_values.size() != static_cast<std::size_t>(f.rank() + 1)) throw InvalidArgument("wrong number of x values");
    for (const auto& x : x_values)
        if (x == 0.0) throw InvalidArgument("x values must be nonzero");
    std::map<int, std::complex<double>> gammas;
    for (int a = 1; a < ctx.n(); ++a) gammas[a] = gauss_gflat(a, ctx);
    std::complex<double> total = 0.0;
    for (const auto& [e, c] : f.terms()) {
        std::complex<double> term = scalar_evaluate(c, 1.0 / ctx.q(), gammas);
        for (std::size_t i = 0; i < e.size(); ++i) term *= std::pow(x_values[i], e[i]);
        total += term;
    }
    return total;
}

} // namespace metatok
