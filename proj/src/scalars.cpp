#include "metatok/scalars.hpp"

#include "metatok/errors.hpp"

#include <algorithm>
#include <sstream>

namespace metatok {

int residue(int a, int n) {
    int r = a % n;
    return r < 0 ? r + n : r;
}

GaussMonomial::GaussMonomial(int n) : n_(n) {
    if (n < 1) throw InvalidArgument("metaplectic degree must be positive");
    exps_.assign(static_cast<std::size_t>(n - 1), 0);
}

bool GaussMonomial::empty() const {
    return std::all_of(exps_.begin(), exps_.end(), [](int e) { return e == 0; });
}

std::strong_ordering operator<=>(const GaussMonomial& a, const GaussMonomial& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    return std::lexicographical_compare_three_way(a.exps_.begin(), a.exps_.end(),
                                                  b.exps_.begin(), b.exps_.end());
}

CanonicalGauss gamma_canonicalize(std::span<const int> raw, int n) {
    if (n < 1) throw InvalidArgument("metaplectic degree must be positive");
    if (raw.size() != static_cast<std::size_t>(n - 1))
        throw InvalidArgument("gauss exponent vector must have length n-1");
    CanonicalGauss out{GaussMonomial(n), 0};
    auto& e = out.monomial.exps_;
    for (std::size_t i = 0; i < raw.size(); ++i) {
        if (raw[i] < 0) throw InvalidArgument("gauss exponents must be non-negative");
        e[i] = raw[i];
    }
    for (int a = 1; 2 * a < n; ++a) {
        int& ea = e[a - 1];
        int& eb = e[n - a - 1];
        int m = std::min(ea, eb);
        ea -= m;
        eb -= m;
        out.v_shift += m;
    }
    if (n % 2 == 0) {
        int& ec = e[n / 2 - 1];
        out.v_shift += ec / 2;
        ec %= 2;
    }
    return out;
}

ScalarPoly::ScalarPoly(int n) : n_(n) {
    if (n < 1) throw InvalidArgument("metaplectic degree must be positive");
}

ScalarPoly::ScalarPoly(int n, long long c) : ScalarPoly(n) {
    if (c != 0) terms_.push_back(Term{0, GaussMonomial(n), Integer(c)});
}

ScalarPoly ScalarPoly::v_power(int n, int k, long long c) {
    ScalarPoly s(n);
    if (c != 0) s.terms_.push_back(Term{k, GaussMonomial(n), Integer(c)});
    return s;
}

ScalarPoly ScalarPoly::gamma(int n, int a) {
    if (a < 1 || a >= n) throw InvalidArgument("gauss symbol index out of range");
    std::vector<int> raw(static_cast<std::size_t>(n - 1), 0);
    raw[a - 1] = 1;
    auto c = gamma_canonicalize(raw, n);
    ScalarPoly s(n);
    s.terms_.push_back(Term{c.v_shift, c.monomial, Integer(1)});
    return s;
}

bool ScalarPoly::is_one() const {
    return terms_.size() == 1 && terms_[0].v_exp == 0 && terms_[0].gamma.empty() &&
           terms_[0].coeff == 1;
}

ScalarPoly ScalarPoly::shifted(int k) const {
    ScalarPoly s = *this;
    for (auto& t : s.terms_) t.v_exp += k;
    return s;
}

void ScalarPoly::check_same(const ScalarPoly& o) const {
    if (n_ != o.n_) throw InvalidArgument("scalar degree mismatch");
}

static bool term_less(const ScalarPoly::Term& a, const ScalarPoly::Term& b) {
    if (a.v_exp != b.v_exp) return a.v_exp < b.v_exp;
    return a.gamma < b.gamma;
}

void ScalarPoly::add_term(int v_exp, const GaussMonomial& g, const Integer& c) {
    if (c == 0) return;
    Term probe{v_exp, g, Integer(0)};
    auto it = std::lower_bound(terms_.begin(), terms_.end(), probe, term_less);
    if (it != terms_.end() && it->v_exp == v_exp && it->gamma == g) {
        it->coeff += c;
        if (it->coeff == 0) terms_.erase(it);
    } else {
        terms_.insert(it, Term{v_exp, g, c});
    }
}

ScalarPoly ScalarPoly::operator-() const {
    ScalarPoly s = *this;
    for (auto& t : s.terms_) t.coeff = -t.coeff;
    return s;
}

static std::vector<ScalarPoly::Term> merge_terms(const std::vector<ScalarPoly::Term>& a,
                                                 const std::vector<ScalarPoly::Term>& b,
                                                 bool subtract) {
    std::vector<ScalarPoly::Term> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && term_less(a[i], b[j]))) {
            out.push_back(a[i++]);
        } else if (i == a.size() || term_less(b[j], a[i])) {
            out.push_back(b[j++]);
            if (subtract) out.back().coeff = -out.back().coeff;
        } else {
            Integer c = subtract ? a[i].coeff - b[j].coeff : a[i].coeff + b[j].coeff;
            if (c != 0) out.push_back(ScalarPoly::Term{a[i].v_exp, a[i].gamma, std::move(c)});
            ++i;
            ++j;
        }
    }
    return out;
}

ScalarPoly& ScalarPoly::operator+=(const ScalarPoly& o) {
    check_same(o);
    if (o.terms_.empty()) return *this;
    if (o.terms_.size() == 1) {
        add_term(o.terms_[0].v_exp, o.terms_[0].gamma, o.terms_[0].coeff);
        return *this;
    }
    terms_ = merge_terms(terms_, o.terms_, false);
    return *this;
}

ScalarPoly& ScalarPoly::operator-=(const ScalarPoly& o) {
    check_same(o);
    if (o.terms_.empty()) return *this;
    if (o.terms_.size() == 1) {
        add_term(o.terms_[0].v_exp, o.terms_[0].gamma, -o.terms_[0].coeff);
        return *this;
    }
    terms_ = merge_terms(terms_, o.terms_, true);
    return *this;
}

ScalarPoly operator*(const ScalarPoly& a, const ScalarPoly& b) {
    a.check_same(b);
    ScalarPoly out(a.n_);
    if (a.terms_.empty() || b.terms_.empty()) return out;
    std::vector<ScalarPoly::Term> prods;
    prods.reserve(a.terms_.size() * b.terms_.size());
    std::vector<int> raw(static_cast<std::size_t>(a.n_ - 1));
    for (const auto& x : a.terms_) {
        for (const auto& y : b.terms_) {
            if (a.n_ == 1 || y.gamma.empty()) {
                prods.push_back({x.v_exp + y.v_exp, x.gamma, x.coeff * y.coeff});
                continue;
            }
            if (x.gamma.empty()) {
                prods.push_back({x.v_exp + y.v_exp, y.gamma, x.coeff * y.coeff});
                continue;
            }
            for (std::size_t i = 0; i < raw.size(); ++i) raw[i] = x.gamma.exps()[i] + y.gamma.exps()[i];
            auto c = gamma_canonicalize(raw, a.n_);
            prods.push_back({x.v_exp + y.v_exp + c.v_shift, c.monomial, x.coeff * y.coeff});
        }
    }
    std::sort(prods.begin(), prods.end(), term_less);
    for (auto& t : prods) {
        if (!out.terms_.empty() && out.terms_.back().v_exp == t.v_exp &&
            out.terms_.back().gamma == t.gamma) {
            out.terms_.back().coeff += t.coeff;
            if (out.terms_.back().coeff == 0) out.terms_.pop_back();
        } else {
            out.terms_.push_back(std::move(t));
        }
    }
    return out;
}

ScalarPoly& ScalarPoly::operator*=(const ScalarPoly& o) {
    *this = *this * o;
    return *this;
}

bool operator==(const ScalarPoly& a, const ScalarPoly& b) {
    if (a.n_ != b.n_ || a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i) {
        const auto& x = a.terms_[i];
        const auto& y = b.terms_[i];
        if (x.v_exp != y.v_exp || x.gamma != y.gamma || x.coeff != y.coeff) return false;
    }
    return true;
}

std::string ScalarPoly::to_string() const {
    if (terms_.empty()) return "0";
    const char* var = n_ == 1 ? "t" : "v";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        std::vector<std::string> factors;
        for (int a = 1; a < n_; ++a) {
            int e = t.gamma.exponent(a);
            if (e == 0) continue;
            factors.push_back("g" + std::to_string(a) + (e == 1 ? "" : "^" + std::to_string(e)));
        }
        if (t.v_exp == 1) factors.emplace_back(var);
        else if (t.v_exp != 0) factors.push_back(std::string(var) + "^" + std::to_string(t.v_exp));

        bool neg = t.coeff < 0;
        Integer mag = neg ? Integer(-t.coeff) : t.coeff;
        if (first) os << (neg ? "-" : "");
        else os << (neg ? " - " : " + ");
        first = false;

        std::string body;
        for (std::size_t i = 0; i < factors.size(); ++i) body += (i ? "*" : "") + factors[i];
        if (body.empty()) os << mag;
        else if (mag == 1) os << body;
        else os << mag << "*" << body;
    }
    return os.str();
}

ScalarPoly scalar_mul(const ScalarPoly& a, const ScalarPoly& b) { return a * b; }

ScalarPoly h_flat(int a, int n) {
    if (residue(a, n) != 0) return ScalarPoly(n);
    return ScalarPoly(n, 1) - ScalarPoly::v_power(n, 1);
}

ScalarPoly g_flat(int a, int n) {
    int r = residue(a, n);
    if (r == 0) return ScalarPoly::v_power(n, 1, -1);
    return ScalarPoly::gamma(n, r);
}

ScalarPoly v_times_g(int j, int n) { return g_flat(j, n); }

std::complex<double> scalar_evaluate(const ScalarPoly& s, std::complex<double> v_value,
                                     const std::map<int, std::complex<double>>& gamma_values) {
    for (int a = 1; a < s.degree(); ++a)
        if (!gamma_values.contains(a)) throw InvalidArgument("missing value for g" + std::to_string(a));
    std::complex<double> total = 0.0;
    for (const auto& t : s.terms()) {
        std::complex<double> term = std::pow(v_value, t.v_exp);
        for (int a = 1; a < s.degree(); ++a) {
            int e = t.gamma.exponent(a);
            if (e == 0) continue;
            term *= std::pow(gamma_values.at(a), e);
        }
        total += term * t.coeff.convert_to<double>();
    }
    return total;
}

} // namespace metatok
