#include "metatok/laurent.hpp"

#include "metatok/errors.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace metatok {

Exponents exponents(std::initializer_list<int> e) { return Exponents(e.begin(), e.end()); }
Exponents exponents(const std::vector<int>& e) { return Exponents(e.begin(), e.end()); }

LaurentPoly::LaurentPoly(int r, int n) : r_(r), n_(n) {
    if (r < 0) throw InvalidArgument("rank must be non-negative");
    if (n < 1) throw InvalidArgument("metaplectic degree must be positive");
}

LaurentPoly LaurentPoly::monomial(int r, int n, const Exponents& e) {
    return monomial(r, e, ScalarPoly(n, 1));
}

LaurentPoly LaurentPoly::monomial(int r, const Exponents& e, const ScalarPoly& c) {
    LaurentPoly p(r, c.degree());
    p.add_term(e, c);
    return p;
}

LaurentPoly LaurentPoly::constant(int r, const ScalarPoly& c) {
    return monomial(r, Exponents(static_cast<std::size_t>(r + 1), 0), c);
}

ScalarPoly LaurentPoly::coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? ScalarPoly(n_) : it->second;
}

void LaurentPoly::add_term(const Exponents& e, const ScalarPoly& c) {
    if (e.size() != static_cast<std::size_t>(r_ + 1)) throw InvalidArgument("exponent vector length mismatch");
    if (c.degree() != n_) throw InvalidArgument("scalar degree mismatch");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void LaurentPoly::check_same(const LaurentPoly& o) const {
    if (r_ != o.r_) throw InvalidArgument("rank mismatch");
    if (n_ != o.n_) throw InvalidArgument("degree mismatch");
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly p = *this;
    for (auto& [e, c] : p.terms_) c = -c;
    return p;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    check_same(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    check_same(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    a.check_same(b);
    LaurentPoly out(a.r_, a.n_);
    Exponents e(static_cast<std::size_t>(a.r_ + 1));
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t k = 0; k < e.size(); ++k) e[k] = ea[k] + eb[k];
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
    *this = *this * o;
    return *this;
}

bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.r_ == b.r_ && a.n_ == b.n_ && a.terms_ == b.terms_;
}

LaurentPoly LaurentPoly::scaled(const ScalarPoly& c) const {
    LaurentPoly out(r_, n_);
    if (c.is_zero()) return out;
    for (const auto& [e, s] : terms_) out.add_term(e, s * c);
    return out;
}

LaurentPoly LaurentPoly::shifted(const Exponents& d) const {
    if (d.size() != static_cast<std::size_t>(r_ + 1)) throw InvalidArgument("exponent vector length mismatch");
    LaurentPoly out(r_, n_);
    for (const auto& [e, s] : terms_) {
        Exponents f = e;
        for (std::size_t k = 0; k < f.size(); ++k) f[k] += d[k];
        out.terms_.emplace_hint(out.terms_.end(), std::move(f), s);
    }
    return out;
}

static std::string monomial_string(const Exponents& e) {
    std::string s;
    for (std::size_t k = 0; k < e.size(); ++k) {
        if (e[k] == 0) continue;
        if (!s.empty()) s += "*";
        s += "x" + std::to_string(k + 1);
        if (e[k] != 1) s += "^" + std::to_string(e[k]);
    }
    return s;
}

std::string LaurentPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        std::string mono = monomial_string(e);
        std::string cs = c.to_string();
        bool neg = false;
        std::string body;
        if (c.terms().size() == 1) {
            if (cs[0] == '-') {
                neg = true;
                cs = cs.substr(1);
            }
            if (mono.empty()) body = cs;
            else if (cs == "1") body = mono;
            else body = cs + "*" + mono;
        } else if (mono.empty() && terms_.size() == 1) {
            body = cs;
        } else {
            body = "(" + cs + ")" + (mono.empty() ? "" : "*" + mono);
        }
        if (first) os << (neg ? "-" : "");
        else os << (neg ? " - " : " + ");
        os << body;
        first = false;
    }
    return os.str();
}

nlohmann::json LaurentPoly::to_json() const {
    auto arr = nlohmann::json::array();
    for (const auto& [e, c] : terms_) {
        arr.push_back({{"exps", std::vector<int>(e.begin(), e.end())}, {"coeff", c.to_string()}});
    }
    return arr;
}

LaurentPoly lp_mul(const LaurentPoly& a, const LaurentPoly& b) { return a * b; }

LaurentPoly permute_variables(const Permutation& w, const LaurentPoly& f) {
    if (w.size() != f.rank() + 1) throw InvalidArgument("permutation size mismatch");
    LaurentPoly out(f.rank(), f.degree());
    for (const auto& [e, c] : f.terms()) {
        Exponents g(e.size());
        for (int a = 1; a <= w.size(); ++a) g[w(a) - 1] = e[a - 1];
        out.add_term(g, c);
    }
    return out;
}

static Exponents root_exponents(int i, int j, int r, int scale) {
    Exponents e(static_cast<std::size_t>(r + 1), 0);
    e[i - 1] += scale;
    e[j - 1] -= scale;
    return e;
}

LaurentPoly expand(const BinomialFactor& d, int r, int n) {
    LaurentPoly p = LaurentPoly::constant(r, ScalarPoly(n, 1));
    p.add_term(root_exponents(d.i, d.j, r, n), ScalarPoly::v_power(n, d.c_power, -1));
    return p;
}

LaurentPoly expand(const std::vector<BinomialFactor>& ds, int r, int n) {
    LaurentPoly p = LaurentPoly::constant(r, ScalarPoly(n, 1));
    for (const auto& d : ds) p *= expand(d, r, n);
    return p;
}

LaurentPoly exact_divide_binomial(const LaurentPoly& p, const BinomialFactor& d) {
    const int r = p.rank();
    const int n = p.degree();
    if (d.i < 1 || d.j > r + 1 || d.i >= d.j) throw InvalidArgument("binomial factor must use a positive root");
    LaurentPoly q(r, n);
    if (p.is_zero()) return q;

    // Remainder keyed with the x_i exponent first, largest first.
    const std::size_t lead = static_cast<std::size_t>(d.i - 1);
    auto rotate = [&](const Exponents& e) {
        Exponents k = e;
        std::rotate(k.begin(), k.begin() + static_cast<long>(lead), k.begin() + static_cast<long>(lead) + 1);
        return k;
    };
    auto unrotate = [&](const Exponents& k) {
        Exponents e = k;
        std::rotate(e.begin(), e.begin() + 1, e.begin() + static_cast<long>(lead) + 1);
        return e;
    };
    std::map<Exponents, ScalarPoly, std::greater<>> rem;
    int min_deg = p.terms().begin()->first[lead];
    for (const auto& [e, c] : p.terms()) {
        rem.emplace(rotate(e), c);
        min_deg = std::min(min_deg, e[lead]);
    }
    const Exponents step = root_exponents(d.i, d.j, r, n);
    while (!rem.empty()) {
        auto top = rem.begin();
        Exponents e = unrotate(top->first);
        if (e[lead] < min_deg + n) throw NotDivisible("polynomial is not divisible by the binomial factor");
        // top term m must equal -v^c * qterm * x^{n alpha}
        ScalarPoly qc = -top->second.shifted(-d.c_power);
        rem.erase(top);
        Exponents qe = e;
        for (std::size_t k = 0; k < qe.size(); ++k) qe[k] -= step[k];
        q.add_term(qe, qc);
        auto key = rotate(qe);
        auto [it, inserted] = rem.try_emplace(key, -qc);
        if (!inserted) {
            it->second -= qc;
            if (it->second.is_zero()) rem.erase(it);
        }
    }
    return q;
}

LaurentPoly deformed_denominator(int r, int n, bool deformed) {
    std::vector<BinomialFactor> ds;
    for (int i = 1; i <= r + 1; ++i)
        for (int j = i + 1; j <= r + 1; ++j) ds.push_back({i, j, deformed ? 1 : 0});
    LaurentPoly p = LaurentPoly::constant(r, ScalarPoly(n, 1));
    for (const auto& d : ds) {
        LaurentPoly f = LaurentPoly::constant(r, ScalarPoly(n, 1));
        f.add_term(root_exponents(d.i, d.j, r, n), ScalarPoly(n, -1).shifted(d.c_power));
        p *= f;
    }
    return p;
}

RationalElement::RationalElement(LaurentPoly numerator) : num_(std::move(numerator)) {}

RationalElement::RationalElement(LaurentPoly numerator, std::vector<BinomialFactor> denominator)
    : num_(std::move(numerator)) {
    for (const auto& d : denominator) {
        auto next = divided_by(d.i, d.j, d.c_power);
        num_ = std::move(next.num_);
        den_ = std::move(next.den_);
    }
}

RationalElement RationalElement::divided_by(int i, int j, int c_power) const {
    const int r = rank();
    if (i < 1 || j < 1 || i > r + 1 || j > r + 1 || i == j) throw InvalidArgument("invalid root");
    RationalElement out = *this;
    BinomialFactor f{i, j, c_power};
    if (i > j) {
        // 1/(1 - c x^{-n g}) = -c^{-1} x^{n g} / (1 - c^{-1} x^{n g})
        f = BinomialFactor{j, i, -c_power};
        auto mult = LaurentPoly::monomial(r, root_exponents(j, i, r, degree()),
                                          ScalarPoly::v_power(degree(), -c_power, -1));
        out.num_ = mult * out.num_;
    }
    out.den_.insert(std::upper_bound(out.den_.begin(), out.den_.end(), f), f);
    return out;
}

// Multiset difference a \ b of sorted factor lists.
static std::vector<BinomialFactor> missing(const std::vector<BinomialFactor>& a,
                                           const std::vector<BinomialFactor>& b) {
    std::vector<BinomialFactor> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

static RationalElement combine(const RationalElement& a, const RationalElement& b, bool subtract) {
    const int r = a.rank();
    const int n = a.degree();
    auto a_needs = missing(b.denominator(), a.denominator());
    auto b_needs = missing(a.denominator(), b.denominator());
    LaurentPoly na = a.numerator() * expand(a_needs, r, n);
    LaurentPoly nb = b.numerator() * expand(b_needs, r, n);
    std::vector<BinomialFactor> den = a.denominator();
    den.insert(den.end(), a_needs.begin(), a_needs.end());
    std::sort(den.begin(), den.end());
    return RationalElement(subtract ? na - nb : na + nb, std::move(den));
}

RationalElement operator+(const RationalElement& a, const RationalElement& b) { return combine(a, b, false); }
RationalElement operator-(const RationalElement& a, const RationalElement& b) { return combine(a, b, true); }

RationalElement operator*(const LaurentPoly& p, const RationalElement& a) {
    return RationalElement(p * a.num_, a.den_);
}

RationalElement RationalElement::reduced() const {
    if (num_.is_zero()) return RationalElement(num_);
    LaurentPoly q = num_;
    std::vector<BinomialFactor> kept;
    for (const auto& d : den_) {
        try {
            q = exact_divide_binomial(q, d);
        } catch (const NotDivisible&) {
            kept.push_back(d);
        }
    }
    RationalElement out(std::move(q));
    out.den_ = std::move(kept);
    return out;
}

LaurentPoly rat_to_poly(const RationalElement& a) {
    LaurentPoly q = a.numerator();
    for (const auto& d : a.denominator()) q = exact_divide_binomial(q, d);
    return q;
}

bool rat_eq(const RationalElement& a, const RationalElement& b) {
    if (a.rank() != b.rank() || a.degree() != b.degree()) throw InvalidArgument("rank or degree mismatch");
    if (a.denominator() == b.denominator()) return a.numerator() == b.numerator();
    // Cancel the common part of the denominators first.
    auto only_a = missing(a.denominator(), b.denominator());
    auto only_b = missing(b.denominator(), a.denominator());
    const int r = a.rank();
    const int n = a.degree();
    return a.numerator() * expand(only_b, r, n) == b.numerator() * expand(only_a, r, n);
}

} // namespace metatok
