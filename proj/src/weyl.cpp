#include "metatok/weyl.hpp"

#include "metatok/errors.hpp"

#include <algorithm>
#include <numeric>

namespace metatok {

Permutation::Permutation(std::vector<int> images) : img_(std::move(images)) {
    std::vector<bool> seen(img_.size() + 1, false);
    for (int x : img_) {
        if (x < 1 || x > size() || seen[x]) throw InvalidArgument("not a permutation");
        seen[x] = true;
    }
}

Permutation Permutation::identity(int size) {
    std::vector<int> v(static_cast<std::size_t>(size));
    std::iota(v.begin(), v.end(), 1);
    return Permutation(std::move(v));
}

Permutation Permutation::simple(int i, int size) {
    if (i < 1 || i >= size) throw InvalidArgument("simple reflection index out of range");
    auto p = identity(size);
    std::swap(p.img_[i - 1], p.img_[i]);
    return p;
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(img_.size());
    for (int a = 1; a <= size(); ++a) inv[img_[a - 1] - 1] = a;
    return Permutation(std::move(inv));
}

int Permutation::length() const {
    int l = 0;
    for (int a = 0; a < size(); ++a)
        for (int b = a + 1; b < size(); ++b)
            if (img_[a] > img_[b]) ++l;
    return l;
}

bool Permutation::is_identity() const {
    for (int a = 0; a < size(); ++a)
        if (img_[a] != a + 1) return false;
    return true;
}

bool Permutation::has_left_descent(int i) const {
    // s_i w is shorter iff i+1 appears before i in one-line notation.
    auto pi = std::find(img_.begin(), img_.end(), i);
    auto pj = std::find(img_.begin(), img_.end(), i + 1);
    return pj < pi;
}

Permutation operator*(const Permutation& u, const Permutation& w) {
    if (u.size() != w.size()) throw InvalidArgument("permutation size mismatch");
    std::vector<int> out(w.img_.size());
    for (int a = 1; a <= w.size(); ++a) out[a - 1] = u(w(a));
    return Permutation(std::move(out));
}

std::string Permutation::to_string() const {
    std::string s;
    for (std::size_t a = 0; a < img_.size(); ++a) {
        if (size() > 9 && a) s += ",";
        s += std::to_string(img_[a]);
    }
    return s;
}

Word Word::prefix(std::size_t l) const {
    return Word(std::vector<int>(letters_.begin(), letters_.begin() + static_cast<long>(l)));
}

std::string Word::to_string() const {
    std::string s;
    for (std::size_t i = 0; i < letters_.size(); ++i) s += (i ? "," : "") + std::to_string(letters_[i]);
    return s;
}

int binomial2(int m) { return m * (m - 1) / 2; }

Word favourite_long_word(int r) {
    if (r < 0) throw InvalidArgument("rank must be non-negative");
    std::vector<int> letters;
    for (int k = 1; k <= r; ++k)
        for (int i = k; i >= 1; --i) letters.push_back(i);
    return Word(std::move(letters));
}

BeginningSection beginning_section(int r, int l) {
    if (l < 0 || l > binomial2(r + 1)) throw InvalidArgument("beginning section length out of range");
    BeginningSection b{favourite_long_word(r).prefix(static_cast<std::size_t>(l)), std::nullopt};
    if (l > binomial2(r)) b.k = l - binomial2(r) - 1;
    return b;
}

Permutation evaluate_word(const Word& w, int r) {
    auto p = Permutation::identity(r + 1);
    for (int i : w.letters()) {
        if (i < 1 || i > r) throw InvalidArgument("letter out of range");
        p = p * Permutation::simple(i, r + 1);
    }
    return p;
}

Word reduced_word(const Permutation& w) {
    std::vector<int> letters;
    auto u = w;
    while (!u.is_identity()) {
        int i = 1;
        while (!u.has_left_descent(i)) ++i;
        letters.push_back(i);
        u = Permutation::simple(i, u.size()) * u;
    }
    return Word(std::move(letters));
}

bool bruhat_leq(const Permutation& u, const Permutation& w) {
    if (u.size() != w.size()) throw InvalidArgument("permutation size mismatch");
    int m = u.size();
    for (int i = 1; i <= m; ++i) {
        for (int j = 1; j <= m; ++j) {
            int cu = 0, cw = 0;
            for (int a = 1; a <= i; ++a) {
                if (u(a) >= j) ++cu;
                if (w(a) >= j) ++cw;
            }
            if (cu > cw) return false;
        }
    }
    return true;
}

std::vector<Permutation> all_permutations(int size) {
    std::vector<int> v(static_cast<std::size_t>(size));
    std::iota(v.begin(), v.end(), 1);
    std::vector<Permutation> out;
    do {
        out.emplace_back(v);
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
}

std::vector<Permutation> lower_interval(const Permutation& w) {
    std::vector<Permutation> out;
    for (auto& u : all_permutations(w.size()))
        if (bruhat_leq(u, w)) out.push_back(std::move(u));
    std::stable_sort(out.begin(), out.end(),
                     [](const Permutation& a, const Permutation& b) { return a.length() < b.length(); });
    return out;
}

std::vector<std::pair<int, int>> inversion_set_phi(const Permutation& w) {
    std::vector<std::pair<int, int>> out;
    for (int i = 1; i <= w.size(); ++i)
        for (int j = i + 1; j <= w.size(); ++j)
            if (w(i) > w(j)) out.emplace_back(i, j);
    return out;
}

Permutation longest_element(int size) {
    std::vector<int> v(static_cast<std::size_t>(size));
    for (int a = 0; a < size; ++a) v[a] = size - a;
    return Permutation(std::move(v));
}

} // namespace metatok
