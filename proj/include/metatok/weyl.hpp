#pragma once

#include <compare>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace metatok {

// Element of S_{r+1}, stored by its images of 1..r+1.
class Permutation {
public:
    explicit Permutation(std::vector<int> images);

    static Permutation identity(int size);
    // The adjacent transposition (i, i+1).
    static Permutation simple(int i, int size);

    int size() const { return static_cast<int>(img_.size()); }
    int operator()(int a) const { return img_[a - 1]; }
    const std::vector<int>& images() const { return img_; }

    Permutation inverse() const;
    int length() const;
    int sign() const { return length() % 2 == 0 ? 1 : -1; }
    bool is_identity() const;
    // l(s_i w) < l(w)
    bool has_left_descent(int i) const;

    // (u * w)(a) = u(w(a))
    friend Permutation operator*(const Permutation& u, const Permutation& w);
    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation&, const Permutation&) = default;

    // One-line notation, e.g. "231".
    std::string to_string() const;

private:
    std::vector<int> img_;
};

// Sequence of simple reflection indices; s_{i1} s_{i2} ... s_{il}.
class Word {
public:
    Word() = default;
    explicit Word(std::vector<int> letters) : letters_(std::move(letters)) {}

    const std::vector<int>& letters() const { return letters_; }
    std::size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }
    Word prefix(std::size_t l) const;

    friend bool operator==(const Word&, const Word&) = default;
    std::string to_string() const; // "1,2,1"

private:
    std::vector<int> letters_;
};

int binomial2(int m); // m choose 2

// s1 s2 s1 s3 s2 s1 ... sr ... s1
Word favourite_long_word(int r);

struct BeginningSection {
    Word word;
    // Set when l > C(r,2): w = w0^{(r-1)} s_r ... s_{r-k}.
    std::optional<int> k;
};

BeginningSection beginning_section(int r, int l);

Permutation evaluate_word(const Word& w, int r);

// Reduced word obtained by repeatedly stripping the smallest left descent.
Word reduced_word(const Permutation& w);

// Dominance criterion on one-line notation.
bool bruhat_leq(const Permutation& u, const Permutation& w);

std::vector<Permutation> all_permutations(int size);

// Sorted by (length, one-line notation).
std::vector<Permutation> lower_interval(const Permutation& w);

// Positive roots e_i - e_j (i < j) sent to negative roots.
std::vector<std::pair<int, int>> inversion_set_phi(const Permutation& w);

Permutation longest_element(int size);

} // namespace metatok
