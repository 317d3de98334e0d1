#pragma once

#include "json.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace metatok {

using Weight = std::vector<int>;

// Triangular array a_{ij}, 0 <= i <= j <= r; row i has r+1-i entries.
class GTPattern {
public:
    explicit GTPattern(std::vector<std::vector<int>> rows);

    int rank() const { return static_cast<int>(rows_.size()) - 1; }
    int at(int i, int j) const { return rows_[i][j - i]; }
    const std::vector<std::vector<int>>& rows() const { return rows_; }
    const std::vector<int>& top_row() const { return rows_.front(); }
    // d_i
    int row_sum(int i) const;

    friend bool operator==(const GTPattern&, const GTPattern&) = default;
    friend auto operator<=>(const GTPattern&, const GTPattern&) = default;

    // "3,1,0/3,1/2"
    std::string to_string() const;

private:
    std::vector<std::vector<int>> rows_;
};

// Gamma_{ij} = sum_{k >= j} (a_{ik} - a_{i-1,k}), 1 <= i <= j <= r.
class GammaArray {
public:
    GammaArray(Weight top_row, std::vector<std::vector<int>> entries);

    int rank() const { return static_cast<int>(top_.size()) - 1; }
    // Gamma_{i,r+1} = 0.
    int at(int i, int j) const { return j > rank() ? 0 : rows_[i - 1][j - i]; }
    const std::vector<std::vector<int>>& entries() const { return rows_; }
    const Weight& top_row() const { return top_; }
    // b_k in the BZL layout: row i holds b_{C(r+1-i,2)+1} ... b_{C(r+2-i,2)}.
    int bzl(int k) const;

    friend bool operator==(const GammaArray&, const GammaArray&) = default;

private:
    Weight top_;
    std::vector<std::vector<int>> rows_;
};

enum class Decor { Undecorated, Circled, Boxed, CircledBoxed };

std::string decor_name(Decor d);

struct Decoration {
    // flags[i-1][j-i] for Gamma_{ij}
    std::vector<std::vector<Decor>> flags;

    Decor at(int i, int j) const { return flags[i - 1][j - i]; }
};

bool is_valid_top_row(const Weight& top);

// Lexicographic in the concatenated rows.
std::vector<GTPattern> enumerate_patterns(const Weight& top_row);

GammaArray gamma_of(const GTPattern& p);
GTPattern pattern_of_gamma(const Weight& top_row, const GammaArray& g);

Decoration decorations(const GTPattern& p);

// (d_r, d_{r-1} - d_r, ..., d_0 - d_1)
Weight weight_of(const GTPattern& p);

struct Component {
    Weight mu;
    std::vector<GTPattern> vertices;
};

// Second rows mu interleaving with top_row, in decreasing lexicographic order.
std::vector<Component> mu_components(const Weight& top_row);

bool interleaves(const Weight& top_row, const Weight& mu);

// a_{ij} = mu_j for all i >= 1.
GTPattern lowest_vertex(const Weight& top_row, const Weight& mu);

// Patterns with b_k = 0 for k > w_length.
std::vector<GTPattern> demazure_members(const Weight& top_row, int w_length);
bool is_demazure_member(const GammaArray& g, int w_length);

// m_{ij} for 1 <= i < j <= r+1.
std::map<std::pair<int, int>, int> lusztig_data_of(const GammaArray& g);

Weight reversed(const Weight& w);

nlohmann::json pattern_json(const GTPattern& p);

} // namespace metatok
