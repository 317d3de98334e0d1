#include "metatok/crystal.hpp"

#include "metatok/errors.hpp"
#include "metatok/weyl.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace metatok {

GTPattern::GTPattern(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
    if (rows_.empty()) throw InvalidArgument("pattern needs a top row");
    const int r = rank();
    for (int i = 0; i <= r; ++i)
        if (rows_[i].size() != static_cast<std::size_t>(r + 1 - i)) throw InvalidArgument("ragged pattern rows");
    for (int i = 1; i <= r; ++i)
        for (int j = i; j <= r; ++j)
            if (at(i, j) > at(i - 1, j - 1) || at(i, j) < at(i - 1, j))
                throw InvalidArgument("pattern rows do not interleave");
}

int GTPattern::row_sum(int i) const {
    int s = 0;
    for (int a : rows_[i]) s += a;
    return s;
}

std::string GTPattern::to_string() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (i) out << '/';
        for (std::size_t j = 0; j < rows_[i].size(); ++j) out << (j ? "," : "") << rows_[i][j];
    }
    return out.str();
}

GammaArray::GammaArray(Weight top_row, std::vector<std::vector<int>> entries)
    : top_(std::move(top_row)), rows_(std::move(entries)) {
    const int r = rank();
    if (rows_.size() != static_cast<std::size_t>(r)) throw InvalidGamma("wrong number of Gamma rows");
    for (int i = 1; i <= r; ++i)
        if (rows_[i - 1].size() != static_cast<std::size_t>(r + 1 - i)) throw InvalidGamma("ragged Gamma rows");
}

int GammaArray::bzl(int k) const {
    const int r = rank();
    for (int i = 1; i <= r; ++i) {
        const int start = binomial2(r + 1 - i);
        if (k > start && k <= start + r + 1 - i) return at(i, i + (k - start) - 1);
    }
    throw InvalidArgument("BZL index out of range");
}

std::string decor_name(Decor d) {
    switch (d) {
    case Decor::Undecorated: return "undecorated";
    case Decor::Circled: return "circled";
    case Decor::Boxed: return "boxed";
    case Decor::CircledBoxed: return "circled+boxed";
    }
    return "";
}

bool is_valid_top_row(const Weight& top) {
    if (top.empty()) return false;
    if (!std::is_sorted(top.rbegin(), top.rend())) return false;
    return top.back() >= 0;
}

namespace {

// Calls emit for each row interleaving with above, in lexicographic order.
void for_each_next_row(const std::vector<int>& above, const std::function<void(const std::vector<int>&)>& emit) {
    std::vector<int> row(above.size() - 1);
    std::function<void(std::size_t)> fill = [&](std::size_t j) {
        if (j == row.size()) {
            emit(row);
            return;
        }
        for (int a = above[j + 1]; a <= above[j]; ++a) {
            row[j] = a;
            fill(j + 1);
        }
    };
    fill(0);
}

void extend(std::vector<std::vector<int>>& rows, std::vector<GTPattern>& out) {
    if (rows.back().size() == 1) {
        out.emplace_back(rows);
        return;
    }
    const std::vector<int> above = rows.back();
    for_each_next_row(above, [&](const std::vector<int>& next) {
        rows.push_back(next);
        extend(rows, out);
        rows.pop_back();
    });
}

} // namespace

std::vector<GTPattern> enumerate_patterns(const Weight& top_row) {
    if (!is_valid_top_row(top_row)) throw InvalidArgument("top row must be non-increasing and non-negative");
    std::vector<GTPattern> out;
    std::vector<std::vector<int>> rows{top_row};
    extend(rows, out);
    return out;
}

GammaArray gamma_of(const GTPattern& p) {
    const int r = p.rank();
    std::vector<std::vector<int>> g;
    for (int i = 1; i <= r; ++i) {
        std::vector<int> row(static_cast<std::size_t>(r + 1 - i));
        int acc = 0;
        for (int j = r; j >= i; --j) {
            acc += p.at(i, j) - p.at(i - 1, j);
            row[j - i] = acc;
        }
        g.push_back(std::move(row));
    }
    return GammaArray(p.top_row(), std::move(g));
}

GTPattern pattern_of_gamma(const Weight& top_row, const GammaArray& g) {
    const int r = static_cast<int>(top_row.size()) - 1;
    if (g.rank() != r) throw InvalidGamma("Gamma array does not match the top row");
    std::vector<std::vector<int>> rows{top_row};
    for (int i = 1; i <= r; ++i) {
        std::vector<int> row(static_cast<std::size_t>(r + 1 - i));
        for (int j = i; j <= r; ++j) row[j - i] = rows[i - 1][j - (i - 1)] + g.at(i, j) - g.at(i, j + 1);
        rows.push_back(std::move(row));
    }
    try {
        GTPattern p(std::move(rows));
        if (!(gamma_of(p) == g)) throw InvalidGamma("Gamma array is not realized by a pattern");
        return p;
    } catch (const InvalidArgument&) {
        throw InvalidGamma("Gamma array is not realized by an interleaving pattern");
    }
}

Decoration decorations(const GTPattern& p) {
    const int r = p.rank();
    const GammaArray g = gamma_of(p);
    Decoration d;
    for (int i = 1; i <= r; ++i) {
        std::vector<Decor> row;
        for (int j = i; j <= r; ++j) {
            const int lower = g.at(i, j + 1);
            const int upper = lower + p.at(i - 1, j - 1) - p.at(i - 1, j);
            const bool circled = g.at(i, j) == lower;
            const bool boxed = g.at(i, j) == upper;
            row.push_back(circled && boxed ? Decor::CircledBoxed
                          : circled        ? Decor::Circled
                          : boxed          ? Decor::Boxed
                                           : Decor::Undecorated);
        }
        d.flags.push_back(std::move(row));
    }
    return d;
}

Weight weight_of(const GTPattern& p) {
    const int r = p.rank();
    Weight w(static_cast<std::size_t>(r + 1));
    w[0] = p.row_sum(r);
    for (int k = 1; k <= r; ++k) w[k] = p.row_sum(r - k) - p.row_sum(r - k + 1);
    return w;
}

bool interleaves(const Weight& top_row, const Weight& mu) {
    if (mu.size() + 1 != top_row.size()) return false;
    for (std::size_t j = 0; j < mu.size(); ++j)
        if (mu[j] > top_row[j] || mu[j] < top_row[j + 1]) return false;
    return true;
}

std::vector<Component> mu_components(const Weight& top_row) {
    std::vector<Component> out;
    if (top_row.size() < 2) return out;
    // Patterns come sorted by second row first, so each component is contiguous.
    for (const auto& p : enumerate_patterns(top_row)) {
        const auto& mu = p.rows()[1];
        if (out.empty() || out.back().mu != mu) out.push_back(Component{mu, {}});
        out.back().vertices.push_back(p);
    }
    std::reverse(out.begin(), out.end());
    return out;
}

GTPattern lowest_vertex(const Weight& top_row, const Weight& mu) {
    if (!interleaves(top_row, mu)) throw InvalidArgument("mu does not interleave with the top row");
    std::vector<std::vector<int>> rows{top_row};
    for (std::size_t len = mu.size(); len >= 1; --len) rows.emplace_back(mu.end() - static_cast<long>(len), mu.end());
    return GTPattern(std::move(rows));
}

bool is_demazure_member(const GammaArray& g, int w_length) {
    const int total = binomial2(g.rank() + 1);
    for (int k = w_length + 1; k <= total; ++k)
        if (g.bzl(k) != 0) return false;
    return true;
}

std::vector<GTPattern> demazure_members(const Weight& top_row, int w_length) {
    const int r = static_cast<int>(top_row.size()) - 1;
    if (w_length < 0 || w_length > binomial2(r + 1)) throw InvalidArgument("w_length out of range");
    std::vector<GTPattern> out;
    for (auto& p : enumerate_patterns(top_row))
        if (is_demazure_member(gamma_of(p), w_length)) out.push_back(std::move(p));
    return out;
}

std::map<std::pair<int, int>, int> lusztig_data_of(const GammaArray& g) {
    const int r = g.rank();
    std::map<std::pair<int, int>, int> m;
    for (int h = 1; h <= r; ++h)
        for (int k = h; k <= r; ++k) m[{r + 1 - k, r + 2 - h}] = g.at(h, k) - g.at(h, k + 1);
    return m;
}

Weight reversed(const Weight& w) { return Weight(w.rbegin(), w.rend()); }

nlohmann::json pattern_json(const GTPattern& p) {
    nlohmann::json j;
    j["rows"] = p.rows();
    j["gamma"] = gamma_of(p).entries();
    nlohmann::json decs = nlohmann::json::array();
    for (const auto& row : decorations(p).flags) {
        nlohmann::json jr = nlohmann::json::array();
        for (auto d : row) jr.push_back(decor_name(d));
        decs.push_back(jr);
    }
    j["decorations"] = decs;
    j["weight"] = weight_of(p);
    return j;
}

} // namespace metatok
