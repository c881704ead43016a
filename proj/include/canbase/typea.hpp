#pragma once

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "canbase/laurent.hpp"

namespace canbase {

/// Dimension vector v = (v_1, ..., v_n) of the equioriented A_n quiver.
/// Vertices are 0-based in code and 1-based in all emitted output.
class dim_vector {
public:
    dim_vector() = default;

    explicit dim_vector(std::vector<int> entries) : entries_(std::move(entries)) {
        if (entries_.empty()) throw std::invalid_argument("dimension vector must be nonempty");
        for (int e : entries_)
            if (e < 0) throw std::invalid_argument("dimension vector entries must be nonnegative");
    }

    /// Parses "1,2,1".
    static dim_vector parse(std::string_view text) {
        std::vector<int> entries;
        std::size_t pos = 0;
        while (pos <= text.size()) {
            const std::size_t comma = std::min(text.find(',', pos), text.size());
            int value = 0;
            const auto [ptr, ec] =
                std::from_chars(text.data() + pos, text.data() + comma, value);
            if (ec != std::errc() || ptr != text.data() + comma)
                throw std::invalid_argument("bad dimension vector: " + std::string(text));
            entries.push_back(value);
            pos = comma + 1;
            if (comma == text.size()) break;
        }
        return dim_vector(entries);
    }

    int size() const { return static_cast<int>(entries_.size()); }
    int operator[](int j) const { return entries_[static_cast<std::size_t>(j)]; }
    int total() const { return std::accumulate(entries_.begin(), entries_.end(), 0); }
    const std::vector<int>& entries() const { return entries_; }

    bool operator==(const dim_vector&) const = default;

private:
    std::vector<int> entries_;
};

/// Positive root e_first + e_{first+1} + ... + e_last, 0-based inclusive.
struct positive_root {
    int first;
    int last;
    bool operator==(const positive_root&) const = default;
};

/// Positive roots in the total order induced by the adapted reduced word:
/// alpha_{ij} precedes alpha_{i'j'} iff i > i', or i = i' and j > j'.
inline std::vector<positive_root> positive_roots_ordered(int n) {
    std::vector<positive_root> roots;
    roots.reserve(static_cast<std::size_t>(n) * (n + 1) / 2);
    for (int first = n - 1; first >= 0; --first)
        for (int last = n - 1; last >= first; --last) roots.push_back({first, last});
    return roots;
}

/// Multiplicity function on the positive roots, stored as the tuple of
/// multiplicities in root order.
class kostant_partition {
public:
    kostant_partition() = default;
    explicit kostant_partition(std::vector<int> mult) : mult_(std::move(mult)) {}

    int size() const { return static_cast<int>(mult_.size()); }
    int operator[](int r) const { return mult_[static_cast<std::size_t>(r)]; }
    const std::vector<int>& mult() const { return mult_; }

    dim_vector weight(int n) const {
        std::vector<int> w(static_cast<std::size_t>(n), 0);
        const auto roots = positive_roots_ordered(n);
        for (std::size_t r = 0; r < roots.size(); ++r)
            for (int j = roots[r].first; j <= roots[r].last; ++j)
                w[static_cast<std::size_t>(j)] += mult_[r];
        return dim_vector(w);
    }

    bool operator==(const kostant_partition&) const = default;

private:
    std::vector<int> mult_;
};

/// All Kostant partitions of v, each exactly once. Enumeration recurses over
/// the roots in root order, largest multiplicity first; the pipeline order is
/// imposed later from orbit dimensions.
inline std::vector<kostant_partition> enumerate_kp(const dim_vector& v) {
    const int n = v.size();
    const auto roots = positive_roots_ordered(n);
    std::vector<kostant_partition> out;
    std::vector<int> mult(roots.size(), 0);
    std::vector<int> remaining = v.entries();

    auto rec = [&](auto&& self, std::size_t r) -> void {
        if (r == roots.size()) {
            if (std::all_of(remaining.begin(), remaining.end(), [](int x) { return x == 0; }))
                out.emplace_back(mult);
            return;
        }
        const auto [first, last] = roots[r];
        int cap = remaining[static_cast<std::size_t>(first)];
        for (int j = first; j <= last; ++j)
            cap = std::min(cap, remaining[static_cast<std::size_t>(j)]);
        for (int m = cap; m >= 0; --m) {
            mult[r] = m;
            for (int j = first; j <= last; ++j) remaining[static_cast<std::size_t>(j)] -= m;
            self(self, r + 1);
            for (int j = first; j <= last; ++j) remaining[static_cast<std::size_t>(j)] += m;
        }
        mult[r] = 0;
    };
    rec(rec, 0);
    return out;
}

/// Step sequence of the monomial basis: the concatenation
/// (n), (n-1, n), ..., (1, 2, ..., n) with 0-based vertex labels.
inline std::vector<int> reineke_word(int n) {
    std::vector<int> word;
    word.reserve(static_cast<std::size_t>(n) * (n + 1) / 2);
    for (int row = n - 1; row >= 0; --row)
        for (int j = row; j < n; ++j) word.push_back(j);
    return word;
}

/// A word together with divided-power exponents of equal length.
struct monomial_shape {
    std::vector<int> word;
    std::vector<int> exps;
    bool operator==(const monomial_shape&) const = default;
};

/// Exponent sequence paired with reineke_word: the block for start row i is
/// the suffix-sum tuple (m_{i,i} + ... + m_{i,n}, m_{i,i+1} + ... + m_{i,n},
/// ..., m_{i,n}).
inline monomial_shape reineke_exponents(const kostant_partition& c, int n) {
    const auto roots = positive_roots_ordered(n);
    monomial_shape shape;
    shape.word = reineke_word(n);
    shape.exps.reserve(shape.word.size());
    std::size_t r = 0;
    for (int row = n - 1; row >= 0; --row) {
        // Roots starting at `row` occupy mult positions r .. r + (n-1-row)
        // in the order alpha_{row,n-1}, ..., alpha_{row,row}.
        const int span = n - row;
        std::vector<int> suffix(static_cast<std::size_t>(span), 0);
        for (int k = 0; k < span; ++k) {
            // roots[r + k] = alpha_{row, n-1-k}
            const int m = c[static_cast<int>(r) + k];
            for (int t = span - 1 - k; t >= 0; --t) suffix[static_cast<std::size_t>(t)] += m;
        }
        for (int t = 0; t < span; ++t) shape.exps.push_back(suffix[static_cast<std::size_t>(t)]);
        r += static_cast<std::size_t>(span);
    }
    return shape;
}

inline bool shape_has_weight(const monomial_shape& shape, const dim_vector& v) {
    if (shape.word.size() != shape.exps.size()) return false;
    std::vector<int> sums(static_cast<std::size_t>(v.size()), 0);
    for (std::size_t k = 0; k < shape.word.size(); ++k) {
        const int j = shape.word[k];
        if (j < 0 || j >= v.size() || shape.exps[k] < 0) return false;
        sums[static_cast<std::size_t>(j)] += shape.exps[k];
    }
    return sums == v.entries();
}

} // namespace canbase
