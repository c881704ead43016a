#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <thread>
#include <utility>
#include <vector>

#include "canbase/errors.hpp"
#include "canbase/laurent.hpp"
#include "canbase/matrix.hpp"
#include "canbase/typea.hpp"

namespace canbase {

/// Per vertex, the flag level of each coordinate position. Level k means the
/// position spans the k-th step of the flag, i.e. it survives in F^{k-1} but
/// not in F^k. Levels are weakly increasing within a vertex: with the Borel
/// of lower triangular matrices, the B-stable descending flags are spanned by
/// trailing coordinates, so the earliest-vanishing levels sit in the leading
/// positions.
struct level_assignment {
    std::vector<std::vector<int>> by_vertex;
    bool operator==(const level_assignment&) const = default;
};

/// Pre: shape has weight v. Scanning the steps k with word_k = j in
/// increasing order, assigns level k to the next exps_k unassigned positions
/// of vertex j, starting from position 1.
inline level_assignment levels_from_shape(const monomial_shape& shape, const dim_vector& v) {
    level_assignment levels;
    levels.by_vertex.resize(static_cast<std::size_t>(v.size()));
    for (std::size_t k = 0; k < shape.word.size(); ++k) {
        auto& at_vertex = levels.by_vertex[static_cast<std::size_t>(shape.word[k])];
        at_vertex.insert(at_vertex.end(), static_cast<std::size_t>(shape.exps[k]),
                         static_cast<int>(k) + 1);
    }
    return levels;
}

/// Coordinate subspace of the representation space R_v: per arrow j -> j+1,
/// a 0/1 matrix of shape v_{j+1} x v_j marking the allowed entries.
class zero_pattern {
public:
    zero_pattern() = default;
    explicit zero_pattern(std::vector<matrix<std::uint8_t>> arrows) : arrows_(std::move(arrows)) {}

    static zero_pattern full(const dim_vector& v) { return constant(v, 1); }
    static zero_pattern empty(const dim_vector& v) { return constant(v, 0); }

    int arrow_count() const { return static_cast<int>(arrows_.size()); }
    const matrix<std::uint8_t>& arrow(int j) const { return arrows_[static_cast<std::size_t>(j)]; }
    matrix<std::uint8_t>& arrow(int j) { return arrows_[static_cast<std::size_t>(j)]; }

    long long dim() const {
        long long d = 0;
        for (const auto& m : arrows_)
            for (std::size_t r = 0; r < m.rows(); ++r)
                for (std::size_t c = 0; c < m.cols(); ++c) d += m(r, c);
        return d;
    }

    bool operator==(const zero_pattern&) const = default;

private:
    std::vector<matrix<std::uint8_t>> arrows_;

    static zero_pattern constant(const dim_vector& v, std::uint8_t fill) {
        std::vector<matrix<std::uint8_t>> arrows;
        arrows.reserve(static_cast<std::size_t>(std::max(v.size() - 1, 0)));
        for (int j = 0; j + 1 < v.size(); ++j)
            arrows.emplace_back(static_cast<std::size_t>(v[j + 1]), static_cast<std::size_t>(v[j]),
                                fill);
        return zero_pattern(std::move(arrows));
    }
};

/// Representations x with x(F^k) inside F^k: entry (r, c) on arrow j -> j+1
/// is allowed iff level(j+1, r) >= level(j, c).
inline zero_pattern pattern_from_levels(const level_assignment& levels) {
    std::vector<matrix<std::uint8_t>> arrows;
    for (std::size_t j = 0; j + 1 < levels.by_vertex.size(); ++j) {
        const auto& src = levels.by_vertex[j];
        const auto& dst = levels.by_vertex[j + 1];
        matrix<std::uint8_t> m(dst.size(), src.size(), 0);
        for (std::size_t r = 0; r < dst.size(); ++r)
            for (std::size_t c = 0; c < src.size(); ++c)
                if (dst[r] >= src[c]) m(r, c) = 1;
        arrows.push_back(std::move(m));
    }
    return zero_pattern(std::move(arrows));
}

/// Element of S_v = prod_j S_{v_j}: one 0-based one-line permutation per
/// vertex, together with the total inversion count.
struct weyl_element {
    std::vector<std::vector<int>> perms;
    long long length = 0;
    bool operator==(const weyl_element&) const = default;
};

inline long long inversion_count(std::span<const int> perm) {
    long long inv = 0;
    for (std::size_t i = 0; i < perm.size(); ++i)
        for (std::size_t j = i + 1; j < perm.size(); ++j)
            if (perm[i] > perm[j]) ++inv;
    return inv;
}

inline std::vector<int> inverse_permutation(std::span<const int> perm) {
    std::vector<int> inv(perm.size());
    for (std::size_t i = 0; i < perm.size(); ++i) inv[static_cast<std::size_t>(perm[i])] = static_cast<int>(i);
    return inv;
}

/// Lexicographic unranking via the factorial number system.
inline std::vector<int> unrank_permutation(int n, std::uint64_t index) {
    std::vector<int> pool(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) pool[static_cast<std::size_t>(i)] = i;
    std::vector<std::uint64_t> fact(static_cast<std::size_t>(n) + 1, 1);
    for (int i = 1; i <= n; ++i)
        fact[static_cast<std::size_t>(i)] = fact[static_cast<std::size_t>(i - 1)] * static_cast<std::uint64_t>(i);
    std::vector<int> perm;
    perm.reserve(static_cast<std::size_t>(n));
    for (int i = n; i >= 1; --i) {
        const std::uint64_t f = fact[static_cast<std::size_t>(i - 1)];
        const auto digit = static_cast<std::size_t>(index / f);
        index %= f;
        perm.push_back(pool[digit]);
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(digit));
    }
    return perm;
}

/// |S_v| as a big integer (factorials overflow fast).
inline bigint weyl_count(const dim_vector& v) {
    bigint total(1);
    for (int j = 0; j < v.size(); ++j)
        for (int k = 2; k <= v[j]; ++k) total *= k;
    return total;
}

/// Entry (r, c) on arrow j -> j+1 allowed iff the source pattern allows
/// (w_{j+1}^{-1}(r), w_j^{-1}(c)).
inline zero_pattern conjugate_pattern(const zero_pattern& p, const weyl_element& w) {
    zero_pattern out = p;
    for (int a = 0; a < p.arrow_count(); ++a) {
        const auto& src = p.arrow(a);
        auto& dst = out.arrow(a);
        const auto winv_col = inverse_permutation(w.perms[static_cast<std::size_t>(a)]);
        const auto winv_row = inverse_permutation(w.perms[static_cast<std::size_t>(a) + 1]);
        for (std::size_t r = 0; r < src.rows(); ++r)
            for (std::size_t c = 0; c < src.cols(); ++c)
                dst(r, c) = src(static_cast<std::size_t>(winv_row[r]), static_cast<std::size_t>(winv_col[c]));
    }
    return out;
}

/// Pre: same dimension vector.
inline long long intersection_dim(const zero_pattern& p1, const zero_pattern& p2) {
    long long d = 0;
    for (int a = 0; a < p1.arrow_count(); ++a) {
        const auto& m1 = p1.arrow(a);
        const auto& m2 = p2.arrow(a);
        for (std::size_t r = 0; r < m1.rows(); ++r)
            for (std::size_t c = 0; c < m1.cols(); ++c) d += m1(r, c) & m2(r, c);
    }
    return d;
}

/// Streams all |S_v| elements with their lengths.
template <typename F>
void for_each_weyl(const dim_vector& v, F&& fn) {
    weyl_element w;
    w.perms.resize(static_cast<std::size_t>(v.size()));
    for (int j = 0; j < v.size(); ++j) {
        auto& perm = w.perms[static_cast<std::size_t>(j)];
        perm.resize(static_cast<std::size_t>(v[j]));
        for (int i = 0; i < v[j]; ++i) perm[static_cast<std::size_t>(i)] = i;
    }
    std::vector<long long> inv(static_cast<std::size_t>(v.size()), 0);
    while (true) {
        w.length = 0;
        for (long long l : inv) w.length += l;
        fn(static_cast<const weyl_element&>(w));
        int j = v.size() - 1;
        for (; j >= 0; --j) {
            auto& perm = w.perms[static_cast<std::size_t>(j)];
            if (std::next_permutation(perm.begin(), perm.end())) {
                inv[static_cast<std::size_t>(j)] = inversion_count(perm);
                break;
            }
            inv[static_cast<std::size_t>(j)] = 0;
        }
        if (j < 0) return;
    }
}

/// Parabolic stabilizer of the level flag: its dimension and the Poincare
/// polynomial of P/B, which is the quantum factorial of the exponents.
struct parabolic_info {
    long long dim_p = 0;
    int_laurent flag_poincare;
    bool operator==(const parabolic_info&) const = default;
};

inline parabolic_info parabolic_data(const monomial_shape& shape, const dim_vector& v) {
    const level_assignment levels = levels_from_shape(shape, v);
    parabolic_info info;
    for (int j = 0; j < v.size(); ++j) {
        const auto& lv = levels.by_vertex[static_cast<std::size_t>(j)];
        const long long m = v[j];
        info.dim_p += m * (m + 1) / 2;
        // Blocks are the runs of equal level.
        std::size_t i = 0;
        while (i < lv.size()) {
            std::size_t run = i;
            while (run < lv.size() && lv[run] == lv[i]) ++run;
            const long long b = static_cast<long long>(run - i);
            info.dim_p += b * (b - 1) / 2;
            i = run;
        }
    }
    info.flag_poincare = quantum_factorial(shape.exps);
    return info;
}

inline long long gl_dim(const dim_vector& v) {
    long long d = 0;
    for (int j = 0; j < v.size(); ++j) d += static_cast<long long>(v[j]) * v[j];
    return d;
}

/// dim GL_v - dim P + dim R, all derived from the partition's monomial data.
inline long long orbit_dim(const kostant_partition& c, const dim_vector& v) {
    const monomial_shape shape = reineke_exponents(c, v.size());
    const level_assignment levels = levels_from_shape(shape, v);
    const zero_pattern pattern = pattern_from_levels(levels);
    return gl_dim(v) - parabolic_data(shape, v).dim_p + pattern.dim();
}

namespace detail {

template <typename TermFn>
void weyl_sum_chunk(const std::vector<int>& degrees, std::uint64_t begin, std::uint64_t count,
                    TermFn& term, std::vector<bigint>& acc) {
    const std::size_t k = degrees.size();
    std::vector<std::vector<int>> perms(k);
    std::vector<long long> inv(k, 0);
    // Mixed-radix unranking of the start tuple; the last vertex cycles fastest.
    std::uint64_t index = begin;
    std::vector<std::uint64_t> fact(k, 1);
    for (std::size_t j = 0; j < k; ++j)
        for (int i = 2; i <= degrees[j]; ++i) fact[j] *= static_cast<std::uint64_t>(i);
    for (std::size_t j = k; j-- > 0;) {
        perms[j] = unrank_permutation(degrees[j], index % fact[j]);
        inv[j] = inversion_count(perms[j]);
        index /= fact[j];
    }
    for (std::uint64_t step = 0; step < count; ++step) {
        long long e = 0;
        for (long long l : inv) e += l;
        e += term(perms);
        const auto slot = static_cast<std::size_t>(e);
        if (acc.size() <= slot) acc.resize(slot + 1, bigint(0));
        acc[slot] += 1;
        for (std::size_t j = k; j-- > 0;) {
            if (std::next_permutation(perms[j].begin(), perms[j].end())) {
                inv[j] = inversion_count(perms[j]);
                break;
            }
            inv[j] = 0;
        }
    }
}

} // namespace detail

/// The combinatorial core of the pairing formula: the sum over the product
/// of symmetric groups S_{d_1} x ... x S_{d_k} of v^{2(l(u) + term(u))}.
/// term receives the one-line permutation tuple and must be a pure function,
/// so the fold is a commutative reduction and may be partitioned across
/// workers.
template <typename TermFn>
int_laurent weyl_power_sum(const std::vector<int>& degrees, TermFn term, unsigned workers = 1,
                           std::uint64_t max_summands = 10'000'000) {
    bigint big_total(1);
    for (int d : degrees)
        for (int i = 2; i <= d; ++i) big_total *= i;
    if (big_total > max_summands) {
        const bigint clamped = std::min<bigint>(big_total, ~0ULL);
        throw resource_limit(clamped.convert_to<unsigned long long>(), max_summands);
    }
    const auto total = big_total.convert_to<std::uint64_t>();

    std::vector<std::vector<bigint>> partial;
    if (workers <= 1 || total < 1024) {
        partial.resize(1);
        detail::weyl_sum_chunk(degrees, 0, total, term, partial[0]);
    } else {
        const auto nthreads = static_cast<std::uint64_t>(workers);
        partial.resize(static_cast<std::size_t>(nthreads));
        std::vector<std::thread> threads;
        threads.reserve(static_cast<std::size_t>(nthreads));
        const std::uint64_t base = total / nthreads;
        const std::uint64_t rem = total % nthreads;
        for (std::uint64_t t = 0; t < nthreads; ++t) {
            const std::uint64_t lo = t * base + std::min(t, rem);
            const std::uint64_t count = base + (t < rem ? 1 : 0);
            threads.emplace_back([&, t, lo, count] {
                TermFn local = term;
                detail::weyl_sum_chunk(degrees, lo, count, local, partial[static_cast<std::size_t>(t)]);
            });
        }
        for (auto& th : threads) th.join();
    }

    int_laurent sum;
    for (const auto& acc : partial)
        for (std::size_t e = 0; e < acc.size(); ++e)
            if (acc[e] != 0) sum += int_laurent::monomial(acc[e], 2 * static_cast<int>(e));
    return sum;
}

} // namespace canbase
