#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "canbase/decomp.hpp"
#include "canbase/flags.hpp"
#include "canbase/laurent.hpp"
#include "canbase/matrix.hpp"
#include "canbase/rational.hpp"
#include "canbase/typea.hpp"

namespace canbase {

inline constexpr std::uint64_t default_max_summands = 10'000'000;

/// Everything derived from a dimension vector that the bilinear form needs:
/// the pipeline-ordered Kostant partitions, their monomial shapes, flag
/// levels, zero patterns, pattern dimensions and parabolic data. Immutable
/// after construction and freely shareable across threads.
struct pairing_context {
    dim_vector dimvec;
    std::vector<kostant_partition> order;
    std::vector<monomial_shape> shapes;
    std::vector<level_assignment> levels;
    std::vector<zero_pattern> patterns;
    std::vector<long long> dims_r;
    std::vector<parabolic_info> parabolics;
    std::vector<long long> orbit_dims;

    std::size_t size() const { return order.size(); }

    static pairing_context build(const dim_vector& v) {
        pairing_context ctx;
        ctx.dimvec = v;
        ctx.order = pipeline_order(v);
        ctx.shapes.reserve(ctx.order.size());
        for (const auto& c : ctx.order) {
            ctx.shapes.push_back(reineke_exponents(c, v.size()));
            ctx.levels.push_back(levels_from_shape(ctx.shapes.back(), v));
            ctx.patterns.push_back(pattern_from_levels(ctx.levels.back()));
            ctx.dims_r.push_back(ctx.patterns.back().dim());
            ctx.parabolics.push_back(parabolic_data(ctx.shapes.back(), v));
            ctx.orbit_dims.push_back(gl_dim(v) - ctx.parabolics.back().dim_p + ctx.dims_r.back());
        }
        return ctx;
    }
};

/// Assembles the graded Hom dimension from an already computed Weyl sum.
/// For an ambient product of general linear groups the equivariant Poincare
/// series of G/B closes to v^{dim G/B} (1-v^{-2})^{-rank}, which cancels the
/// v^{-dim G/B} prefactor; what is left is
///   v^{-dim V1 - dim V2} (1-v^{-2})^{-rank} / (fp1 fp2) * weyl_sum
/// with fp_i the Poincare polynomial of P_i/B.
inline rat_func graded_hom_dim(const int_laurent& weyl_sum, long long dim_v1, long long dim_v2,
                               int ambient_rank, const int_laurent& fp1, const int_laurent& fp2) {
    const int_laurent num = weyl_sum.shifted(static_cast<int>(-dim_v1 - dim_v2));
    const int_laurent one_minus = parse_laurent("1-v^-2");
    return rat_func(num, one_minus.pow(static_cast<unsigned>(ambient_rank)) * fp1 * fp2);
}

/// Fully generic form: enumerates the Weyl group of the ambient group
/// (a product of symmetric groups of the given degrees) and folds
/// v^{2(l + extra)} before applying the prefactor. `extra` receives the
/// one-line permutation tuple u and must return dim(V1 cap {}^w V2) for
/// w = u^{-1}; summing over u is the same as summing over w since inversion
/// is a length-preserving bijection.
template <typename ExtraFn>
rat_func graded_hom_dim(const std::vector<int>& weyl_degrees, ExtraFn&& extra, long long dim_v1,
                        long long dim_v2, int ambient_rank, const int_laurent& fp1,
                        const int_laurent& fp2, unsigned workers = 1,
                        std::uint64_t max_summands = default_max_summands) {
    const int_laurent sum = weyl_power_sum(weyl_degrees, extra, workers, max_summands);
    return graded_hom_dim(sum, dim_v1, dim_v2, ambient_rank, fp1, fp2);
}

namespace detail {

/// Allowed positions per arrow, flattened for the hot loop.
struct pattern_positions {
    // One entry per arrow: list of (row, col) allowed in the pattern.
    std::vector<std::vector<std::pair<int, int>>> by_arrow;

    explicit pattern_positions(const zero_pattern& p) {
        by_arrow.resize(static_cast<std::size_t>(p.arrow_count()));
        for (int a = 0; a < p.arrow_count(); ++a) {
            const auto& m = p.arrow(a);
            for (std::size_t r = 0; r < m.rows(); ++r)
                for (std::size_t c = 0; c < m.cols(); ++c)
                    if (m(r, c)) by_arrow[static_cast<std::size_t>(a)].emplace_back(static_cast<int>(r), static_cast<int>(c));
        }
    }
};

} // namespace detail

/// One entry of the Gram matrix of the bilinear form at monomials:
///   Psi_{cc'} = v^{-dim R - dim R'} (1-v^{-2})^{-sum v_i} / ([a]! [a']!)
///               * sum_{w in S_v} v^{2(l(w) + dim R cap {}^w R')}.
inline rat_func psi_entry(const pairing_context& ctx, std::size_t i, std::size_t j,
                          unsigned workers = 1, std::uint64_t max_summands = default_max_summands) {
    const detail::pattern_positions pos(ctx.patterns[i]);
    const zero_pattern& other = ctx.patterns[j];
    auto extra = [&pos, &other](const std::vector<std::vector<int>>& u) {
        long long d = 0;
        for (std::size_t a = 0; a < pos.by_arrow.size(); ++a) {
            const auto& m = other.arrow(static_cast<int>(a));
            const auto& ucol = u[a];
            const auto& urow = u[a + 1];
            for (const auto& [r, c] : pos.by_arrow[a])
                d += m(static_cast<std::size_t>(urow[static_cast<std::size_t>(r)]),
                       static_cast<std::size_t>(ucol[static_cast<std::size_t>(c)]));
        }
        return d;
    };
    return graded_hom_dim(ctx.dimvec.entries(), extra, ctx.dims_r[i], ctx.dims_r[j],
                          ctx.dimvec.total(), ctx.parabolics[i].flag_poincare,
                          ctx.parabolics[j].flag_poincare, workers, max_summands);
}

/// The symmetric Gram matrix in pipeline order.
inline matrix<rat_func> psi_matrix(const pairing_context& ctx, unsigned workers = 1,
                                   std::uint64_t max_summands = default_max_summands) {
    const std::size_t n = ctx.size();
    matrix<rat_func> psi(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j <= i; ++j) {
            psi(i, j) = psi_entry(ctx, i, j, workers, max_summands);
            if (j != i) psi(j, i) = psi(i, j);
        }
    return psi;
}

/// Runs the whole linear-algebra pipeline for one weight.
inline triangular_system build_triangular_system(const pairing_context& ctx, unsigned workers = 1,
                                                 std::uint64_t max_summands = default_max_summands) {
    triangular_system sys;
    sys.dimvec = ctx.dimvec;
    sys.order = ctx.order;
    sys.psi = psi_matrix(ctx, workers, max_summands);
    ldlt_result f = ldlt(sys.psi);
    sys.l = std::move(f.unit_lower);
    sys.d = std::move(f.diag);
    qp_result qp = qp_split(sys.l);
    sys.q = std::move(qp.q);
    sys.p = std::move(qp.p);
    return sys;
}

} // namespace canbase
