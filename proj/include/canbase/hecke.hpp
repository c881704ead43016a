#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "canbase/decomp.hpp"
#include "canbase/errors.hpp"
#include "canbase/pairing.hpp"

namespace canbase {

/// Block data of the semisimple element with one q-power eigenvalue chain:
/// block t of size v_t carries eigenvalue e q_0^{t-1}, the centralizer is
/// GL_v embedded block diagonally in GL_n, and the fixed-point nilpotent
/// locus is the block subdiagonal, which is exactly the representation space
/// R_v of the A_n quiver. Neither e nor q_0 is represented: as long as q_0
/// is not a root of unity only the block structure matters.
struct hecke_context {
    dim_vector dimvec;
    int n = 0;                                      // sum of the blocks
    std::vector<int> block_offset;                  // 0-based start of each block
    std::vector<std::pair<int, int>> subdiagonal;   // 0-based (row, col) of the locus

    static hecke_context build(const dim_vector& v) {
        hecke_context ctx;
        ctx.dimvec = v;
        ctx.block_offset.reserve(static_cast<std::size_t>(v.size()));
        int offset = 0;
        for (int j = 0; j < v.size(); ++j) {
            ctx.block_offset.push_back(offset);
            offset += v[j];
        }
        ctx.n = offset;
        for (int j = 0; j + 1 < v.size(); ++j)
            for (int r = 0; r < v[j + 1]; ++r)
                for (int c = 0; c < v[j]; ++c)
                    ctx.subdiagonal.emplace_back(ctx.block_offset[static_cast<std::size_t>(j) + 1] + r,
                                                 ctx.block_offset[static_cast<std::size_t>(j)] + c);
        return ctx;
    }
};

/// Subspace of the fixed-point locus, as a subset of the subdiagonal
/// coordinate positions of gl_n.
struct gln_pattern {
    std::vector<std::pair<int, int>> positions; // 0-based global (row, col)
    long long dim() const { return static_cast<long long>(positions.size()); }
    bool operator==(const gln_pattern&) const = default;
};

/// Views a quiver zero pattern inside gl_n: the allowed entry (r, c) on
/// arrow j -> j+1 lands at global position (offset_{j+1} + r, offset_j + c).
inline gln_pattern embed_pattern(const zero_pattern& p, const hecke_context& ctx) {
    gln_pattern out;
    for (int a = 0; a < p.arrow_count(); ++a) {
        const auto& m = p.arrow(a);
        for (std::size_t r = 0; r < m.rows(); ++r)
            for (std::size_t c = 0; c < m.cols(); ++c)
                if (m(r, c))
                    out.positions.emplace_back(ctx.block_offset[static_cast<std::size_t>(a) + 1] + static_cast<int>(r),
                                               ctx.block_offset[static_cast<std::size_t>(a)] + static_cast<int>(c));
    }
    return out;
}

/// {}^w n cap N for the strictly lower triangular n of the lower triangular
/// Borel: the subdiagonal positions (r, c) with w^{-1}(r) > w^{-1}(c).
/// w is a 0-based one-line permutation of {0..n-1}.
inline gln_pattern wn_pattern(const std::vector<int>& w, const hecke_context& ctx) {
    const std::vector<int> winv = inverse_permutation(w);
    gln_pattern out;
    for (const auto& [r, c] : ctx.subdiagonal)
        if (winv[static_cast<std::size_t>(r)] > winv[static_cast<std::size_t>(c)])
            out.positions.push_back({r, c});
    return out;
}

/// The renormalized graded Hom vector against the Springer-type sheaf:
///   h_c = v^{-dim R_c} (1-v^{-2})^{-n} / [a_c]!
///         * sum_{w in S_n} v^{2(l(w) + dim R_c cap {}^w n)}.
/// One entry per Kostant partition, in pipeline order. The coset
/// renormalization has already folded the v^{-dim V2} factor away, which is
/// why the ambient kernel is called with dim V2 = 0 and a trivial second
/// flag factor.
inline std::vector<rat_func> h_vector(const hecke_context& hctx, const pairing_context& ctx,
                                      unsigned workers = 1,
                                      std::uint64_t max_summands = default_max_summands) {
    std::vector<rat_func> h;
    h.reserve(ctx.size());
    const std::vector<int> degrees = {hctx.n};
    for (std::size_t i = 0; i < ctx.size(); ++i) {
        const gln_pattern embedded = embed_pattern(ctx.patterns[i], hctx);
        auto extra = [&embedded](const std::vector<std::vector<int>>& u) {
            const auto& perm = u[0];
            long long d = 0;
            for (const auto& [r, c] : embedded.positions)
                d += perm[static_cast<std::size_t>(r)] > perm[static_cast<std::size_t>(c)];
            return d;
        };
        h.push_back(graded_hom_dim(degrees, extra, ctx.dims_r[i], 0, hctx.n,
                                   ctx.parabolics[i].flag_poincare, int_laurent(1), workers,
                                   max_summands));
    }
    return h;
}

/// F = Q^T Psi^{-1} H. Every entry reduces to a Laurent polynomial; a
/// NotLaurent failure means Psi, Q and H were not computed from the same
/// context.
inline std::vector<int_laurent> f_vector(const triangular_system& sys, const std::vector<rat_func>& h) {
    const std::vector<rat_func> x = solve_psi(sys.l, sys.d, h);
    const std::size_t n = x.size();
    std::vector<int_laurent> f(n);
    for (std::size_t i = 0; i < n; ++i) {
        rat_func acc;
        for (std::size_t j = 0; j < n; ++j)
            if (!sys.q(j, i).is_zero()) acc += rat_func(sys.q(j, i)) * x[j];
        f[i] = acc.to_laurent();
    }
    return f;
}

/// dim L_c = f_c(1).
inline std::vector<bigint> simple_dims(const std::vector<int_laurent>& f) {
    std::vector<bigint> dims;
    dims.reserve(f.size());
    for (const auto& entry : f) dims.push_back(entry.eval_one());
    return dims;
}

/// Composition multiplicities of the standard modules:
/// entry (c, c') = [M_c : L_{c'}] = P_{c'c}(1).
inline matrix<bigint> standard_multiplicities(const triangular_system& sys) {
    const std::size_t n = sys.p.rows();
    matrix<bigint> m(n, n, bigint(0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = sys.p(j, i).eval_one();
    return m;
}

/// Checks the transport identity Psi (Q^{-T} F) = H exactly. Solves the
/// unitriangular system Q^T z = F by back substitution, then multiplies by
/// Psi. Used by diagnostics and tests.
inline bool h_transport_consistent(const triangular_system& sys, const std::vector<rat_func>& h,
                                   const std::vector<int_laurent>& f) {
    const std::size_t n = f.size();
    std::vector<rat_func> z(n);
    for (std::size_t i = n; i-- > 0;) {
        rat_func acc = rat_func(f[i]);
        for (std::size_t j = i + 1; j < n; ++j) acc -= rat_func(sys.q(j, i)) * z[j];
        z[i] = acc;
    }
    for (std::size_t i = 0; i < n; ++i) {
        rat_func acc;
        for (std::size_t j = 0; j < n; ++j) acc += sys.psi(i, j) * z[j];
        if (!(acc == h[i])) return false;
    }
    return true;
}

} // namespace canbase
