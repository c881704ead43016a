#pragma once

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

#include "canbase/errors.hpp"
#include "canbase/flags.hpp"
#include "canbase/laurent.hpp"
#include "canbase/matrix.hpp"
#include "canbase/rational.hpp"
#include "canbase/typea.hpp"

namespace canbase {

/// Kostant partitions of v sorted ascending by orbit dimension; ties broken
/// by descending lexicographic comparison of the multiplicity tuples. Any
/// refinement of the dimension order would do mathematically; this one is
/// fixed so output is deterministic.
inline std::vector<kostant_partition> pipeline_order(const dim_vector& v) {
    std::vector<kostant_partition> kps = enumerate_kp(v);
    std::vector<long long> dims;
    dims.reserve(kps.size());
    for (const auto& c : kps) dims.push_back(orbit_dim(c, v));
    std::vector<std::size_t> idx(kps.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        if (dims[a] != dims[b]) return dims[a] < dims[b];
        return kps[a].mult() > kps[b].mult();
    });
    std::vector<kostant_partition> out;
    out.reserve(kps.size());
    for (std::size_t i : idx) out.push_back(std::move(kps[i]));
    return out;
}

struct ldlt_result {
    matrix<int_laurent> unit_lower; // L, unitriangular
    std::vector<rat_func> diag;     // D
};

/// LDLT by the Gram-Schmidt recurrences
///   D_c      = Psi_cc  - sum_{c' < c} L_{cc'}^2 D_{c'}
///   L_{cc''} = (Psi_{cc''} - sum_{c' < c''} L_{cc'} L_{c''c'} D_{c'}) / D_{c''}.
/// L entries are guaranteed Laurent; a failed conversion or zero pivot means
/// the input matrix or its ordering is inconsistent.
inline ldlt_result ldlt(const matrix<rat_func>& psi) {
    const std::size_t n = psi.rows();
    matrix<rat_func> l_rat = matrix<rat_func>::identity(n);
    std::vector<rat_func> diag(n);
    for (std::size_t c = 0; c < n; ++c) {
        for (std::size_t cc = 0; cc < c; ++cc) {
            rat_func acc = psi(c, cc);
            for (std::size_t k = 0; k < cc; ++k) acc -= l_rat(c, k) * l_rat(cc, k) * diag[k];
            if (diag[cc].is_zero()) throw zero_pivot(cc);
            l_rat(c, cc) = acc / diag[cc];
        }
        rat_func acc = psi(c, c);
        for (std::size_t k = 0; k < c; ++k) acc -= l_rat(c, k) * l_rat(c, k) * diag[k];
        diag[c] = acc;
        if (diag[c].is_zero()) throw zero_pivot(c);
    }
    matrix<int_laurent> unit_lower(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) unit_lower(i, j) = l_rat(i, j).to_laurent();
    return {std::move(unit_lower), std::move(diag)};
}

struct qp_result {
    matrix<int_laurent> q; // bar invariant, entries in Z[v + v^{-1}]
    matrix<int_laurent> p; // strictly negative exponents below the diagonal
};

/// Row elimination splitting a unitriangular L into L = QP. Rows are
/// processed top down; within row c the columns are swept from c-1 down to 1.
/// Row c' of P has support only in columns <= c', so the right-to-left sweep
/// never touches a column it has already finished.
inline qp_result qp_split(const matrix<int_laurent>& l) {
    const std::size_t n = l.rows();
    matrix<int_laurent> q = matrix<int_laurent>::identity(n);
    matrix<int_laurent> p = matrix<int_laurent>::identity(n);
    for (std::size_t c = 0; c < n; ++c) {
        std::vector<int_laurent> row(c);
        for (std::size_t j = 0; j < c; ++j) row[j] = l(c, j);
        for (std::size_t j = c; j-- > 0;) {
            auto [invariant, negative] = bar_split(row[j]);
            q(c, j) = invariant;
            if (!invariant.is_zero())
                for (std::size_t k = 0; k < j; ++k) row[k] -= invariant * p(j, k);
            row[j] = negative;
        }
        for (std::size_t j = 0; j < c; ++j) p(c, j) = row[j];
    }
    return {std::move(q), std::move(p)};
}

/// Solves Psi x = rhs from the factors: forward substitution, diagonal
/// scaling, back substitution. Psi^{-1} is never materialized.
inline std::vector<rat_func> solve_psi(const matrix<int_laurent>& l, const std::vector<rat_func>& diag,
                                       const std::vector<rat_func>& rhs) {
    const std::size_t n = diag.size();
    std::vector<rat_func> x(rhs);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < i; ++j) x[i] -= rat_func(l(i, j)) * x[j];
    for (std::size_t i = 0; i < n; ++i) {
        if (diag[i].is_zero()) throw zero_pivot(i);
        x[i] /= diag[i];
    }
    for (std::size_t i = n; i-- > 0;)
        for (std::size_t j = i + 1; j < n; ++j) x[i] -= rat_func(l(j, i)) * x[j];
    return x;
}

/// The full linear-algebra state of one weight: the basis order, the Gram
/// matrix of the monomial basis, and the factors Psi = L D L^T, L = Q P.
struct triangular_system {
    dim_vector dimvec;
    std::vector<kostant_partition> order;
    matrix<rat_func> psi;
    matrix<int_laurent> l;
    std::vector<rat_func> d;
    matrix<int_laurent> q;
    matrix<int_laurent> p;
};

/// Gram matrix of the form on the canonical basis, Omega = P D P^T, so that
/// Psi = Q Omega Q^T. Diagnostic only; nothing downstream consumes it.
inline matrix<rat_func> omega_matrix(const triangular_system& sys) {
    const std::size_t n = sys.d.size();
    matrix<rat_func> omega(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                omega(i, j) += rat_func(sys.p(i, k)) * sys.d[k] * rat_func(sys.p(j, k));
    return omega;
}

} // namespace canbase
