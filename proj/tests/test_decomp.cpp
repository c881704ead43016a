#include <gtest/gtest.h>

#include <random>

#include "canbase/decomp.hpp"
#include "canbase/emit.hpp"
#include "canbase/fixtures.hpp"
#include "canbase/pairing.hpp"

using namespace canbase;

namespace {

matrix<rat_func> as_rat(const matrix<int_laurent>& m) {
    matrix<rat_func> out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = rat_func(m(i, j));
    return out;
}

matrix<rat_func> mul(const matrix<rat_func>& a, const matrix<rat_func>& b) {
    matrix<rat_func> out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j)
            for (std::size_t k = 0; k < a.cols(); ++k) out(i, j) += a(i, k) * b(k, j);
    return out;
}

matrix<rat_func> reconstruct_ldlt(const matrix<int_laurent>& l, const std::vector<rat_func>& d) {
    const std::size_t n = d.size();
    matrix<rat_func> ld(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) ld(i, k) = rat_func(l(i, k)) * d[k];
    return mul(ld, as_rat(l).transposed());
}

dim_vector random_small_dimvec(std::mt19937& rng) {
    std::uniform_int_distribution<int> len(1, 3), entry(0, 3);
    while (true) {
        std::vector<int> entries(static_cast<std::size_t>(len(rng)));
        for (int& e : entries) e = entry(rng);
        const dim_vector v(entries);
        if (weyl_count(v) <= 5000) return v;
    }
}

bool strictly_negative_below_diagonal(const matrix<int_laurent>& p) {
    for (std::size_t i = 0; i < p.rows(); ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (!p(i, j).is_zero() && p(i, j).max_exp() > -1) return false;
    return true;
}

bool bar_invariant_entries(const matrix<int_laurent>& q) {
    for (std::size_t i = 0; i < q.rows(); ++i)
        for (std::size_t j = 0; j < q.cols(); ++j)
            if (!(q(i, j).bar() == q(i, j))) return false;
    return true;
}

} // namespace

TEST(Decomp, PipelineOrderExamples) {
    {
        const auto order = pipeline_order(dim_vector({2, 2}));
        ASSERT_EQ(order.size(), 3u);
        for (std::size_t i = 0; i < 3; ++i)
            EXPECT_EQ(order[i].mult(), fixtures::expected::kp_order_2_2()[i]);
    }
    {
        // The two orbit-dimension-2 partitions are tie-broken by descending
        // lexicographic comparison.
        const auto order = pipeline_order(dim_vector({1, 2, 1}));
        ASSERT_EQ(order.size(), 5u);
        for (std::size_t i = 0; i < 5; ++i)
            EXPECT_EQ(order[i].mult(), fixtures::expected::kp_order_1_2_1()[i]);
    }
    EXPECT_EQ(pipeline_order(dim_vector({1})).size(), 1u);
}

TEST(Decomp, PipelineOrderRefinesOrbitOrder) {
    std::mt19937 rng(2024);
    for (int iter = 0; iter < 12; ++iter) {
        const dim_vector v = random_small_dimvec(rng);
        const auto order = pipeline_order(v);
        for (std::size_t i = 0; i + 1 < order.size(); ++i) {
            const long long a = orbit_dim(order[i], v);
            const long long b = orbit_dim(order[i + 1], v);
            EXPECT_LE(a, b);
            if (a == b) EXPECT_GT(order[i].mult(), order[i + 1].mult());
        }
    }
}

TEST(Decomp, LdltMatchesReference) {
    {
        const ldlt_result f = ldlt(fixtures::expected::psi_2_2());
        EXPECT_EQ(f.unit_lower, fixtures::expected::l_2_2());
        EXPECT_EQ(f.diag, fixtures::expected::d_2_2());
    }
    {
        const ldlt_result f = ldlt(fixtures::expected::psi_1_2_1());
        EXPECT_EQ(f.unit_lower, fixtures::expected::l_1_2_1());
        EXPECT_EQ(f.diag, fixtures::expected::d_1_2_1());
    }
}

TEST(Decomp, LdltIdentity) {
    const ldlt_result f = ldlt(as_rat(matrix<int_laurent>::identity(4)));
    EXPECT_EQ(f.unit_lower, matrix<int_laurent>::identity(4));
    for (const auto& d : f.diag) EXPECT_EQ(d, rat_func(1));
}

TEST(Decomp, LdltZeroPivot) {
    matrix<rat_func> singular(2, 2);
    singular(0, 0) = rat_func(1);
    singular(0, 1) = rat_func(1);
    singular(1, 0) = rat_func(1);
    singular(1, 1) = rat_func(1);
    EXPECT_THROW(ldlt(singular), zero_pivot);
}

TEST(Decomp, QpSplitExamples) {
    {
        const qp_result qp = qp_split(fixtures::expected::l_1_2_1());
        EXPECT_EQ(qp.q, fixtures::expected::q_1_2_1());
        EXPECT_EQ(qp.p, fixtures::expected::p_1_2_1());
    }
    {
        const qp_result qp = qp_split(fixtures::expected::l_2_2());
        EXPECT_EQ(qp.q, matrix<int_laurent>::identity(3));
        EXPECT_EQ(qp.p, fixtures::expected::l_2_2());
    }
    {
        const qp_result qp = qp_split(matrix<int_laurent>::identity(5));
        EXPECT_EQ(qp.q, matrix<int_laurent>::identity(5));
        EXPECT_EQ(qp.p, matrix<int_laurent>::identity(5));
    }
}

TEST(Decomp, ReconstructionOnRandomInstances) {
    std::mt19937 rng(77);
    for (int iter = 0; iter < 8; ++iter) {
        const dim_vector v = random_small_dimvec(rng);
        const auto ctx = pairing_context::build(v);
        const triangular_system sys = build_triangular_system(ctx);
        EXPECT_EQ(reconstruct_ldlt(sys.l, sys.d), sys.psi) << "LDL^T reconstruction";
        const matrix<rat_func> qp = mul(as_rat(sys.q), as_rat(sys.p));
        EXPECT_EQ(qp, as_rat(sys.l)) << "QP reconstruction";
        EXPECT_TRUE(bar_invariant_entries(sys.q));
        EXPECT_TRUE(strictly_negative_below_diagonal(sys.p));
    }
}

TEST(Decomp, QpUniquenessWitness) {
    // Perturbing a below-diagonal Q entry by (v + v^{-1}) and recompensating
    // in P must break one of the two defining properties; Z[v+v^{-1}] and
    // v^{-1}Z[v^{-1}] only share zero.
    const matrix<int_laurent> l = fixtures::expected::l_1_2_1();
    const qp_result qp = qp_split(l);
    const int_laurent bump = parse_laurent("v+v^-1");
    for (std::size_t i = 0; i < l.rows(); ++i)
        for (std::size_t j = 0; j < i; ++j) {
            matrix<int_laurent> q2 = qp.q;
            q2(i, j) += bump;
            EXPECT_TRUE(bar_invariant_entries(q2));
            // Solve Q2 P2 = L for P2 by forward substitution; Q2 is
            // unitriangular so P2 stays Laurent.
            const std::size_t n = l.rows();
            matrix<int_laurent> p2(n, n);
            for (std::size_t r = 0; r < n; ++r)
                for (std::size_t c = 0; c < n; ++c) {
                    int_laurent acc = l(r, c);
                    for (std::size_t k = 0; k < r; ++k) acc -= q2(r, k) * p2(k, c);
                    p2(r, c) = acc;
                }
            EXPECT_EQ(mul(as_rat(q2), as_rat(p2)), as_rat(l));
            EXPECT_FALSE(strictly_negative_below_diagonal(p2))
                << "perturbed split must violate negativity at (" << i << "," << j << ")";
        }
}

TEST(Decomp, SolvePsiRoundTrips) {
    const auto ctx = pairing_context::build(dim_vector({1, 2, 1}));
    const triangular_system sys = build_triangular_system(ctx);
    const std::size_t n = sys.d.size();
    {
        // rhs = Psi e_1 solves back to e_1.
        std::vector<rat_func> rhs(n);
        for (std::size_t i = 0; i < n; ++i) rhs[i] = sys.psi(i, 0);
        const auto x = solve_psi(sys.l, sys.d, rhs);
        for (std::size_t i = 0; i < n; ++i) EXPECT_EQ(x[i], rat_func(i == 0 ? 1 : 0));
    }
    {
        const auto x = solve_psi(sys.l, sys.d, std::vector<rat_func>(n));
        for (const auto& xi : x) EXPECT_TRUE(xi.is_zero());
    }
    {
        std::mt19937 rng(9);
        std::uniform_int_distribution<int> coeff(-3, 3), exp(-3, 3);
        std::vector<rat_func> rhs(n);
        for (auto& r : rhs) r = rat_func(int_laurent::monomial(bigint(coeff(rng)), exp(rng)));
        const auto x = solve_psi(sys.l, sys.d, rhs);
        for (std::size_t i = 0; i < n; ++i) {
            rat_func acc;
            for (std::size_t j = 0; j < n; ++j) acc += sys.psi(i, j) * x[j];
            EXPECT_EQ(acc, rhs[i]);
        }
    }
}

TEST(Decomp, NormalizedPMatchesGradedAffineNormalization) {
    // The alternative normalization v^{dim O_{c'} - dim O_c} P_{c'c} of the
    // change of basis has polynomial entries with nonnegative powers; for
    // (1,2,1) it is the 0/1 matrix with a single 1 + v^2 entry.
    const auto& inst = fixtures::computed(dim_vector({1, 2, 1}));
    const auto& dims = inst.ctx.orbit_dims;
    matrix<int_laurent> normalized(5, 5);
    for (std::size_t c = 0; c < 5; ++c)
        for (std::size_t cc = 0; cc < 5; ++cc)
            normalized(c, cc) =
                inst.sys.p(cc, c).shifted(static_cast<int>(dims[cc] - dims[c]));
    const matrix<int_laurent> expected = fixtures::make_laurent_matrix({
        {"1", "1", "1", "1+v^2", "1"},
        {"0", "1", "0", "1", "1"},
        {"0", "0", "1", "1", "1"},
        {"0", "0", "0", "1", "1"},
        {"0", "0", "0", "0", "1"},
    });
    EXPECT_EQ(normalized, expected);
}

TEST(Decomp, OmegaTransportsToPsi) {
    // Psi = Q Omega Q^T with Omega = P D P^T.
    std::mt19937 rng(123);
    for (int iter = 0; iter < 5; ++iter) {
        const dim_vector v = random_small_dimvec(rng);
        const triangular_system sys = build_triangular_system(pairing_context::build(v));
        const matrix<rat_func> omega = omega_matrix(sys);
        const matrix<rat_func> q = as_rat(sys.q);
        EXPECT_EQ(mul(mul(q, omega), q.transposed()), sys.psi);
    }
}

TEST(Decomp, ReferenceInstancePEntriesNonnegative) {
    // Observed (not contractual): P entries of the worked instances are
    // polynomials in v^{-1} with nonnegative coefficients.
    for (const auto& p : {fixtures::expected::p_2_2(), fixtures::expected::p_1_2_1()})
        for (std::size_t i = 0; i < p.rows(); ++i)
            for (std::size_t j = 0; j <= i; ++j)
                for (const auto& [e, c] : p(i, j).terms()) EXPECT_GT(c, 0);
}
