// Acceptance suite: runs each release criterion at its stated tolerance
// (everything here is exact arithmetic, so "tolerance" means bit-exact
// equality) and prints one pass/fail line per criterion.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "canbase/canbase.hpp"

using namespace canbase;

namespace {

struct check_failure {
    std::string what;
};

void require(bool ok, const std::string& what) {
    if (!ok) throw check_failure{what};
}

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

double run_timed(const std::function<void()>& body) {
    const auto start = std::chrono::steady_clock::now();
    body();
    const auto stop = std::chrono::steady_clock::now();
    return std::chrono::duration<double>(stop - start).count();
}

void criterion_1() {
    double seconds = run_timed([] {
        const auto ctx = pairing_context::build(dim_vector({2, 2}));
        const triangular_system sys = build_triangular_system(ctx);
        require(sys.psi == fixtures::expected::psi_2_2(), "Psi mismatch");
        require(sys.l == fixtures::expected::l_2_2(), "L mismatch");
        require(sys.d == fixtures::expected::d_2_2(), "D mismatch");
        require(sys.q == matrix<int_laurent>::identity(3), "Q should be the identity");
        require(sys.p == sys.l, "P should equal L");
    });
    require(seconds < 1.0, "runtime " + std::to_string(seconds) + "s exceeds 1s");
}

void criterion_2() {
    double seconds = run_timed([] {
        const auto ctx = pairing_context::build(dim_vector({1, 2, 1}));
        const triangular_system sys = build_triangular_system(ctx);
        require(sys.psi == fixtures::expected::psi_1_2_1(), "Psi mismatch");
        require(sys.l == fixtures::expected::l_1_2_1(), "L mismatch");
        require(sys.d == fixtures::expected::d_1_2_1(), "D mismatch");
        require(sys.q == fixtures::expected::q_1_2_1(), "Q mismatch");
        require(sys.p == fixtures::expected::p_1_2_1(), "P mismatch");
    });
    require(seconds < 1.0, "runtime " + std::to_string(seconds) + "s exceeds 1s");
}

void criterion_3() {
    double seconds = run_timed([] {
        const dim_vector v({1, 2, 1});
        const hecke_context hctx = hecke_context::build(v);
        for (const auto& row : fixtures::expected::intersection_table_1_2_1()) {
            std::vector<int> w(row.one_line.size());
            for (std::size_t i = 0; i < w.size(); ++i) w[i] = row.one_line[i] - 1;
            require(inversion_count(w) == row.length, "table length mismatch");
            require(wn_pattern(w, hctx) == embed_pattern(row.pattern, hctx),
                    "table intersection mismatch");
        }
        const auto ctx = pairing_context::build(v);
        const triangular_system sys = build_triangular_system(ctx);
        const auto h = h_vector(hctx, ctx);
        require(h == fixtures::expected::h_1_2_1(), "H mismatch");
        const auto f = f_vector(sys, h);
        require(f == fixtures::expected::f_1_2_1(), "F mismatch");
        require(simple_dims(f) == std::vector<bigint>({4, 6, 6, 2, 4}), "dims mismatch");
        const matrix<bigint> m = standard_multiplicities(sys);
        const auto expected = fixtures::expected::multiplicities_1_2_1();
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j)
                require(m(i, j) == expected[i][j], "multiplicity mismatch");
        require(m(0, 3) == 2, "[M_1 : L_4] must be 2");
    });
    require(seconds < 1.0, "runtime " + std::to_string(seconds) + "s exceeds 1s");
}

void criterion_4() {
    const auto ctx22 = pairing_context::build(dim_vector({2, 2}));
    require(ctx22.orbit_dims == std::vector<long long>({0, 3, 4}), "(2,2) orbit dims");
    const auto ctx121 = pairing_context::build(dim_vector({1, 2, 1}));
    require(ctx121.orbit_dims == std::vector<long long>({0, 2, 2, 3, 4}), "(1,2,1) orbit dims");
}

std::vector<dim_vector> property_sample() {
    std::vector<dim_vector> sample = {
        dim_vector({1}),      dim_vector({2, 2}),    dim_vector({1, 2, 1}),
        dim_vector({0, 1}),   dim_vector({2, 0, 2}), dim_vector({1, 1, 1, 1}),
        dim_vector({3, 1}),
    };
    std::mt19937 rng(20'250'811);
    std::uniform_int_distribution<int> len(1, 4), entry(0, 4);
    while (sample.size() < 14) {
        std::vector<int> entries(static_cast<std::size_t>(len(rng)));
        for (int& e : entries) e = entry(rng);
        const dim_vector v(entries);
        if (v.total() > 7 || weyl_count(v) > 100'000) continue;
        sample.push_back(v);
    }
    return sample;
}

void criterion_5() {
    // The pattern validation gate must pass before anything downstream runs.
    require(fixtures::patterns_validate(), "pattern validation gate");
    for (const dim_vector& v : property_sample()) {
        const auto ctx = pairing_context::build(v);
        const triangular_system sys = build_triangular_system(ctx);
        const std::size_t n = sys.d.size();
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < i; ++j)
                require(sys.psi(i, j) == sys.psi(j, i), "Psi not symmetric");
        require(reconstruct_ldlt(sys.l, sys.d) == sys.psi, "LDL^T reconstruction");
        require(mul(as_rat(sys.q), as_rat(sys.p)) == as_rat(sys.l), "QP reconstruction");
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                require(sys.q(i, j).bar() == sys.q(i, j), "Q not bar invariant");
                if (j < i && !sys.p(i, j).is_zero())
                    require(sys.p(i, j).max_exp() <= -1, "P not strictly negative");
            }
        // L entries arrived as Laurent polynomials by construction; clearing
        // the generic denominator must also land in Laurent polynomials.
        rat_func den(1);
        for (int j = 0; j < v.size(); ++j)
            for (int s = 1; s <= v[j]; ++s)
                den *= rat_func(int_laurent(1) - int_laurent::monomial(1, -2 * s));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                require((sys.psi(i, j) * den).is_laurent(), "generic denominator clearing");
    }
}

void criterion_6() {
    // Weyl length generating function against brute-force inversion counting.
    for (const dim_vector& v :
         {dim_vector({2, 2}), dim_vector({1, 2, 1}), dim_vector({3, 2}), dim_vector({2, 1, 2})}) {
        int_laurent brute;
        for_each_weyl(v, [&](const weyl_element& w) {
            brute += int_laurent::monomial(1, 2 * static_cast<int>(w.length));
        });
        int_laurent product(1);
        for (int j = 0; j < v.size(); ++j) {
            int_laurent factorial(1);
            for (int k = 1; k <= v[j]; ++k) {
                int_laurent sum;
                for (int t = 0; t < k; ++t) sum += int_laurent::monomial(1, 2 * t);
                factorial *= sum;
            }
            product *= factorial;
        }
        require(brute == product, "length generating function");
        require(weyl_power_sum(v.entries(), [](const auto&) { return 0; }) == product,
                "weyl_power_sum disagrees with the product formula");
    }
    // Divided-power self-pairing.
    for (int a = 1; a <= 5; ++a) {
        const auto ctx = pairing_context::build(dim_vector({a}));
        rat_func expected(1);
        for (int s = 1; s <= a; ++s)
            expected *= rat_func(int_laurent(1), int_laurent(1) - int_laurent::monomial(1, -2 * s));
        require(psi_entry(ctx, 0, 0) == expected, "divided-power self-pairing");
    }
    // Psi Q^{-T} F = H round trip.
    for (const dim_vector& v : {dim_vector({1}), dim_vector({2, 1}), dim_vector({1, 2, 1})}) {
        const auto ctx = pairing_context::build(v);
        const triangular_system sys = build_triangular_system(ctx);
        const auto h = h_vector(hecke_context::build(v), ctx);
        const auto f = f_vector(sys, h);
        require(h_transport_consistent(sys, h, f), "H transport identity");
    }
}

} // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<void()>>> criteria = {
        {"1: (2,2) Psi/L/D bit-exact, Q = I, P = L, < 1s", criterion_1},
        {"2: (1,2,1) Psi/L/D/Q/P bit-exact, < 1s", criterion_2},
        {"3: (1,2,1) Hecke table/H/F/dims/multiplicities, < 1s", criterion_3},
        {"4: orbit dimensions (0,3,4) and (0,2,2,3,4)", criterion_4},
        {"5: property suite on randomized dimension vectors", criterion_5},
        {"6: oracle checks (lengths, self-pairing, transport)", criterion_6},
    };
    int failures = 0;
    for (const auto& [name, body] : criteria) {
        try {
            body();
            std::cout << "[PASS] criterion " << name << "\n";
        } catch (const check_failure& f) {
            ++failures;
            std::cout << "[FAIL] criterion " << name << ": " << f.what << "\n";
        } catch (const std::exception& e) {
            ++failures;
            std::cout << "[FAIL] criterion " << name << ": unexpected error: " << e.what() << "\n";
        }
    }
    if (failures == 0) {
        std::cout << "all acceptance criteria passed\n";
        return 0;
    }
    std::cout << failures << " acceptance criteria failed\n";
    return 1;
}
