#pragma once

#include <functional>
#include <list>
#include <string>
#include <vector>

#include "canbase/emit.hpp"
#include "canbase/hecke.hpp"
#include "canbase/pairing.hpp"

namespace canbase::fixtures {

/// Builds a zero pattern from one string per arrow, rows separated by '/',
/// e.g. {"0/*", "*0"} for a 2x1 column followed by a 1x2 row.
inline zero_pattern make_pattern(const std::vector<std::string>& arrows) {
    std::vector<matrix<std::uint8_t>> ms;
    for (const auto& text : arrows) {
        std::vector<std::string> rows;
        std::string current;
        for (char ch : text) {
            if (ch == '/') {
                rows.push_back(current);
                current.clear();
            } else {
                current += ch;
            }
        }
        rows.push_back(current);
        const std::size_t ncols = rows.empty() ? 0 : rows[0].size();
        matrix<std::uint8_t> m(rows.size(), ncols, 0);
        for (std::size_t r = 0; r < rows.size(); ++r)
            for (std::size_t c = 0; c < ncols; ++c) m(r, c) = rows[r][c] == '*' ? 1 : 0;
        ms.push_back(std::move(m));
    }
    return zero_pattern(std::move(ms));
}

inline matrix<int_laurent> make_laurent_matrix(const std::vector<std::vector<std::string>>& cells) {
    const std::size_t rows = cells.size();
    const std::size_t cols = rows == 0 ? 0 : cells[0].size();
    matrix<int_laurent> m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = parse_laurent(cells[i][j]);
    return m;
}

/// Rational matrix given by Laurent numerators over one common denominator.
inline matrix<rat_func> make_rat_matrix(const std::vector<std::vector<std::string>>& nums,
                                        const int_laurent& den) {
    const std::size_t rows = nums.size();
    const std::size_t cols = rows == 0 ? 0 : nums[0].size();
    matrix<rat_func> m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = rat_func(parse_laurent(nums[i][j]), den);
    return m;
}

inline std::vector<rat_func> make_rat_vector(const std::vector<std::string>& nums,
                                             const int_laurent& den) {
    std::vector<rat_func> out;
    out.reserve(nums.size());
    for (const auto& s : nums) out.emplace_back(parse_laurent(s), den);
    return out;
}

// ---------------------------------------------------------------------------
// Reference values for v = (2,2).
// ---------------------------------------------------------------------------

namespace expected {

inline std::vector<std::vector<int>> kp_order_2_2() {
    return {{2, 0, 2}, {1, 1, 1}, {0, 2, 0}};
}

inline std::vector<std::vector<int>> exps_2_2() {
    return {{2, 2, 0}, {1, 2, 1}, {0, 2, 2}};
}

inline std::vector<zero_pattern> patterns_2_2() {
    return {make_pattern({"00/00"}), make_pattern({"00/**"}), make_pattern({"**/**"})};
}

inline std::vector<long long> orbit_dims_2_2() { return {0, 3, 4}; }

inline int_laurent den_2_2() {
    return parse_laurent("1-v^-2").pow(2) * parse_laurent("1-v^-4").pow(2);
}

inline matrix<rat_func> psi_2_2() {
    return make_rat_matrix({{"1", "v^-1+v^-3", "v^-4"},
                            {"v^-1+v^-3", "1+2v^-2+v^-4", "v^-1+v^-3"},
                            {"v^-4", "v^-1+v^-3", "1"}},
                           den_2_2());
}

inline matrix<int_laurent> l_2_2() {
    return make_laurent_matrix({{"1", "0", "0"}, {"v^-1+v^-3", "1", "0"}, {"v^-4", "v^-1", "1"}});
}

/// The third entry is forced by the factorization identity:
/// D_3 = Psi_33 - L_31^2 D_1 - L_32^2 D_2 = (1-v^-2)(1-v^-4) / den.
inline std::vector<rat_func> d_2_2() {
    return make_rat_vector({"1", "1+v^-2-v^-4-v^-6", "1-v^-2-v^-4+v^-6"}, den_2_2());
}

inline matrix<int_laurent> q_2_2() { return matrix<int_laurent>::identity(3); }
inline matrix<int_laurent> p_2_2() { return l_2_2(); }

// ---------------------------------------------------------------------------
// Reference values for v = (1,2,1).
// ---------------------------------------------------------------------------

inline std::vector<std::vector<int>> kp_order_1_2_1() {
    return {{1, 0, 2, 0, 0, 1},
            {1, 0, 1, 0, 1, 0},
            {0, 1, 1, 0, 0, 1},
            {0, 1, 0, 0, 1, 0},
            {0, 0, 1, 1, 0, 0}};
}

inline std::vector<std::vector<int>> exps_1_2_1() {
    return {{1, 2, 0, 1, 0, 0},
            {1, 1, 0, 1, 1, 0},
            {0, 2, 1, 1, 0, 0},
            {0, 1, 1, 1, 1, 0},
            {0, 1, 0, 1, 1, 1}};
}

/// The fifth shape carries the same data at vertices 1 and 2 as the second
/// and fourth, so its first arrow must match theirs; the Gram matrix row
/// confirms it.
inline std::vector<zero_pattern> patterns_1_2_1() {
    return {make_pattern({"0/0", "00"}), make_pattern({"0/*", "00"}),
            make_pattern({"0/0", "**"}), make_pattern({"0/*", "*0"}),
            make_pattern({"0/*", "**"})};
}

inline std::vector<long long> orbit_dims_1_2_1() { return {0, 2, 2, 3, 4}; }

inline int_laurent den_1_2_1() {
    return parse_laurent("1-v^-2").pow(3) * parse_laurent("1-v^-4");
}

inline matrix<rat_func> psi_1_2_1() {
    return make_rat_matrix(
        {{"1", "1+v^-2", "v^-2", "v^-1+v^-3", "v^-2+v^-4"},
         {"1+v^-2", "2+2v^-2", "v^-2+v^-4", "2v^-1+2v^-3", "2v^-2+2v^-4"},
         {"v^-2", "v^-2+v^-4", "1", "v^-1+v^-3", "1+v^-2"},
         {"v^-1+v^-3", "2v^-1+2v^-3", "v^-1+v^-3", "1+2v^-2+v^-4", "2v^-1+2v^-3"},
         {"v^-2+v^-4", "2v^-2+2v^-4", "1+v^-2", "2v^-1+2v^-3", "2+2v^-2"}},
        den_1_2_1());
}

inline matrix<int_laurent> l_1_2_1() {
    return make_laurent_matrix({{"1", "0", "0", "0", "0"},
                                {"1+v^-2", "1", "0", "0", "0"},
                                {"v^-2", "0", "1", "0", "0"},
                                {"v^-1+v^-3", "v^-1", "v^-1", "1", "0"},
                                {"v^-2+v^-4", "v^-2", "1+v^-2", "v^-1", "1"}});
}

/// The last two entries both reduce to (1-v^-2)(1-v^-4) / den, i.e. to
/// (1-v^-2)^{-2}.
inline std::vector<rat_func> d_1_2_1() {
    return make_rat_vector(
        {"1", "1-v^-4", "1-v^-4", "1-v^-2-v^-4+v^-6", "1-v^-2-v^-4+v^-6"}, den_1_2_1());
}

inline matrix<int_laurent> q_1_2_1() {
    return make_laurent_matrix({{"1", "0", "0", "0", "0"},
                                {"1", "1", "0", "0", "0"},
                                {"0", "0", "1", "0", "0"},
                                {"0", "0", "0", "1", "0"},
                                {"0", "0", "1", "0", "1"}});
}

inline matrix<int_laurent> p_1_2_1() {
    return make_laurent_matrix({{"1", "0", "0", "0", "0"},
                                {"v^-2", "1", "0", "0", "0"},
                                {"v^-2", "0", "1", "0", "0"},
                                {"v^-1+v^-3", "v^-1", "v^-1", "1", "0"},
                                {"v^-4", "v^-2", "v^-2", "v^-1", "1"}});
}

/// One row per element of S_4: 1-based one-line permutation, length, and
/// the intersection {}^w n cap N as a pattern.
struct sn_intersection_row {
    std::vector<int> one_line;
    long long length;
    zero_pattern pattern;
};

inline std::vector<sn_intersection_row> intersection_table_1_2_1() {
    auto p = [](const char* a, const char* b) { return make_pattern({a, b}); };
    return {
        {{1, 2, 3, 4}, 0, p("*/*", "**")}, {{1, 3, 2, 4}, 1, p("*/*", "**")},
        {{2, 1, 3, 4}, 1, p("0/*", "**")}, {{1, 2, 4, 3}, 1, p("*/*", "*0")},
        {{3, 1, 2, 4}, 2, p("*/0", "**")}, {{1, 3, 4, 2}, 2, p("*/*", "0*")},
        {{2, 3, 1, 4}, 2, p("0/0", "**")}, {{3, 2, 1, 4}, 3, p("0/0", "**")},
        {{2, 3, 4, 1}, 3, p("0/0", "**")}, {{3, 2, 4, 1}, 4, p("0/0", "**")},
        {{1, 4, 2, 3}, 2, p("*/*", "00")}, {{1, 4, 3, 2}, 3, p("*/*", "00")},
        {{4, 1, 2, 3}, 3, p("*/*", "00")}, {{4, 1, 3, 2}, 4, p("*/*", "00")},
        {{2, 1, 4, 3}, 2, p("0/*", "*0")}, {{2, 4, 1, 3}, 3, p("0/*", "*0")},
        {{3, 1, 4, 2}, 3, p("*/0", "0*")}, {{3, 4, 1, 2}, 4, p("*/0", "0*")},
        {{3, 4, 2, 1}, 5, p("0/0", "0*")}, {{2, 4, 3, 1}, 4, p("0/0", "*0")},
        {{4, 2, 1, 3}, 4, p("0/*", "00")}, {{4, 3, 1, 2}, 5, p("*/0", "00")},
        {{4, 2, 3, 1}, 5, p("0/0", "00")}, {{4, 3, 2, 1}, 6, p("0/0", "00")},
    };
}

inline std::vector<rat_func> h_1_2_1() {
    return make_rat_vector({"v+2v^3+3v^5+3v^7+2v^9+v^11", "v+5v^3+6v^5+6v^7+5v^9+v^11",
                            "3v^3+3v^5+3v^7+3v^9", "v^2+8v^4+6v^6+8v^8+v^10",
                            "3v^3+9v^5+9v^7+3v^9"},
                           parse_laurent("1-v^-2").pow(4));
}

inline std::vector<int_laurent> f_1_2_1() {
    return {parse_laurent("3v^9+v^11"), parse_laurent("2v^5+2v^7+2v^9"),
            parse_laurent("2v^5+2v^7+2v^9"), parse_laurent("v^6+v^8"),
            parse_laurent("v^3+3v^5")};
}

inline std::vector<long long> dims_1_2_1() { return {4, 6, 6, 2, 4}; }

inline std::vector<std::vector<long long>> multiplicities_1_2_1() {
    return {{1, 1, 1, 2, 1},
            {0, 1, 0, 1, 1},
            {0, 0, 1, 1, 1},
            {0, 0, 0, 1, 1},
            {0, 0, 0, 0, 1}};
}

inline matrix<rat_func> psi_1() {
    return make_rat_matrix({{"1"}}, parse_laurent("1-v^-2"));
}

} // namespace expected

/// Shared computed state so the fixtures do not recompute the pipelines.
struct computed_instance {
    pairing_context ctx;
    triangular_system sys;
};

inline const computed_instance& computed(const dim_vector& v) {
    static std::list<std::pair<dim_vector, computed_instance>> cache;
    for (const auto& entry : cache)
        if (entry.first == v) return entry.second;
    pairing_context ctx = pairing_context::build(v);
    triangular_system sys = build_triangular_system(ctx);
    cache.emplace_back(v, computed_instance{std::move(ctx), std::move(sys)});
    return cache.back().second;
}

/// A named reference check: pass iff the rendered expected and actual agree.
struct fixture {
    std::string name;
    std::function<std::string()> expected_text;
    std::function<std::string()> actual_text;
};

struct fixture_outcome {
    std::string name;
    bool passed = false;
    std::string expected;
    std::string actual;
};

inline fixture_outcome run_fixture(const fixture& f) {
    fixture_outcome out;
    out.name = f.name;
    out.expected = f.expected_text();
    out.actual = f.actual_text();
    out.passed = out.expected == out.actual;
    return out;
}

namespace detail {

inline std::string kp_list_text(const std::vector<kostant_partition>& kps) {
    std::string out;
    for (const auto& c : kps) {
        out += "(";
        for (int i = 0; i < c.size(); ++i) {
            if (i) out += ",";
            out += std::to_string(c[i]);
        }
        out += ") ";
    }
    return out;
}

inline std::string kp_list_text(const std::vector<std::vector<int>>& kps) {
    std::vector<kostant_partition> tmp;
    tmp.reserve(kps.size());
    for (const auto& m : kps) tmp.emplace_back(m);
    return kp_list_text(tmp);
}

inline std::string int_list_text(const std::vector<long long>& xs) {
    std::string out;
    for (long long x : xs) out += std::to_string(x) + " ";
    return out;
}

inline std::string pattern_list_text(const std::vector<zero_pattern>& ps) {
    std::string out;
    for (const auto& p : ps) out += pattern_text(p) + " ";
    return out;
}

inline std::string rat_vector_text(const std::vector<rat_func>& xs) {
    std::string out;
    for (const auto& x : xs) out += to_pretty(x) + "\n";
    return out;
}

inline std::string laurent_vector_text(const std::vector<int_laurent>& xs) {
    std::string out;
    for (const auto& x : xs) out += to_pretty(x) + "\n";
    return out;
}

inline std::string rat_matrix_text(const matrix<rat_func>& m) {
    std::string out;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            out += to_pretty(m(i, j)) + (j + 1 == m.cols() ? "\n" : "  ");
    return out;
}

inline std::string mult_matrix_text(const matrix<bigint>& m) {
    std::string out;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            out += m(i, j).str() + (j + 1 == m.cols() ? "\n" : " ");
    return out;
}

inline std::string mult_matrix_text(const std::vector<std::vector<long long>>& m) {
    std::string out;
    for (const auto& row : m)
        for (std::size_t j = 0; j < row.size(); ++j)
            out += std::to_string(row[j]) + (j + 1 == row.size() ? "\n" : " ");
    return out;
}

} // namespace detail

/// The flags validation gate: the level/pattern convention must reproduce
/// the reference patterns of both worked instances exactly. Run before the
/// pipelines; a failure means the Borel convention drifted.
inline bool patterns_validate() {
    {
        const auto& inst = computed(dim_vector({2, 2}));
        const auto expected = expected::patterns_2_2();
        for (std::size_t i = 0; i < expected.size(); ++i)
            if (!(inst.ctx.patterns[i] == expected[i])) return false;
    }
    {
        const auto& inst = computed(dim_vector({1, 2, 1}));
        const auto expected = expected::patterns_1_2_1();
        for (std::size_t i = 0; i < expected.size(); ++i)
            if (!(inst.ctx.patterns[i] == expected[i])) return false;
    }
    return true;
}

inline std::vector<fixture> all_fixtures() {
    std::vector<fixture> out;
    const dim_vector v22({2, 2});
    const dim_vector v121({1, 2, 1});
    const dim_vector v1({1});

    auto add = [&out](std::string name, std::function<std::string()> expected,
                      std::function<std::string()> actual) {
        out.push_back({std::move(name), std::move(expected), std::move(actual)});
    };

    add(
        "roots/order-3", [] { return std::string("a[3,3] a[2,3] a[2,2] a[1,3] a[1,2] a[1,1] "); },
        [] {
            std::string s;
            for (const auto& r : positive_roots_ordered(3)) s += root_text(r) + " ";
            return s;
        });
    add(
        "kp/order-2,2", [] { return detail::kp_list_text(expected::kp_order_2_2()); },
        [=] { return detail::kp_list_text(computed(v22).ctx.order); });
    add(
        "kp/order-1,2,1", [] { return detail::kp_list_text(expected::kp_order_1_2_1()); },
        [=] { return detail::kp_list_text(computed(v121).ctx.order); });
    add(
        "monomial/word-1,2,1", [] { return std::string("3 2 3 1 2 3 "); },
        [] {
            std::string s;
            for (int j : reineke_word(3)) s += std::to_string(j + 1) + " ";
            return s;
        });
    add(
        "monomial/exponents-1,2,1",
        [] {
            std::string s;
            for (const auto& a : expected::exps_1_2_1())
                for (std::size_t k = 0; k < a.size(); ++k)
                    s += std::to_string(a[k]) + (k + 1 == a.size() ? "; " : " ");
            return s;
        },
        [=] {
            std::string s;
            for (const auto& shape : computed(v121).ctx.shapes)
                for (std::size_t k = 0; k < shape.exps.size(); ++k)
                    s += std::to_string(shape.exps[k]) + (k + 1 == shape.exps.size() ? "; " : " ");
            return s;
        });
    add(
        "patterns/2,2", [] { return detail::pattern_list_text(expected::patterns_2_2()); },
        [=] { return detail::pattern_list_text(computed(v22).ctx.patterns); });
    add(
        "patterns/1,2,1", [] { return detail::pattern_list_text(expected::patterns_1_2_1()); },
        [=] { return detail::pattern_list_text(computed(v121).ctx.patterns); });
    add(
        "orbits/2,2", [] { return detail::int_list_text(expected::orbit_dims_2_2()); },
        [=] { return detail::int_list_text(computed(v22).ctx.orbit_dims); });
    add(
        "orbits/1,2,1", [] { return detail::int_list_text(expected::orbit_dims_1_2_1()); },
        [=] { return detail::int_list_text(computed(v121).ctx.orbit_dims); });
    add(
        "psi/1", [] { return detail::rat_matrix_text(expected::psi_1()); },
        [=] { return detail::rat_matrix_text(computed(v1).sys.psi); });
    add(
        "psi/2,2", [] { return detail::rat_matrix_text(expected::psi_2_2()); },
        [=] { return detail::rat_matrix_text(computed(v22).sys.psi); });
    add(
        "psi/1,2,1", [] { return detail::rat_matrix_text(expected::psi_1_2_1()); },
        [=] { return detail::rat_matrix_text(computed(v121).sys.psi); });
    add(
        "ldlt/2,2",
        [] { return matrix_text(expected::l_2_2(), text_style::pretty) + detail::rat_vector_text(expected::d_2_2()); },
        [=] {
            const auto& inst = computed(v22);
            return matrix_text(inst.sys.l, text_style::pretty) + detail::rat_vector_text(inst.sys.d);
        });
    add(
        "ldlt/1,2,1",
        [] {
            return matrix_text(expected::l_1_2_1(), text_style::pretty) +
                   detail::rat_vector_text(expected::d_1_2_1());
        },
        [=] {
            const auto& inst = computed(v121);
            return matrix_text(inst.sys.l, text_style::pretty) + detail::rat_vector_text(inst.sys.d);
        });
    add(
        "qp/2,2",
        [] {
            return matrix_text(expected::q_2_2(), text_style::pretty) +
                   matrix_text(expected::p_2_2(), text_style::pretty);
        },
        [=] {
            const auto& inst = computed(v22);
            return matrix_text(inst.sys.q, text_style::pretty) +
                   matrix_text(inst.sys.p, text_style::pretty);
        });
    add(
        "qp/1,2,1",
        [] {
            return matrix_text(expected::q_1_2_1(), text_style::pretty) +
                   matrix_text(expected::p_1_2_1(), text_style::pretty);
        },
        [=] {
            const auto& inst = computed(v121);
            return matrix_text(inst.sys.q, text_style::pretty) +
                   matrix_text(inst.sys.p, text_style::pretty);
        });
    add(
        "hecke/table-1,2,1",
        [] {
            std::string s;
            for (const auto& row : expected::intersection_table_1_2_1())
                s += std::to_string(row.length) + ":" + pattern_text(row.pattern) + "\n";
            return s;
        },
        [=] {
            const hecke_context hctx = hecke_context::build(v121);
            std::string s;
            for (const auto& row : expected::intersection_table_1_2_1()) {
                std::vector<int> w(row.one_line.size());
                for (std::size_t i = 0; i < w.size(); ++i) w[i] = row.one_line[i] - 1;
                const gln_pattern got = wn_pattern(w, hctx);
                // Render through the quiver-pattern view for a readable diff.
                zero_pattern as_pattern = zero_pattern::empty(v121);
                for (const auto& [r, c] : got.positions) {
                    for (int a = 0; a + 1 < v121.size(); ++a) {
                        const int r0 = hctx.block_offset[static_cast<std::size_t>(a) + 1];
                        const int c0 = hctx.block_offset[static_cast<std::size_t>(a)];
                        if (r >= r0 && r < r0 + v121[a + 1] && c >= c0 && c < c0 + v121[a])
                            as_pattern.arrow(a)(static_cast<std::size_t>(r - r0),
                                                static_cast<std::size_t>(c - c0)) = 1;
                    }
                }
                s += std::to_string(inversion_count(w)) + ":" + pattern_text(as_pattern) + "\n";
            }
            return s;
        });
    add(
        "hecke/h-1,2,1", [] { return detail::rat_vector_text(expected::h_1_2_1()); },
        [=] {
            const auto& inst = computed(v121);
            return detail::rat_vector_text(h_vector(hecke_context::build(v121), inst.ctx));
        });
    add(
        "hecke/f-1,2,1", [] { return detail::laurent_vector_text(expected::f_1_2_1()); },
        [=] {
            const auto& inst = computed(v121);
            const auto h = h_vector(hecke_context::build(v121), inst.ctx);
            return detail::laurent_vector_text(f_vector(inst.sys, h));
        });
    add(
        "hecke/dims-1,2,1", [] { return detail::int_list_text(expected::dims_1_2_1()); },
        [=] {
            const auto& inst = computed(v121);
            const auto h = h_vector(hecke_context::build(v121), inst.ctx);
            const auto dims = simple_dims(f_vector(inst.sys, h));
            std::string s;
            for (const auto& d : dims) s += d.str() + " ";
            return s;
        });
    add(
        "hecke/multiplicities-1,2,1",
        [] { return detail::mult_matrix_text(expected::multiplicities_1_2_1()); },
        [=] { return detail::mult_matrix_text(standard_multiplicities(computed(v121).sys)); });
    return out;
}

} // namespace canbase::fixtures
