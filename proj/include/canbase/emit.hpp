#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "canbase/flags.hpp"
#include "canbase/laurent.hpp"
#include "canbase/matrix.hpp"
#include "canbase/rational.hpp"
#include "canbase/typea.hpp"

namespace canbase {

enum class text_style { pretty, latex };

namespace detail {

inline std::string exp_string(int e, text_style style) {
    if (e == 1) return "v";
    if (style == text_style::latex) return "v^{" + std::to_string(e) + "}";
    return "v^" + std::to_string(e);
}

} // namespace detail

/// Renders terms with descending exponents: "1 + 2v^-2 + v^-4".
inline std::string to_text(const int_laurent& f, text_style style) {
    if (f.is_zero()) return "0";
    std::string out;
    for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
        const auto& [e, c] = *it;
        const bool negative = c < 0;
        bigint abs = negative ? bigint(-c) : c;
        if (out.empty()) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        if (abs != 1 || e == 0) out += abs.str();
        if (e != 0) out += detail::exp_string(e, style);
    }
    return out;
}

inline std::string to_pretty(const int_laurent& f) { return to_text(f, text_style::pretty); }
inline std::string to_latex(const int_laurent& f) { return to_text(f, text_style::latex); }

inline std::string to_text(const rat_func& r, text_style style) {
    if (r.is_laurent()) return to_text(r.num(), style);
    if (style == text_style::latex)
        return "\\frac{" + to_latex(r.num()) + "}{" + to_latex(r.den()) + "}";
    return "(" + to_pretty(r.num()) + ") / (" + to_pretty(r.den()) + ")";
}

inline std::string to_pretty(const rat_func& r) { return to_text(r, text_style::pretty); }
inline std::string to_latex(const rat_func& r) { return to_text(r, text_style::latex); }

inline std::ostream& operator<<(std::ostream& os, const int_laurent& f) { return os << to_pretty(f); }
inline std::ostream& operator<<(std::ostream& os, const rat_func& r) { return os << to_pretty(r); }

/// A product prod_s (1 - v^{-2s})^{e_s}, kept factored for display.
struct denominator_factors {
    std::vector<std::pair<int, int>> powers; // (s, e_s) with e_s > 0

    int_laurent expand() const {
        int_laurent f(1);
        for (const auto& [s, e] : powers) {
            int_laurent base = int_laurent(1) - int_laurent::monomial(1, -2 * s);
            f *= base.pow(static_cast<unsigned>(e));
        }
        return f;
    }

    std::string text(text_style style) const {
        if (powers.empty()) return "1";
        std::string out;
        for (const auto& [s, e] : powers) {
            const std::string base = "1-" + detail::exp_string(-2 * s, style);
            out += "(" + base + ")";
            if (e != 1)
                out += style == text_style::latex ? "^{" + std::to_string(e) + "}"
                                                  : "^" + std::to_string(e);
        }
        return out;
    }
};

/// The generic denominator prod_i prod_{s=1}^{v_i} (1 - v^{-2s}) that clears
/// every entry of Psi and D.
inline denominator_factors generic_denominator(const dim_vector& v) {
    denominator_factors den;
    int max_entry = 0;
    for (int j = 0; j < v.size(); ++j) max_entry = std::max(max_entry, v[j]);
    for (int s = 1; s <= max_entry; ++s) {
        int e = 0;
        for (int j = 0; j < v.size(); ++j)
            if (v[j] >= s) ++e;
        den.powers.push_back({s, e});
    }
    return den;
}

/// (1 - v^{-2})^n, the denominator of the renormalized Hom vector.
inline denominator_factors borel_denominator(int n) {
    denominator_factors den;
    if (n > 0) den.powers.push_back({1, n});
    return den;
}

namespace detail {

inline std::string matrix_text(const std::vector<std::vector<std::string>>& cells, text_style style) {
    if (style == text_style::latex) {
        std::string out = "\\begin{pmatrix}\n";
        for (std::size_t i = 0; i < cells.size(); ++i) {
            for (std::size_t j = 0; j < cells[i].size(); ++j) {
                out += cells[i][j];
                if (j + 1 < cells[i].size()) out += " & ";
            }
            if (i + 1 < cells.size()) out += " \\\\";
            out += "\n";
        }
        return out + "\\end{pmatrix}";
    }
    std::vector<std::size_t> widths;
    for (const auto& row : cells)
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (widths.size() <= j) widths.resize(j + 1, 0);
            widths[j] = std::max(widths[j], row[j].size());
        }
    std::string out;
    for (const auto& row : cells) {
        out += "[ ";
        for (std::size_t j = 0; j < row.size(); ++j) {
            out += row[j];
            out.append(widths[j] - row[j].size() + (j + 1 < row.size() ? 2 : 0), ' ');
        }
        out += " ]\n";
    }
    return out;
}

} // namespace detail

inline std::string matrix_text(const matrix<int_laurent>& m, text_style style) {
    std::vector<std::vector<std::string>> cells(m.rows(), std::vector<std::string>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) cells[i][j] = to_text(m(i, j), style);
    return detail::matrix_text(cells, style);
}

/// Displays a rational matrix over a factored common denominator, matching
/// the usual way these Gram matrices are printed. Returns nothing if some
/// entry fails to clear, in which case the caller falls back to entrywise
/// rendering.
inline std::optional<std::string> matrix_text_over_denominator(const matrix<rat_func>& m,
                                                               const denominator_factors& den,
                                                               text_style style) {
    const rat_func expanded{den.expand()};
    std::vector<std::vector<std::string>> cells(m.rows(), std::vector<std::string>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const rat_func cleared = m(i, j) * expanded;
            if (!cleared.is_laurent()) return std::nullopt;
            cells[i][j] = to_text(cleared.num(), style);
        }
    const std::string body = detail::matrix_text(cells, style);
    if (style == text_style::latex) return "\\frac{1}{" + den.text(style) + "}\n" + body;
    return "1/( " + den.text(style) + " ) *\n" + body;
}

inline std::optional<std::string> vector_text_over_denominator(const std::vector<rat_func>& values,
                                                               const denominator_factors& den,
                                                               text_style style) {
    const rat_func expanded{den.expand()};
    std::vector<std::vector<std::string>> cells;
    for (const auto& value : values) {
        const rat_func cleared = value * expanded;
        if (!cleared.is_laurent()) return std::nullopt;
        cells.push_back({to_text(cleared.num(), style)});
    }
    const std::string body = detail::matrix_text(cells, style);
    if (style == text_style::latex) return "\\frac{1}{" + den.text(style) + "}\n" + body;
    return "1/( " + den.text(style) + " ) *\n" + body;
}

/// Roots print as 1-based index pairs.
inline std::string root_text(const positive_root& r) {
    return "a[" + std::to_string(r.first + 1) + "," + std::to_string(r.last + 1) + "]";
}

inline std::string pattern_text(const zero_pattern& p) {
    std::string out = "(";
    for (int a = 0; a < p.arrow_count(); ++a) {
        if (a > 0) out += ", ";
        const auto& m = p.arrow(a);
        out += "[";
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r > 0) out += "/";
            for (std::size_t c = 0; c < m.cols(); ++c) out += m(r, c) ? '*' : '0';
        }
        out += "]";
    }
    return out + ")";
}

} // namespace canbase
