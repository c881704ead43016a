#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "canbase/flags.hpp"
#include "canbase/laurent.hpp"
#include "canbase/matrix.hpp"
#include "canbase/rational.hpp"
#include "canbase/typea.hpp"

namespace canbase {

using ordered_json = nlohmann::ordered_json;

inline constexpr std::string_view report_schema = "canbase/1";

/// Coefficients are JSON numbers when they fit in 64 bits and decimal
/// strings otherwise.
inline ordered_json bigint_to_json(const bigint& value) {
    if (value >= std::numeric_limits<std::int64_t>::min() &&
        value <= std::numeric_limits<std::int64_t>::max())
        return value.convert_to<std::int64_t>();
    return value.str();
}

inline bigint bigint_from_json(const ordered_json& j) {
    if (j.is_string()) return bigint(j.get<std::string>());
    if (j.is_number_integer()) return bigint(j.get<std::int64_t>());
    if (j.is_number_unsigned()) return bigint(j.get<std::uint64_t>());
    throw std::invalid_argument("expected integer or integer string");
}

/// An object mapping exponent strings to coefficients, keys sorted ascending
/// by exponent. The zero polynomial is the empty object.
inline ordered_json laurent_to_json(const int_laurent& f) {
    ordered_json j = ordered_json::object();
    for (const auto& [e, c] : f.terms()) j[std::to_string(e)] = bigint_to_json(c);
    return j;
}

inline int_laurent laurent_from_json(const ordered_json& j) {
    int_laurent f;
    for (const auto& [key, value] : j.items())
        f += int_laurent::monomial(bigint_from_json(value), std::stoi(key));
    return f;
}

inline ordered_json rat_to_json(const rat_func& r) {
    return ordered_json{{"num", laurent_to_json(r.num())}, {"den", laurent_to_json(r.den())}};
}

inline rat_func rat_from_json(const ordered_json& j) {
    return rat_func(laurent_from_json(j.at("num")), laurent_from_json(j.at("den")));
}

/// An array of multiplicities in root order.
inline ordered_json kp_to_json(const kostant_partition& c) {
    return ordered_json(c.mult());
}

inline kostant_partition kp_from_json(const ordered_json& j) {
    return kostant_partition(j.get<std::vector<int>>());
}

/// Per arrow, a 0/1 matrix as an array of row arrays.
inline ordered_json pattern_to_json(const zero_pattern& p) {
    ordered_json arrows = ordered_json::array();
    for (int a = 0; a < p.arrow_count(); ++a) {
        const auto& m = p.arrow(a);
        ordered_json rows = ordered_json::array();
        for (std::size_t r = 0; r < m.rows(); ++r) {
            ordered_json row = ordered_json::array();
            for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(static_cast<int>(m(r, c)));
            rows.push_back(std::move(row));
        }
        arrows.push_back(std::move(rows));
    }
    return arrows;
}

inline zero_pattern pattern_from_json(const ordered_json& j) {
    std::vector<matrix<std::uint8_t>> arrows;
    for (const auto& rows : j) {
        const std::size_t nrows = rows.size();
        const std::size_t ncols = nrows == 0 ? 0 : rows.at(0).size();
        matrix<std::uint8_t> m(nrows, ncols, 0);
        for (std::size_t r = 0; r < nrows; ++r)
            for (std::size_t c = 0; c < ncols; ++c)
                m(r, c) = rows.at(r).at(c).get<int>() ? 1 : 0;
        arrows.push_back(std::move(m));
    }
    return zero_pattern(std::move(arrows));
}

/// Shape-aware variant: a zero-dimensional vertex makes an arrow's row list
/// empty, which loses the column count, so reconstruct shapes from v.
inline zero_pattern pattern_from_json(const ordered_json& j, const dim_vector& v) {
    zero_pattern p = zero_pattern::empty(v);
    for (int a = 0; a < p.arrow_count(); ++a) {
        const auto& rows = j.at(static_cast<std::size_t>(a));
        auto& m = p.arrow(a);
        for (std::size_t r = 0; r < m.rows(); ++r)
            for (std::size_t c = 0; c < m.cols(); ++c)
                m(r, c) = rows.at(r).at(c).get<int>() ? 1 : 0;
    }
    return p;
}

template <typename T, typename Fn>
ordered_json matrix_to_json(const matrix<T>& m, Fn&& cell) {
    ordered_json rows = ordered_json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        ordered_json row = ordered_json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(cell(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline ordered_json laurent_matrix_to_json(const matrix<int_laurent>& m) {
    return matrix_to_json(m, [](const int_laurent& f) { return laurent_to_json(f); });
}

inline matrix<int_laurent> laurent_matrix_from_json(const ordered_json& j) {
    const std::size_t rows = j.size();
    const std::size_t cols = rows == 0 ? 0 : j.at(0).size();
    matrix<int_laurent> m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t c = 0; c < cols; ++c) m(i, c) = laurent_from_json(j.at(i).at(c));
    return m;
}

inline ordered_json rat_matrix_to_json(const matrix<rat_func>& m) {
    return matrix_to_json(m, [](const rat_func& r) { return rat_to_json(r); });
}

inline matrix<rat_func> rat_matrix_from_json(const ordered_json& j) {
    const std::size_t rows = j.size();
    const std::size_t cols = rows == 0 ? 0 : j.at(0).size();
    matrix<rat_func> m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t c = 0; c < cols; ++c) m(i, c) = rat_from_json(j.at(i).at(c));
    return m;
}

} // namespace canbase
