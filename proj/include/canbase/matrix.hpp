#pragma once

#include <cstddef>
#include <vector>

namespace canbase {

/// Minimal dense row-major matrix.
template <typename T>
class matrix {
public:
    matrix() = default;

    matrix(std::size_t rows, std::size_t cols, T init = T())
        : rows_(rows), cols_(cols), cells_(rows * cols, std::move(init)) {}

    static matrix identity(std::size_t n) {
        matrix m(n, n, T(0));
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T& operator()(std::size_t i, std::size_t j) { return cells_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return cells_[i * cols_ + j]; }

    matrix transposed() const {
        matrix m(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
        return m;
    }

    bool operator==(const matrix&) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> cells_;
};

} // namespace canbase
