#pragma once

#include <cstddef>
#include <vector>

#include "dring/errors.hpp"

namespace dring {

/// Dense row-major matrix over an exact field.
template <class F>
class Matrix {
public:
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    explicit Matrix(const std::vector<std::vector<F>>& rows) : rows_(rows.size()), cols_(rows.empty() ? 0 : rows[0].size()) {
        data_.reserve(rows_ * cols_);
        for (const auto& r : rows) {
            if (r.size() != cols_) throw InputError("ragged matrix rows");
            data_.insert(data_.end(), r.begin(), r.end());
        }
    }

    [[nodiscard]] std::size_t rows() const { return rows_; }
    [[nodiscard]] std::size_t cols() const { return cols_; }
    F& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const F& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    [[nodiscard]] std::vector<F> row(std::size_t i) const {
        return std::vector<F>(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                              data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
    }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
    }

    [[nodiscard]] std::vector<F> apply(const std::vector<F>& v) const {
        if (v.size() != cols_) throw InputError("vector length does not match matrix columns");
        std::vector<F> out(rows_);
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * v[j];
        }
        return out;
    }

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<F> data_;
};

template <class F>
struct RrefResult {
    Matrix<F> reduced;
    std::size_t rank = 0;
    std::vector<std::size_t> pivots;
    /// One vector per free column: 1 in that column, 0 in the other free
    /// columns, minus the reduced entries in the pivot columns.
    std::vector<std::vector<F>> kernel;
};

/// Gauss-Jordan elimination. Pivot rows are scaled to 1 and each pivot
/// column is cleared above and below the pivot.
template <class F>
RrefResult<F> rref(Matrix<F> m) {
    const std::size_t nr = m.rows();
    const std::size_t nc = m.cols();
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < nc && row < nr; ++col) {
        std::size_t sel = row;
        while (sel < nr && m(sel, col).is_zero()) ++sel;
        if (sel == nr) continue;
        m.swap_rows(row, sel);
        F inv = F(1) / m(row, col);
        for (std::size_t j = col; j < nc; ++j) {
            if (!m(row, j).is_zero()) m(row, j) = m(row, j) * inv;
        }
        for (std::size_t i = 0; i < nr; ++i) {
            if (i == row || m(i, col).is_zero()) continue;
            F factor = m(i, col);
            for (std::size_t j = col; j < nc; ++j) {
                if (!m(row, j).is_zero()) m(i, j) = m(i, j) - factor * m(row, j);
            }
        }
        pivots.push_back(col);
        ++row;
    }

    std::vector<bool> is_pivot(nc, false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<std::vector<F>> kernel;
    for (std::size_t free = 0; free < nc; ++free) {
        if (is_pivot[free]) continue;
        std::vector<F> v(nc);
        v[free] = F(1);
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m(i, free);
        kernel.push_back(std::move(v));
    }
    std::size_t rank = pivots.size();
    return RrefResult<F>{std::move(m), rank, std::move(pivots), std::move(kernel)};
}

}  // namespace dring
