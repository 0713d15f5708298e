#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace recall {

/// Dense row-major matrix of doubles. The weight stores in this project are
/// small (tens of neurons), so a handful of loops beats pulling in a linear
/// algebra dependency.
class Matrix {
public:
    Matrix() = default;

    Matrix(int rows, int cols, double fill = 0.0)
        : rows_(rows), cols_(cols) {
        if (rows < 0 || cols < 0) {
            throw std::invalid_argument("Matrix: negative dimensions");
        }
        data_.assign(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), fill);
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    double& operator()(int r, int c) {
        return data_[static_cast<std::size_t>(r) * cols_ + c];
    }
    double operator()(int r, int c) const {
        return data_[static_cast<std::size_t>(r) * cols_ + c];
    }

    /// Pointer to the start of row r; rows are contiguous.
    const double* row(int r) const {
        return data_.data() + static_cast<std::size_t>(r) * cols_;
    }

    bool operator==(const Matrix&) const = default;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<double> data_;
};

}  // namespace recall
