#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "lmc/gf.hpp"

namespace lmc {

/// Dense row-major matrix over GF(2^ell). Desk-scale only; all elimination
/// is straightforward Gaussian elimination.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, FieldElem{0}) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    FieldElem& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    FieldElem at(std::size_t r, std::size_t c) const {
        return data_[r * cols_ + c];
    }

    std::span<FieldElem> row(std::size_t r) {
        return {data_.data() + r * cols_, cols_};
    }
    std::span<const FieldElem> row(std::size_t r) const {
        return {data_.data() + r * cols_, cols_};
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<FieldElem> data_;
};

/// Rank via in-place elimination on a copy.
std::size_t rank(const FieldContext& F, Matrix m);

/// Solves A x = b for a single right-hand side. Returns std::nullopt when
/// the system is inconsistent; when the solution space has free variables,
/// free coordinates are set to zero.
std::optional<std::vector<FieldElem>> solve(const FieldContext& F, Matrix a,
                                            std::vector<FieldElem> b);

/// Row-reduction of A computed once, reusable against many right-hand
/// sides: stores R = E*A in reduced echelon form together with the row
/// transform E.
class Factorization {
public:
    Factorization(const FieldContext& F, const Matrix& a);

    std::size_t rank() const { return pivot_cols_.size(); }

    /// Solves A x = b; std::nullopt when inconsistent. Free coordinates,
    /// if any, are zero.
    std::optional<std::vector<FieldElem>> solve(
        std::span<const FieldElem> b) const;

private:
    const FieldContext& F_;
    Matrix rref_;                     // R, rows x cols
    Matrix transform_;                // E, rows x rows
    std::vector<std::size_t> pivot_cols_;
};

}  // namespace lmc
