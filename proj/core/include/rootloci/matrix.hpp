#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "rootloci/rational.hpp"

namespace rootloci {

// Dense rational matrix, row-major.
class RatMatrix {
public:
    RatMatrix() = default;
    RatMatrix(size_t rows, size_t cols)
        : rows_(rows), cols_(cols), e_(rows * cols) {}

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    Rational& at(size_t i, size_t j) { return e_[i * cols_ + j]; }
    const Rational& at(size_t i, size_t j) const { return e_[i * cols_ + j]; }

    void swap_rows(size_t i, size_t j);
    bool operator==(const RatMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
    }

private:
    size_t rows_ = 0, cols_ = 0;
    std::vector<Rational> e_;
};

// Reduced row echelon form together with the rank.  Pivot rows are chosen by
// smallest bit-size nonzero entry in the current column to limit coefficient
// growth.
std::pair<RatMatrix, size_t> rref(const RatMatrix& m);

size_t rank(const RatMatrix& m);

// Exact coefficients expressing `target` as a linear combination of `span`
// (all vectors of equal length), or nullopt if target is outside the span.
// Free coordinates are set to zero, so span * result == target exactly.
std::optional<std::vector<Rational>> solve_in_span(
    const std::vector<Rational>& target,
    const std::vector<std::vector<Rational>>& span);

}  // namespace rootloci
