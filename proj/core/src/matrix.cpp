#include "rootloci/matrix.hpp"

#include <stdexcept>

namespace rootloci {

void RatMatrix::swap_rows(size_t i, size_t j) {
    if (i == j) return;
    for (size_t c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
}

std::pair<RatMatrix, size_t> rref(const RatMatrix& m) {
    RatMatrix a = m;
    const size_t rows = a.rows(), cols = a.cols();
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        // simplest pivot: smallest bit-size nonzero entry in column c
        size_t best = rows;
        size_t best_sz = 0;
        for (size_t i = r; i < rows; ++i) {
            if (a.at(i, c) == 0) continue;
            size_t sz = bit_size(a.at(i, c));
            if (best == rows || sz < best_sz) {
                best = i;
                best_sz = sz;
            }
        }
        if (best == rows) continue;
        a.swap_rows(r, best);
        Rational inv = a.at(r, c);
        for (size_t j = c; j < cols; ++j) a.at(r, j) /= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || a.at(i, c) == 0) continue;
            Rational f = a.at(i, c);
            for (size_t j = c; j < cols; ++j) a.at(i, j) -= f * a.at(r, j);
        }
        ++r;
    }
    return {a, r};
}

size_t rank(const RatMatrix& m) { return rref(m).second; }

std::optional<std::vector<Rational>> solve_in_span(
    const std::vector<Rational>& target,
    const std::vector<std::vector<Rational>>& span) {
    const size_t n = target.size();
    for (const auto& vsp : span)
        if (vsp.size() != n) throw std::invalid_argument("solve_in_span: length mismatch");
    const size_t k = span.size();
    RatMatrix aug(n, k + 1);
    for (size_t j = 0; j < k; ++j)
        for (size_t i = 0; i < n; ++i) aug.at(i, j) = span[j][i];
    for (size_t i = 0; i < n; ++i) aug.at(i, k) = target[i];
    auto [red, rk] = rref(aug);
    (void)rk;
    std::vector<Rational> coeffs(k);
    for (size_t i = 0; i < red.rows(); ++i) {
        size_t piv = k + 1;
        for (size_t j = 0; j <= k; ++j) {
            if (red.at(i, j) != 0) {
                piv = j;
                break;
            }
        }
        if (piv == k) return std::nullopt;  // pivot in the target column
        if (piv < k) coeffs[piv] = red.at(i, k);
    }
    return coeffs;
}

}  // namespace rootloci
