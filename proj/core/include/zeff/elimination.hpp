#pragma once

#include "zeff/field.hpp"

#include <utility>
#include <vector>

namespace zeff {

/// Outcome of Gauss-Jordan reduction of A x = b.
///
/// When the system is consistent, `particular` is the solution with every
/// free variable set to zero and `nullspace` spans the homogeneous
/// solutions, so the full solution set is particular + span(nullspace).
template <FieldInstance F>
struct LinearSolution {
    int rank = 0;
    bool consistent = true;
    std::vector<typename F::Value> particular;
    std::vector<std::vector<typename F::Value>> nullspace;
    std::vector<int> pivot_columns;

    bool unique() const { return consistent && nullspace.empty(); }
};

/// Row-reduces the augmented matrix [A | b] with full (Jordan) elimination.
/// Pivots are chosen per column among the remaining rows by F::pivot_merit;
/// ties go to the earliest row, which keeps the reduction deterministic.
template <FieldInstance F>
LinearSolution<F> solve_linear(const F& field, std::vector<std::vector<typename F::Value>> a,
                               std::vector<typename F::Value> b) {
    using Value = typename F::Value;
    const int rows = static_cast<int>(a.size());
    const int cols = rows == 0 ? 0 : static_cast<int>(a.front().size());

    LinearSolution<F> out;
    int pivot_row = 0;
    for (int col = 0; col < cols && pivot_row < rows; ++col) {
        int best = -1;
        double best_merit = 0.0;
        for (int r = pivot_row; r < rows; ++r) {
            if (field.is_zero(a[r][col])) continue;
            double merit = F::pivot_merit(a[r][col]);
            if (best < 0 || merit > best_merit) {
                best = r;
                best_merit = merit;
            }
        }
        if (best < 0) continue;
        std::swap(a[best], a[pivot_row]);
        std::swap(b[best], b[pivot_row]);

        Value inv_pivot = F::div(F::one(), a[pivot_row][col]);
        for (int j = col; j < cols; ++j) a[pivot_row][j] = F::mul(a[pivot_row][j], inv_pivot);
        a[pivot_row][col] = F::one();
        b[pivot_row] = F::mul(b[pivot_row], inv_pivot);

        for (int r = 0; r < rows; ++r) {
            if (r == pivot_row || field.is_zero(a[r][col])) continue;
            Value factor = a[r][col];
            for (int j = col; j < cols; ++j) a[r][j] = F::sub(a[r][j], F::mul(factor, a[pivot_row][j]));
            a[r][col] = F::zero();
            b[r] = F::sub(b[r], F::mul(factor, b[pivot_row]));
        }
        out.pivot_columns.push_back(col);
        ++pivot_row;
    }
    out.rank = pivot_row;

    for (int r = out.rank; r < rows; ++r) {
        if (!field.is_zero(b[r])) {
            out.consistent = false;
            return out;
        }
    }

    out.particular.assign(static_cast<std::size_t>(cols), F::zero());
    for (int i = 0; i < out.rank; ++i) out.particular[static_cast<std::size_t>(out.pivot_columns[i])] = b[i];

    int next_pivot = 0;
    for (int col = 0; col < cols; ++col) {
        if (next_pivot < out.rank && out.pivot_columns[static_cast<std::size_t>(next_pivot)] == col) {
            ++next_pivot;
            continue;
        }
        std::vector<Value> basis(static_cast<std::size_t>(cols), F::zero());
        basis[static_cast<std::size_t>(col)] = F::one();
        for (int i = 0; i < out.rank; ++i)
            basis[static_cast<std::size_t>(out.pivot_columns[i])] = F::neg(a[i][col]);
        out.nullspace.push_back(std::move(basis));
    }
    return out;
}

/// Determinant of a square matrix via forward elimination: the product of
/// the pivots with the sign of the row swaps. An exhausted column means a
/// zero determinant (identically zero in the exact instance).
template <FieldInstance F>
typename F::Value determinant(const F& field, std::vector<std::vector<typename F::Value>> a) {
    using Value = typename F::Value;
    const int n = static_cast<int>(a.size());
    Value det = F::one();
    for (int col = 0; col < n; ++col) {
        int best = -1;
        double best_merit = 0.0;
        for (int r = col; r < n; ++r) {
            if (field.is_zero(a[r][col])) continue;
            double merit = F::pivot_merit(a[r][col]);
            if (best < 0 || merit > best_merit) {
                best = r;
                best_merit = merit;
            }
        }
        if (best < 0) return F::zero();
        if (best != col) {
            std::swap(a[best], a[col]);
            det = F::neg(det);
        }
        det = F::mul(det, a[col][col]);
        for (int r = col + 1; r < n; ++r) {
            if (field.is_zero(a[r][col])) continue;
            Value factor = F::div(a[r][col], a[col][col]);
            for (int j = col; j < n; ++j) a[r][j] = F::sub(a[r][j], F::mul(factor, a[col][j]));
            a[r][col] = F::zero();
        }
    }
    return det;
}

} // namespace zeff
