// Exact rational matrices and subspace arithmetic (row reduction, rank,
// sums, intersections) over Q.
#pragma once

#include <vector>

#include "schubert/core.hpp"

namespace schubert {

class RatMatrix {
  public:
    RatMatrix() = default;
    RatMatrix(int rows, int cols)
        : rows_(rows), cols_(cols),
          entries_(static_cast<size_t>(rows) * static_cast<size_t>(cols)) {
        require(rows >= 0 && cols >= 1, "bad matrix dimensions");
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rat& at(int r, int c) {
        require(0 <= r && r < rows_ && 0 <= c && c < cols_, "matrix index out of range");
        return entries_[static_cast<size_t>(r) * static_cast<size_t>(cols_) + static_cast<size_t>(c)];
    }
    const Rat& at(int r, int c) const {
        require(0 <= r && r < rows_ && 0 <= c && c < cols_, "matrix index out of range");
        return entries_[static_cast<size_t>(r) * static_cast<size_t>(cols_) + static_cast<size_t>(c)];
    }

    friend bool operator==(const RatMatrix& a, const RatMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
    }

    RatMatrix transpose() const {
        RatMatrix m(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
        return m;
    }

    friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
        require(a.cols_ == b.rows_, "matrix product dimension mismatch");
        RatMatrix m(a.rows_, b.cols_);
        for (int i = 0; i < a.rows_; ++i)
            for (int k = 0; k < a.cols_; ++k) {
                if (a.at(i, k) == 0) continue;
                for (int j = 0; j < b.cols_; ++j) m.at(i, j) += a.at(i, k) * b.at(k, j);
            }
        return m;
    }

    // In-place Gauss-Jordan reduction; returns the pivot columns.
    std::vector<int> rref() {
        std::vector<int> pivots;
        int row = 0;
        for (int col = 0; col < cols_ && row < rows_; ++col) {
            int p = -1;
            for (int r = row; r < rows_; ++r)
                if (at(r, col) != 0) { p = r; break; }
            if (p < 0) continue;
            if (p != row)
                for (int c = 0; c < cols_; ++c) std::swap(at(p, c), at(row, c));
            Rat inv = Rat(1) / at(row, col);
            for (int c = 0; c < cols_; ++c) at(row, c) *= inv;
            for (int r = 0; r < rows_; ++r) {
                if (r == row || at(r, col) == 0) continue;
                Rat f = at(r, col);
                for (int c = 0; c < cols_; ++c) at(r, c) -= f * at(row, c);
            }
            pivots.push_back(col);
            ++row;
        }
        return pivots;
    }

    int rank() const {
        RatMatrix m = *this;
        return static_cast<int>(m.rref().size());
    }

  private:
    int rows_ = 0, cols_ = 0;
    std::vector<Rat> entries_;
};

// A linear subspace of Q^dim, held as a row-reduced basis (rows of `basis`).
struct Subspace {
    int ambient = 0;
    RatMatrix basis;  // rank() rows, ambient columns, in rref

    int dim() const { return basis.rows(); }
};

inline Subspace subspace_from_rows(int ambient, const RatMatrix& rows) {
    require(rows.cols() == ambient, "row length must equal ambient dimension");
    RatMatrix m = rows;
    int r = static_cast<int>(m.rref().size());
    RatMatrix b(r, ambient);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < ambient; ++j) b.at(i, j) = m.at(i, j);
    return Subspace{ambient, std::move(b)};
}

inline Subspace column_span(const RatMatrix& m) {
    return subspace_from_rows(m.rows(), m.transpose());
}

inline RatMatrix stack_rows(const RatMatrix& a, const RatMatrix& b) {
    require(a.cols() == b.cols(), "stacking rows of different lengths");
    RatMatrix m(a.rows() + b.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) m.at(i, j) = a.at(i, j);
    for (int i = 0; i < b.rows(); ++i)
        for (int j = 0; j < b.cols(); ++j) m.at(a.rows() + i, j) = b.at(i, j);
    return m;
}

inline Subspace subspace_sum(const Subspace& u, const Subspace& v) {
    require(u.ambient == v.ambient, "subspaces of different ambient spaces");
    return subspace_from_rows(u.ambient, stack_rows(u.basis, v.basis));
}

inline int intersection_dim(const Subspace& u, const Subspace& v) {
    return u.dim() + v.dim() - subspace_sum(u, v).dim();
}

inline bool subspace_contains(const Subspace& big, const Subspace& small) {
    return subspace_sum(big, small).dim() == big.dim();
}

inline bool subspace_equal(const Subspace& a, const Subspace& b) {
    return a.dim() == b.dim() && subspace_contains(a, b);
}

}  // namespace schubert
