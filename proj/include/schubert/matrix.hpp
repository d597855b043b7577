// Dense matrices over Laurent polynomials, sized for desk-scale rank.
// Determinants and adjugates go through cofactor expansion: every
// intermediate stays a Laurent polynomial, so exactness is structural.
#pragma once

#include <vector>

#include "schubert/coweight.hpp"
#include "schubert/laurent.hpp"

namespace schubert {

class LaurentMatrix {
  public:
    LaurentMatrix() = default;
    LaurentMatrix(int rows, int cols)
        : rows_(rows), cols_(cols),
          entries_(static_cast<size_t>(rows) * static_cast<size_t>(cols)) {
        require(rows >= 1 && cols >= 1, "matrix dimensions must be positive");
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    LaurentScalar& at(int r, int c) {
        require(0 <= r && r < rows_ && 0 <= c && c < cols_, "matrix index out of range");
        return entries_[static_cast<size_t>(r) * static_cast<size_t>(cols_) + static_cast<size_t>(c)];
    }
    const LaurentScalar& at(int r, int c) const {
        require(0 <= r && r < rows_ && 0 <= c && c < cols_, "matrix index out of range");
        return entries_[static_cast<size_t>(r) * static_cast<size_t>(cols_) + static_cast<size_t>(c)];
    }

    static LaurentMatrix identity(int n) {
        LaurentMatrix m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = LaurentScalar(1);
        return m;
    }

    // diag(t^{a_1}, ..., t^{a_n})
    static LaurentMatrix diagonal_power(const Coweight& a) {
        LaurentMatrix m(a.rank(), a.rank());
        for (int i = 0; i < a.rank(); ++i) m.at(i, i) = LaurentScalar::monomial(a[i], Rat(1));
        return m;
    }

    // The matrix sending e_i to e_{s(i)}.
    static LaurentMatrix permutation(const Permutation& s) {
        LaurentMatrix m(s.rank(), s.rank());
        for (int i = 1; i <= s.rank(); ++i) m.at(s(i) - 1, i - 1) = LaurentScalar(1);
        return m;
    }

    friend LaurentMatrix operator*(const LaurentMatrix& a, const LaurentMatrix& b) {
        require(a.cols_ == b.rows_, "matrix product dimension mismatch");
        LaurentMatrix m(a.rows_, b.cols_);
        for (int i = 0; i < a.rows_; ++i)
            for (int k = 0; k < a.cols_; ++k) {
                if (a.at(i, k).is_zero()) continue;
                for (int j = 0; j < b.cols_; ++j) {
                    if (b.at(k, j).is_zero()) continue;
                    m.at(i, j) = m.at(i, j) + a.at(i, k) * b.at(k, j);
                }
            }
        return m;
    }

    friend bool operator==(const LaurentMatrix& a, const LaurentMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
    }
    friend bool operator!=(const LaurentMatrix& a, const LaurentMatrix& b) { return !(a == b); }

    LaurentMatrix scaled(const LaurentScalar& s) const {
        LaurentMatrix m(rows_, cols_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) m.at(i, j) = at(i, j) * s;
        return m;
    }

    LaurentMatrix minor_matrix(int drop_row, int drop_col) const {
        LaurentMatrix m(rows_ - 1, cols_ - 1);
        for (int i = 0, mi = 0; i < rows_; ++i) {
            if (i == drop_row) continue;
            for (int j = 0, mj = 0; j < cols_; ++j) {
                if (j == drop_col) continue;
                m.at(mi, mj) = at(i, j);
                ++mj;
            }
            ++mi;
        }
        return m;
    }

    LaurentScalar determinant() const {
        require(rows_ == cols_, "determinant of a non-square matrix");
        if (rows_ == 1) return at(0, 0);
        LaurentScalar acc;
        for (int i = 0; i < rows_; ++i) {
            if (at(i, 0).is_zero()) continue;
            LaurentScalar term = at(i, 0) * minor_matrix(i, 0).determinant();
            acc = (i % 2 == 0) ? acc + term : acc - term;
        }
        return acc;
    }

    // adj(A) with A * adj(A) = det(A) * I.
    LaurentMatrix adjugate() const {
        require(rows_ == cols_, "adjugate of a non-square matrix");
        if (rows_ == 1) return identity(1);
        LaurentMatrix m(rows_, cols_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) {
                LaurentScalar cof = minor_matrix(j, i).determinant();
                m.at(i, j) = ((i + j) % 2 == 0) ? cof : -cof;
            }
        return m;
    }

    bool has_negative_exponent() const {
        for (const auto& e : entries_)
            if (e.has_negative_exponent()) return true;
        return false;
    }

    bool is_integral() const {
        for (const auto& e : entries_)
            if (!e.is_integral()) return false;
        return true;
    }

  private:
    int rows_ = 0, cols_ = 0;
    std::vector<LaurentScalar> entries_;
};

}  // namespace schubert
