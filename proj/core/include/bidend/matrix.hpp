#ifndef BIDEND_MATRIX_HPP
#define BIDEND_MATRIX_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "bidend/rational.hpp"

namespace bidend {

/*
 * Dense exact-rational matrices, just big enough for desk-scale kernel,
 * rank and solve work.  Rank and determinant run fraction-free (Bareiss),
 * which keeps every intermediate value integral on integer input.
 */
class Mat {
public:
    Mat() : rows_(0), cols_(0) {}
    Mat(std::size_t r, std::size_t c) : rows_(r), cols_(c), a_(r, std::vector<Rational>(c, Rational(0))) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Rational& at(std::size_t i, std::size_t j) { return a_[i][j]; }
    const Rational& at(std::size_t i, std::size_t j) const { return a_[i][j]; }
    std::vector<Rational>& row(std::size_t i) { return a_[i]; }
    const std::vector<Rational>& row(std::size_t i) const { return a_[i]; }

    void append_row(std::vector<Rational> r);
    bool operator==(const Mat& o) const { return a_ == o.a_; }

private:
    std::size_t rows_, cols_;
    std::vector<std::vector<Rational>> a_;
};

// Fraction-free (Bareiss) elimination.
Rational bareiss_det(Mat m);
std::size_t bareiss_rank(Mat m);

// In-place reduced row echelon form; returns pivot column indices.
std::vector<std::size_t> rref(Mat& m);

// Basis of the right kernel {x : m x = 0}, itself in reduced echelon form
// (leading coefficient 1, pivots strictly increasing).
std::vector<std::vector<Rational>> kernel_basis(const Mat& m);

// Solve m x = b for square nonsingular m; fraction-free forward elimination
// followed by exact back substitution.  Throws std::runtime_error when
// singular.
std::vector<Rational> solve_linear(Mat m, std::vector<Rational> b);

// Echelonized span of a set of row vectors (zero rows dropped).
std::vector<std::vector<Rational>> row_space_echelon(const std::vector<std::vector<Rational>>& rows,
                                                     std::size_t cols);

bool in_row_span(const std::vector<std::vector<Rational>>& echelon, std::vector<Rational> v);

bool same_row_space(const std::vector<std::vector<Rational>>& a,
                    const std::vector<std::vector<Rational>>& b, std::size_t cols);

}  // namespace bidend

#endif
