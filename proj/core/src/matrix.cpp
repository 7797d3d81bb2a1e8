#include "bidend/matrix.hpp"

#include <stdexcept>

namespace bidend {

void Mat::append_row(std::vector<Rational> r) {
    if (rows_ == 0 && cols_ == 0) cols_ = r.size();
    if (r.size() != cols_) throw std::invalid_argument("Mat::append_row: width mismatch");
    a_.push_back(std::move(r));
    ++rows_;
}

Rational bareiss_det(Mat m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("bareiss_det: square matrix required");
    const std::size_t n = m.rows();
    if (n == 0) return Rational(1);
    Rational prev(1);
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (is_zero(m.at(k, k))) {
            std::size_t p = k + 1;
            while (p < n && is_zero(m.at(p, k))) ++p;
            if (p == n) return Rational(0);
            std::swap(m.row(k), m.row(p));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                // exact division step: stays integral on integer input
                m.at(i, j) = (m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j)) / prev;
            }
            m.at(i, k) = 0;
        }
        prev = m.at(k, k);
    }
    return sign > 0 ? m.at(n - 1, n - 1) : -m.at(n - 1, n - 1);
}

std::size_t bareiss_rank(Mat m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    Rational prev(1);
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && is_zero(m.at(p, c))) ++p;
        if (p == rows) continue;
        std::swap(m.row(r), m.row(p));
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j)
                m.at(i, j) = (m.at(i, j) * m.at(r, c) - m.at(i, c) * m.at(r, j)) / prev;
            m.at(i, c) = 0;
        }
        prev = m.at(r, c);
        ++r;
    }
    return r;
}

std::vector<std::size_t> rref(Mat& m) {
    std::vector<std::size_t> pivots;
    const std::size_t rows = m.rows(), cols = m.cols();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && is_zero(m.at(p, c))) ++p;
        if (p == rows) continue;
        std::swap(m.row(r), m.row(p));
        const Rational inv = Rational(1) / m.at(r, c);
        for (std::size_t j = c; j < cols; ++j) m.at(r, j) *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || is_zero(m.at(i, c))) continue;
            const Rational f = m.at(i, c);
            for (std::size_t j = c; j < cols; ++j) m.at(i, j) -= f * m.at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

std::vector<std::vector<Rational>> kernel_basis(const Mat& m) {
    Mat e = m;
    const std::vector<std::size_t> pivots = rref(e);
    const std::size_t cols = m.cols();
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t c : pivots) is_pivot[c] = true;

    std::vector<std::vector<Rational>> basis;
    for (std::size_t fc = 0; fc < cols; ++fc) {
        if (is_pivot[fc]) continue;
        std::vector<Rational> v(cols, Rational(0));
        v[fc] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -e.at(r, fc);
        basis.push_back(std::move(v));
    }
    return row_space_echelon(basis, cols);
}

std::vector<Rational> solve_linear(Mat m, std::vector<Rational> b) {
    const std::size_t n = m.rows();
    if (m.cols() != n || b.size() != n) throw std::invalid_argument("solve_linear: shape mismatch");
    Rational prev(1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (is_zero(m.at(k, k))) {
            std::size_t p = k + 1;
            while (p < n && is_zero(m.at(p, k))) ++p;
            if (p == n) throw std::runtime_error("solve_linear: singular matrix");
            std::swap(m.row(k), m.row(p));
            std::swap(b[k], b[p]);
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            b[i] = (b[i] * m.at(k, k) - m.at(i, k) * b[k]) / prev;
            for (std::size_t j = k + 1; j < n; ++j)
                m.at(i, j) = (m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j)) / prev;
            m.at(i, k) = 0;
        }
        prev = m.at(k, k);
    }
    if (n > 0 && is_zero(m.at(n - 1, n - 1))) throw std::runtime_error("solve_linear: singular matrix");
    std::vector<Rational> x(n, Rational(0));
    for (std::size_t ii = n; ii-- > 0;) {
        Rational s = b[ii];
        for (std::size_t j = ii + 1; j < n; ++j) s -= m.at(ii, j) * x[j];
        x[ii] = s / m.at(ii, ii);
    }
    return x;
}

std::vector<std::vector<Rational>> row_space_echelon(const std::vector<std::vector<Rational>>& rows,
                                                     std::size_t cols) {
    Mat m(0, 0);
    if (rows.empty()) return {};
    for (const auto& r : rows) {
        if (r.size() != cols) throw std::invalid_argument("row_space_echelon: width mismatch");
        m.append_row(r);
    }
    const std::size_t rank = rref(m).size();
    std::vector<std::vector<Rational>> out;
    out.reserve(rank);
    for (std::size_t i = 0; i < rank; ++i) out.push_back(m.row(i));
    return out;
}

bool in_row_span(const std::vector<std::vector<Rational>>& echelon, std::vector<Rational> v) {
    for (const auto& row : echelon) {
        std::size_t p = 0;
        while (p < row.size() && is_zero(row[p])) ++p;
        if (p == row.size()) continue;
        if (!is_zero(v[p])) {
            const Rational f = v[p];
            for (std::size_t j = p; j < v.size(); ++j) v[j] -= f * row[j];
        }
    }
    for (const auto& x : v)
        if (!is_zero(x)) return false;
    return true;
}

bool same_row_space(const std::vector<std::vector<Rational>>& a,
                    const std::vector<std::vector<Rational>>& b, std::size_t cols) {
    return row_space_echelon(a, cols) == row_space_echelon(b, cols);
}

}  // namespace bidend
