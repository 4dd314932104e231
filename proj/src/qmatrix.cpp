#include "aomoto/qmatrix.hpp"

#include <cassert>

namespace aomoto {

QMatrix QMatrix::identity(std::size_t n) {
    QMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

void QMatrix::append_row(const RatVec& row) {
    assert(cols_ == 0 || row.size() == cols_);
    if (cols_ == 0) cols_ = row.size();
    data_.insert(data_.end(), row.begin(), row.end());
    ++rows_;
}

void QMatrix::append_col(const RatVec& col) {
    assert(rows_ == 0 || col.size() == rows_);
    if (rows_ == 0) rows_ = col.size();
    std::vector<Rat> next;
    next.reserve(rows_ * (cols_ + 1));
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) next.push_back(std::move((*this)(i, j)));
        next.push_back(col[i]);
    }
    data_ = std::move(next);
    ++cols_;
}

QMatrix QMatrix::transposed() const {
    QMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

std::vector<std::size_t> QMatrix::rref() {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
        std::size_t p = row;
        while (p < rows_ && (*this)(p, col) == 0) ++p;
        if (p == rows_) continue;
        if (p != row)
            for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(p, j), (*this)(row, j));
        Rat inv = 1 / (*this)(row, col);
        for (std::size_t j = col; j < cols_; ++j) (*this)(row, j) *= inv;
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i == row || (*this)(i, col) == 0) continue;
            Rat f = (*this)(i, col);
            for (std::size_t j = col; j < cols_; ++j) (*this)(i, j) -= f * (*this)(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

QMatrix SparseMatrix::to_dense() const {
    QMatrix m(rows, cols);
    for (const auto& e : entries) m(e.row, e.col) += e.value;
    return m;
}

std::size_t rank(const QMatrix& m) {
    QMatrix copy = m;
    return copy.rref().size();
}

std::size_t rank_fraction_free(const QMatrix& m) {
    // Clear denominators row by row (does not change the row space), then
    // run Bareiss elimination over the integers.
    std::size_t rows = m.rows(), cols = m.cols();
    std::vector<std::vector<Int>> a(rows, std::vector<Int>(cols));
    for (std::size_t i = 0; i < rows; ++i) {
        Int lcm = 1;
        for (std::size_t j = 0; j < cols; ++j) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), m(i, j).get_den().get_mpz_t());
        for (std::size_t j = 0; j < cols; ++j) {
            Rat scaled = m(i, j) * Rat(lcm);
            assert(scaled.get_den() == 1);
            a[i][j] = scaled.get_num();
        }
    }
    Int prev = 1;
    std::size_t r = 0;
    for (std::size_t col = 0; col < cols && r < rows; ++col) {
        std::size_t p = r;
        while (p < rows && a[p][col] == 0) ++p;
        if (p == rows) continue;
        if (p != r) std::swap(a[p], a[r]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = col + 1; j < cols; ++j) {
                Int t = a[i][j] * a[r][col] - a[i][col] * a[r][j];
                mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            a[i][col] = 0;
        }
        prev = a[r][col];
        ++r;
    }
    return r;
}

QMatrix nullspace(const QMatrix& m) {
    QMatrix red = m;
    std::vector<std::size_t> pivots = red.rref();
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t p : pivots) is_pivot[p] = true;

    std::vector<std::size_t> free_cols;
    for (std::size_t j = 0; j < m.cols(); ++j)
        if (!is_pivot[j]) free_cols.push_back(j);

    QMatrix basis(m.cols(), free_cols.size());
    for (std::size_t k = 0; k < free_cols.size(); ++k) {
        std::size_t f = free_cols[k];
        basis(f, k) = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) basis(pivots[i], k) = -red(i, f);
    }
    return basis;
}

std::optional<RatVec> solve(const QMatrix& m, const RatVec& b) {
    assert(b.size() == m.rows());
    QMatrix aug = m;
    aug.append_col(b);
    std::vector<std::size_t> pivots = aug.rref();
    if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
    RatVec x(m.cols());
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug(i, m.cols());
    return x;
}

Rat determinant(QMatrix m) {
    assert(m.rows() == m.cols());
    std::size_t n = m.rows();
    Rat det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t p = col;
        while (p < n && m(p, col) == 0) ++p;
        if (p == n) return 0;
        if (p != col) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(col, j));
            det = -det;
        }
        det *= m(col, col);
        Rat inv = 1 / m(col, col);
        for (std::size_t i = col + 1; i < n; ++i) {
            if (m(i, col) == 0) continue;
            Rat f = m(i, col) * inv;
            for (std::size_t j = col; j < n; ++j) m(i, j) -= f * m(col, j);
        }
    }
    return det;
}

bool in_column_span(const QMatrix& m, const RatVec& v) {
    return solve(m, v).has_value();
}

}  // namespace aomoto
