#ifndef AOMOTO_QMATRIX_HPP
#define AOMOTO_QMATRIX_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "aomoto/rational.hpp"

namespace aomoto {

/// Dense matrix of exact rationals. Small by design: every matrix in this
/// project is indexed by nbc monomials, simplices or hyperplanes.
class QMatrix {
public:
    QMatrix() = default;
    QMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    static QMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rat& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rat& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    bool operator==(const QMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }

    void append_row(const RatVec& row);
    void append_col(const RatVec& col);
    QMatrix transposed() const;

    /// In-place reduced row-echelon form; returns the pivot columns.
    std::vector<std::size_t> rref();

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rat> data_;
};

/// Coordinate-list sparse matrix; the Aomoto differentials are stored this
/// way (nbc bases make them extremely sparse).
struct SparseMatrix {
    std::size_t rows = 0, cols = 0;
    struct Entry {
        std::size_t row, col;
        Rat value;
    };
    std::vector<Entry> entries;

    void add(std::size_t r, std::size_t c, const Rat& v) {
        if (v != 0) entries.push_back({r, c, v});
    }
    QMatrix to_dense() const;
};

std::size_t rank(const QMatrix& m);

/// Fraction-free (Bareiss) rank over the integers after clearing row
/// denominators; the production rank path for the algebraic matrices.
std::size_t rank_fraction_free(const QMatrix& m);

inline std::size_t rank(const SparseMatrix& m) { return rank_fraction_free(m.to_dense()); }

/// Basis of the right kernel, one column per basis vector.
QMatrix nullspace(const QMatrix& m);

/// One solution of m x = b, or nullopt if inconsistent.
std::optional<RatVec> solve(const QMatrix& m, const RatVec& b);

/// det of a square matrix (exact).
Rat determinant(QMatrix m);

/// rank([m | v]) == rank(m), i.e. v lies in the column span of m.
bool in_column_span(const QMatrix& m, const RatVec& v);

}  // namespace aomoto

#endif
