#ifndef SUPERJET_LINALG_HPP
#define SUPERJET_LINALG_HPP

#include "superjet/scalar.hpp"

#include <optional>
#include <vector>

namespace superjet {

/// Dense matrix of Scalars. Small and exact; row/column labels are kept by
/// the callers.
class ScalarMat {
public:
    ScalarMat() : rows_(0), cols_(0) {}
    ScalarMat(int rows, int cols) : rows_(rows), cols_(cols),
        data_(static_cast<size_t>(rows) * static_cast<size_t>(cols)) {}

    static ScalarMat identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Scalar& at(int r, int c) { return data_[static_cast<size_t>(r) * cols_ + c]; }
    const Scalar& at(int r, int c) const { return data_[static_cast<size_t>(r) * cols_ + c]; }

    bool is_zero() const;
    ScalarMat transpose() const;
    ScalarMat operator-() const;
    friend ScalarMat operator+(const ScalarMat& a, const ScalarMat& b);
    friend ScalarMat operator-(const ScalarMat& a, const ScalarMat& b);
    friend ScalarMat operator*(const ScalarMat& a, const ScalarMat& b);
    friend ScalarMat operator*(const Scalar& c, const ScalarMat& a);
    friend bool operator==(const ScalarMat& a, const ScalarMat& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }
    friend bool operator!=(const ScalarMat& a, const ScalarMat& b) { return !(a == b); }

    std::vector<Scalar> apply(const std::vector<Scalar>& v) const;
    ScalarMat commutator(const ScalarMat& o) const;       // [A,B] = AB - BA
    ScalarMat anticommutator(const ScalarMat& o) const;   // AB + BA

    /// Fraction-free Bareiss elimination with column pivoting; exact rank.
    int rank() const;

private:
    int rows_, cols_;
    std::vector<Scalar> data_;
};

/// Row echelon factorization (exact Gauss-Jordan) reusable for many solves.
class RowEchelon {
public:
    explicit RowEchelon(const ScalarMat& a);

    int rank() const { return static_cast<int>(pivots_.size()); }
    /// Solve A x = b; nullopt if inconsistent. Free variables are set to 0.
    std::optional<std::vector<Scalar>> solve(const std::vector<Scalar>& b) const;
    /// Basis of the kernel of A.
    std::vector<std::vector<Scalar>> kernel_basis() const;

    // access to the recorded row transform T with T A in reduced form, for
    // solving against right-hand sides living in other coefficient modules
    int arows() const { return r_.rows(); }
    const std::vector<int>& pivot_cols() const { return pivots_; }
    const Scalar& transform(int row, int j) const { return r_.at(row, acols_ + j); }

private:
    ScalarMat r_;                      // reduced rows of [A | I]
    std::vector<int> pivots_;          // pivot column per pivot row
    int acols_;
};

/// Sparse rows for the larger cochain matrices; rank by exact elimination
/// with a Markowitz-style pivot choice.
struct SparseMat {
    int rows = 0, cols = 0;
    std::vector<std::vector<std::pair<int, Scalar>>> row;  // ascending column ids

    void init(int r, int c) { rows = r; cols = c; row.assign(static_cast<size_t>(r), {}); }
    void add(int r, int c, const Scalar& v);
};

int sparse_rank(SparseMat m);

} // namespace superjet

#endif
