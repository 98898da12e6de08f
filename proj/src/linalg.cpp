#include "superjet/linalg.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace superjet {

ScalarMat ScalarMat::identity(int n) {
    ScalarMat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Scalar(1);
    return m;
}

bool ScalarMat::is_zero() const {
    for (auto& s : data_)
        if (!s.is_zero()) return false;
    return true;
}

ScalarMat ScalarMat::transpose() const {
    ScalarMat t(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
    return t;
}

ScalarMat ScalarMat::operator-() const {
    ScalarMat m(rows_, cols_);
    for (size_t k = 0; k < data_.size(); ++k) m.data_[k] = -data_[k];
    return m;
}

ScalarMat operator+(const ScalarMat& a, const ScalarMat& b) {
    ScalarMat m(a.rows_, a.cols_);
    for (size_t k = 0; k < m.data_.size(); ++k) m.data_[k] = a.data_[k] + b.data_[k];
    return m;
}

ScalarMat operator-(const ScalarMat& a, const ScalarMat& b) {
    ScalarMat m(a.rows_, a.cols_);
    for (size_t k = 0; k < m.data_.size(); ++k) m.data_[k] = a.data_[k] - b.data_[k];
    return m;
}

ScalarMat operator*(const ScalarMat& a, const ScalarMat& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("ScalarMat: shape mismatch");
    ScalarMat m(a.rows_, b.cols_);
    for (int r = 0; r < a.rows_; ++r)
        for (int k = 0; k < a.cols_; ++k) {
            const Scalar& s = a.at(r, k);
            if (s.is_zero()) continue;
            for (int c = 0; c < b.cols_; ++c) {
                const Scalar& t = b.at(k, c);
                if (!t.is_zero()) m.at(r, c) += s * t;
            }
        }
    return m;
}

ScalarMat operator*(const Scalar& c, const ScalarMat& a) {
    ScalarMat m(a.rows_, a.cols_);
    for (size_t k = 0; k < m.data_.size(); ++k) m.data_[k] = c * a.data_[k];
    return m;
}

std::vector<Scalar> ScalarMat::apply(const std::vector<Scalar>& v) const {
    if (static_cast<int>(v.size()) != cols_) throw std::invalid_argument("ScalarMat::apply");
    std::vector<Scalar> out(static_cast<size_t>(rows_));
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c)
            if (!at(r, c).is_zero() && !v[static_cast<size_t>(c)].is_zero())
                out[static_cast<size_t>(r)] += at(r, c) * v[static_cast<size_t>(c)];
    return out;
}

ScalarMat ScalarMat::commutator(const ScalarMat& o) const { return *this * o - o * *this; }
ScalarMat ScalarMat::anticommutator(const ScalarMat& o) const { return *this * o + o * *this; }

int ScalarMat::rank() const {
    ScalarMat m = *this;
    int rank = 0;
    Scalar prev(1);
    for (int col = 0; col < m.cols_ && rank < m.rows_; ++col) {
        int pr = -1;
        for (int r = rank; r < m.rows_; ++r)
            if (!m.at(r, col).is_zero()) { pr = r; break; }
        if (pr < 0) continue;
        if (pr != rank)
            for (int c = 0; c < m.cols_; ++c) std::swap(m.at(pr, c), m.at(rank, c));
        const Scalar piv = m.at(rank, col);
        for (int r = rank + 1; r < m.rows_; ++r) {
            const Scalar head = m.at(r, col);
            for (int c = col; c < m.cols_; ++c) {
                // Bareiss step: exact division by the previous pivot
                m.at(r, c) = (piv * m.at(r, c) - head * m.at(rank, c)) / prev;
            }
        }
        prev = piv;
        ++rank;
    }
    return rank;
}

RowEchelon::RowEchelon(const ScalarMat& a) : acols_(a.cols()) {
    // augment with identity to retain the row transform for solves
    r_ = ScalarMat(a.rows(), a.cols() + a.rows());
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) r_.at(i, j) = a.at(i, j);
        r_.at(i, a.cols() + i) = Scalar(1);
    }
    int rank = 0;
    for (int col = 0; col < acols_ && rank < r_.rows(); ++col) {
        int pr = -1;
        for (int r = rank; r < r_.rows(); ++r)
            if (!r_.at(r, col).is_zero()) { pr = r; break; }
        if (pr < 0) continue;
        if (pr != rank)
            for (int c = 0; c < r_.cols(); ++c) std::swap(r_.at(pr, c), r_.at(rank, c));
        Scalar inv = r_.at(rank, col).inverse();
        for (int c = col; c < r_.cols(); ++c)
            if (!r_.at(rank, c).is_zero()) r_.at(rank, c) = inv * r_.at(rank, c);
        for (int r = 0; r < r_.rows(); ++r) {
            if (r == rank) continue;
            Scalar f = r_.at(r, col);
            if (f.is_zero()) continue;
            for (int c = col; c < r_.cols(); ++c)
                if (!r_.at(rank, c).is_zero()) r_.at(r, c) -= f * r_.at(rank, c);
        }
        pivots_.push_back(col);
        ++rank;
    }
}

std::optional<std::vector<Scalar>> RowEchelon::solve(const std::vector<Scalar>& b) const {
    int nrows = r_.rows();
    if (static_cast<int>(b.size()) != nrows)
        throw std::invalid_argument("RowEchelon::solve: bad rhs size");
    std::vector<Scalar> tb(static_cast<size_t>(nrows));
    for (int r = 0; r < nrows; ++r)
        for (int k = 0; k < nrows; ++k)
            if (!r_.at(r, acols_ + k).is_zero() && !b[static_cast<size_t>(k)].is_zero())
                tb[static_cast<size_t>(r)] += r_.at(r, acols_ + k) * b[static_cast<size_t>(k)];
    // consistency: transformed rhs must vanish on zero rows of the echelon part
    int nr = static_cast<int>(pivots_.size());
    for (int r = nr; r < nrows; ++r)
        if (!tb[static_cast<size_t>(r)].is_zero()) return std::nullopt;
    // reduced form with free variables set to zero: x[pivot_col(r)] = tb[r]
    std::vector<Scalar> x(static_cast<size_t>(acols_));
    for (int r = 0; r < nr; ++r)
        x[static_cast<size_t>(pivots_[static_cast<size_t>(r)])] = tb[static_cast<size_t>(r)];
    return x;
}

std::vector<std::vector<Scalar>> RowEchelon::kernel_basis() const {
    std::vector<bool> is_pivot(static_cast<size_t>(acols_), false);
    for (int p : pivots_) is_pivot[static_cast<size_t>(p)] = true;
    std::vector<std::vector<Scalar>> basis;
    for (int c = 0; c < acols_; ++c) {
        if (is_pivot[static_cast<size_t>(c)]) continue;
        std::vector<Scalar> v(static_cast<size_t>(acols_));
        v[static_cast<size_t>(c)] = Scalar(1);
        for (size_t r = 0; r < pivots_.size(); ++r)
            v[static_cast<size_t>(pivots_[r])] = -r_.at(static_cast<int>(r), c);
        basis.push_back(std::move(v));
    }
    return basis;
}

void SparseMat::add(int r, int c, const Scalar& v) {
    if (v.is_zero()) return;
    auto& rw = row[static_cast<size_t>(r)];
    auto it = std::lower_bound(rw.begin(), rw.end(), c,
                               [](const auto& p, int col) { return p.first < col; });
    if (it != rw.end() && it->first == c) {
        it->second += v;
        if (it->second.is_zero()) rw.erase(it);
    } else {
        rw.insert(it, {c, v});
    }
}

int sparse_rank(SparseMat m) {
    // rows holding each column, maintained incrementally; pivot rule:
    // shortest live row, then its rarest column
    std::vector<int> col_count(static_cast<size_t>(m.cols), 0);
    std::vector<bool> row_done(static_cast<size_t>(m.rows), false);
    for (auto& r : m.row)
        for (auto& [c, v] : r) ++col_count[static_cast<size_t>(c)];

    int rank = 0;
    for (;;) {
        int br = -1;
        size_t best_len = 0;
        for (int r = 0; r < m.rows; ++r) {
            if (row_done[static_cast<size_t>(r)] || m.row[static_cast<size_t>(r)].empty()) continue;
            size_t len = m.row[static_cast<size_t>(r)].size();
            if (br < 0 || len < best_len) { br = r; best_len = len; }
            if (best_len == 1) break;
        }
        if (br < 0) break;
        int bc = -1, bc_count = 0;
        for (auto& [c, v] : m.row[static_cast<size_t>(br)])
            if (bc < 0 || col_count[static_cast<size_t>(c)] < bc_count) {
                bc = c;
                bc_count = col_count[static_cast<size_t>(c)];
            }

        auto pivot_row = m.row[static_cast<size_t>(br)];
        Scalar piv;
        for (auto& [c, v] : pivot_row)
            if (c == bc) piv = v;
        Scalar inv = piv.inverse();
        row_done[static_cast<size_t>(br)] = true;
        for (auto& [c, v] : pivot_row) --col_count[static_cast<size_t>(c)];
        ++rank;

        for (int r = 0; r < m.rows; ++r) {
            if (row_done[static_cast<size_t>(r)]) continue;
            auto& rw = m.row[static_cast<size_t>(r)];
            auto it = std::lower_bound(rw.begin(), rw.end(), bc,
                                       [](const auto& p, int col) { return p.first < col; });
            if (it == rw.end() || it->first != bc) continue;
            Scalar f = it->second * inv;
            for (auto& [c, v] : rw) --col_count[static_cast<size_t>(c)];
            std::vector<std::pair<int, Scalar>> merged;
            merged.reserve(rw.size() + pivot_row.size());
            auto ia = rw.begin();
            auto ib = pivot_row.begin();
            while (ia != rw.end() || ib != pivot_row.end()) {
                if (ib == pivot_row.end() || (ia != rw.end() && ia->first < ib->first)) {
                    merged.push_back(*ia++);
                } else if (ia == rw.end() || ib->first < ia->first) {
                    Scalar v = -(f * ib->second);
                    if (!v.is_zero()) merged.push_back({ib->first, v});
                    ++ib;
                } else {
                    Scalar v = ia->second - f * ib->second;
                    if (!v.is_zero()) merged.push_back({ia->first, v});
                    ++ia; ++ib;
                }
            }
            rw = std::move(merged);
            for (auto& [c, v] : rw) ++col_count[static_cast<size_t>(c)];
        }
        m.row[static_cast<size_t>(br)].clear();
    }
    return rank;
}

} // namespace superjet
