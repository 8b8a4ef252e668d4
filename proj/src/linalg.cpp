#include "folrig/linalg.hpp"

#include <algorithm>
#include <limits>

namespace folrig {

FMatrix FMatrix::identity(int n) {
    FMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = FieldElem(1);
    return m;
}

FMatrix FMatrix::operator*(const FMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix product shape");
    FMatrix r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const FieldElem& v = at(i, k);
            if (v.is_zero()) continue;
            for (int j = 0; j < o.cols_; ++j) {
                if (o.at(k, j).is_zero()) continue;
                r.at(i, j) += v * o.at(k, j);
            }
        }
    return r;
}

FMatrix FMatrix::operator+(const FMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix sum shape");
    FMatrix r(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
    return r;
}

FMatrix FMatrix::operator-(const FMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix diff shape");
    FMatrix r(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
    return r;
}

FMatrix FMatrix::scale(const FieldElem& c) const {
    FMatrix r(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] * c;
    return r;
}

FMatrix FMatrix::transpose() const {
    FMatrix r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

FieldElem FMatrix::trace() const {
    FieldElem t(0);
    for (int i = 0; i < std::min(rows_, cols_); ++i) t += at(i, i);
    return t;
}

bool FMatrix::is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](const FieldElem& x) { return x.is_zero(); });
}

int FMatrix::rank() const {
    FMatrix m = *this;
    int rank = 0;
    for (int col = 0; col < cols_ && rank < rows_; ++col) {
        int piv = -1;
        for (int r = rank; r < rows_; ++r)
            if (!m.at(r, col).is_zero()) { piv = r; break; }
        if (piv < 0) continue;
        for (int j = 0; j < cols_; ++j) std::swap(m.at(rank, j), m.at(piv, j));
        FieldElem inv = m.at(rank, col).inverse();
        for (int j = col; j < cols_; ++j) m.at(rank, j) *= inv;
        for (int r = 0; r < rows_; ++r) {
            if (r == rank || m.at(r, col).is_zero()) continue;
            FieldElem f = m.at(r, col);
            for (int j = col; j < cols_; ++j) m.at(r, j) -= f * m.at(rank, j);
        }
        ++rank;
    }
    return rank;
}

FieldElem FMatrix::det() const {
    if (rows_ != cols_) throw std::invalid_argument("determinant of non-square matrix");
    FMatrix m = *this;
    FieldElem d(1);
    for (int col = 0; col < cols_; ++col) {
        int piv = -1;
        for (int r = col; r < rows_; ++r)
            if (!m.at(r, col).is_zero()) { piv = r; break; }
        if (piv < 0) return FieldElem(0);
        if (piv != col) {
            for (int j = 0; j < cols_; ++j) std::swap(m.at(col, j), m.at(piv, j));
            d = -d;
        }
        d *= m.at(col, col);
        FieldElem inv = m.at(col, col).inverse();
        for (int r = col + 1; r < rows_; ++r) {
            if (m.at(r, col).is_zero()) continue;
            FieldElem f = m.at(r, col) * inv;
            for (int j = col; j < cols_; ++j) m.at(r, j) -= f * m.at(col, j);
        }
    }
    return d;
}

std::optional<std::vector<FieldElem>> FMatrix::solve(const std::vector<FieldElem>& b) const {
    if ((int)b.size() != rows_) throw std::invalid_argument("rhs size");
    FMatrix m(rows_, cols_ + 1);
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) m.at(i, j) = at(i, j);
        m.at(i, cols_) = b[i];
    }
    std::vector<int> pivot_col;
    int rank = 0;
    for (int col = 0; col < cols_ && rank < rows_; ++col) {
        int piv = -1;
        for (int r = rank; r < rows_; ++r)
            if (!m.at(r, col).is_zero()) { piv = r; break; }
        if (piv < 0) continue;
        for (int j = 0; j <= cols_; ++j) std::swap(m.at(rank, j), m.at(piv, j));
        FieldElem inv = m.at(rank, col).inverse();
        for (int j = col; j <= cols_; ++j) m.at(rank, j) *= inv;
        for (int r = 0; r < rows_; ++r) {
            if (r == rank || m.at(r, col).is_zero()) continue;
            FieldElem f = m.at(r, col);
            for (int j = col; j <= cols_; ++j) m.at(r, j) -= f * m.at(rank, j);
        }
        pivot_col.push_back(col);
        ++rank;
    }
    for (int r = rank; r < rows_; ++r)
        if (!m.at(r, cols_).is_zero()) return std::nullopt;
    std::vector<FieldElem> x(cols_, FieldElem(0));
    for (int r = 0; r < rank; ++r) x[pivot_col[r]] = m.at(r, cols_);
    return x;
}

std::vector<std::vector<FieldElem>> FMatrix::nullspace() const {
    FMatrix m = *this;
    std::vector<int> pivot_col;
    int rank = 0;
    for (int col = 0; col < cols_ && rank < rows_; ++col) {
        int piv = -1;
        for (int r = rank; r < rows_; ++r)
            if (!m.at(r, col).is_zero()) { piv = r; break; }
        if (piv < 0) continue;
        for (int j = 0; j < cols_; ++j) std::swap(m.at(rank, j), m.at(piv, j));
        FieldElem inv = m.at(rank, col).inverse();
        for (int j = col; j < cols_; ++j) m.at(rank, j) *= inv;
        for (int r = 0; r < rows_; ++r) {
            if (r == rank || m.at(r, col).is_zero()) continue;
            FieldElem f = m.at(r, col);
            for (int j = col; j < cols_; ++j) m.at(r, j) -= f * m.at(rank, j);
        }
        pivot_col.push_back(col);
        ++rank;
    }
    std::vector<bool> is_pivot(cols_, false);
    for (int c : pivot_col) is_pivot[c] = true;
    std::vector<std::vector<FieldElem>> basis;
    for (int free = 0; free < cols_; ++free) {
        if (is_pivot[free]) continue;
        std::vector<FieldElem> v(cols_, FieldElem(0));
        v[free] = FieldElem(1);
        for (int r = 0; r < rank; ++r) v[pivot_col[r]] = -m.at(r, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

int sparse_rank(std::vector<std::map<int, FieldElem>> rows) {
    // eliminate choosing the shortest available row to limit fill
    int rank = 0;
    std::vector<bool> used(rows.size(), false);
    while (true) {
        int best = -1;
        size_t best_len = std::numeric_limits<size_t>::max();
        for (size_t r = 0; r < rows.size(); ++r) {
            if (used[r] || rows[r].empty()) continue;
            if (rows[r].size() < best_len) { best_len = rows[r].size(); best = (int)r; }
        }
        if (best < 0) break;
        used[best] = true;
        ++rank;
        int pcol = rows[best].begin()->first;
        FieldElem pinv = rows[best].begin()->second.inverse();
        for (size_t r = 0; r < rows.size(); ++r) {
            if (used[r] || rows[r].empty()) continue;
            auto it = rows[r].find(pcol);
            if (it == rows[r].end()) continue;
            FieldElem f = it->second * pinv;
            for (const auto& [c, v] : rows[best]) {
                auto jt = rows[r].find(c);
                if (jt == rows[r].end()) {
                    rows[r].emplace(c, -(f * v));
                } else {
                    jt->second -= f * v;
                    if (jt->second.is_zero()) rows[r].erase(jt);
                }
            }
        }
    }
    return rank;
}

}  // namespace folrig
