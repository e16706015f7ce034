#include "plcg/intmat.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace plcg {

IntMat IntMat::identity(int n) {
    IntMat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMat IntMat::from_rows(const std::vector<std::vector<std::int64_t>>& rows) {
    int r = static_cast<int>(rows.size());
    int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
    IntMat m(r, c);
    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(rows[static_cast<size_t>(i)].size()) != c)
            throw std::invalid_argument("ragged matrix rows");
        for (int j = 0; j < c; ++j) m.at(i, j) = rows[static_cast<size_t>(i)][static_cast<size_t>(j)];
    }
    return m;
}

bool IntMat::is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](std::int64_t v) { return v == 0; });
}

bool IntMat::is_identity() const {
    if (rows_ != cols_) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (at(i, j) != (i == j ? 1 : 0)) return false;
    return true;
}

IntMat IntMat::mul(const IntMat& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix multiply shape mismatch");
    IntMat r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            std::int64_t v = at(i, k);
            if (v == 0) continue;
            for (int j = 0; j < o.cols_; ++j)
                r.at(i, j) = checked_add(r.at(i, j), checked_mul(v, o.at(k, j)));
        }
    return r;
}

IntMat IntMat::add(const IntMat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix add shape");
    IntMat r(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = checked_add(a_[i], o.a_[i]);
    return r;
}

IntMat IntMat::sub(const IntMat& o) const { return add(o.neg()); }

IntMat IntMat::neg() const {
    IntMat r(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = -a_[i];
    return r;
}

IntMat IntMat::transpose() const {
    IntMat r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

IntMat IntMat::col_slice(int c0, int c1) const {
    IntMat r(rows_, c1 - c0);
    for (int i = 0; i < rows_; ++i)
        for (int j = c0; j < c1; ++j) r.at(i, j - c0) = at(i, j);
    return r;
}

IntMat IntMat::hcat(const IntMat& o) const {
    if (rows_ != o.rows_) throw std::invalid_argument("hcat row mismatch");
    IntMat r(rows_, cols_ + o.cols_);
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
        for (int j = 0; j < o.cols_; ++j) r.at(i, cols_ + j) = o.at(i, j);
    }
    return r;
}

std::int64_t IntMat::det() const {
    if (rows_ != cols_) throw std::invalid_argument("det of non-square matrix");
    int n = rows_;
    if (n == 0) return 1;
    // Bareiss fraction-free elimination.
    std::vector<__int128> b(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) b[static_cast<size_t>(i) * n + j] = at(i, j);
    __int128 prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (b[static_cast<size_t>(k) * n + k] == 0) {
            int swap = -1;
            for (int i = k + 1; i < n; ++i)
                if (b[static_cast<size_t>(i) * n + k] != 0) { swap = i; break; }
            if (swap < 0) return 0;
            for (int j = 0; j < n; ++j)
                std::swap(b[static_cast<size_t>(k) * n + j], b[static_cast<size_t>(swap) * n + j]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                __int128 v = b[static_cast<size_t>(i) * n + j] * b[static_cast<size_t>(k) * n + k] -
                             b[static_cast<size_t>(i) * n + k] * b[static_cast<size_t>(k) * n + j];
                b[static_cast<size_t>(i) * n + j] = v / prev;
            }
        prev = b[static_cast<size_t>(k) * n + k];
    }
    __int128 d = sign * b[static_cast<size_t>(n - 1) * n + (n - 1)];
    if (d > INT64_MAX || d < INT64_MIN) throw std::overflow_error("determinant overflow");
    return static_cast<std::int64_t>(d);
}

namespace {

// Row Hermite normal form with transform: returns (H, U) with U*A = H,
// U unimodular. H canonical: pivots positive, entries above a pivot reduced
// into [0, pivot), pivot columns strictly increasing.
struct HnfResult {
    IntMat h;
    IntMat u;
    int rank = 0;
    std::vector<int> pivot_cols;
};

HnfResult row_hnf_transform(const IntMat& a) {
    int rows = a.rows(), cols = a.cols();
    IntMat h = a;
    IntMat u = IntMat::identity(rows);
    auto row_sub = [&](int dst, int src, std::int64_t q) {
        if (q == 0) return;
        for (int j = 0; j < cols; ++j) h.at(dst, j) = checked_add(h.at(dst, j), checked_mul(-q, h.at(src, j)));
        for (int j = 0; j < rows; ++j) u.at(dst, j) = checked_add(u.at(dst, j), checked_mul(-q, u.at(src, j)));
    };
    auto row_swap = [&](int i, int k) {
        if (i == k) return;
        for (int j = 0; j < cols; ++j) std::swap(h.at(i, j), h.at(k, j));
        for (int j = 0; j < rows; ++j) std::swap(u.at(i, j), u.at(k, j));
    };
    auto row_negate = [&](int i) {
        for (int j = 0; j < cols; ++j) h.at(i, j) = -h.at(i, j);
        for (int j = 0; j < rows; ++j) u.at(i, j) = -u.at(i, j);
    };

    int r = 0;
    std::vector<int> pivots;
    for (int c = 0; c < cols && r < rows; ++c) {
        // Euclid within column c on rows >= r.
        while (true) {
            int best = -1;
            for (int i = r; i < rows; ++i)
                if (h.at(i, c) != 0 && (best < 0 || std::abs(h.at(i, c)) < std::abs(h.at(best, c))))
                    best = i;
            if (best < 0) break;
            row_swap(r, best);
            bool cleared = true;
            for (int i = r + 1; i < rows; ++i) {
                if (h.at(i, c) == 0) continue;
                std::int64_t q = h.at(i, c) / h.at(r, c);
                row_sub(i, r, q);
                if (h.at(i, c) != 0) cleared = false;
            }
            if (cleared) break;
        }
        if (h.at(r, c) == 0) continue;
        if (h.at(r, c) < 0) row_negate(r);
        for (int i = 0; i < r; ++i) {
            // floor division for canonical reduction into [0, pivot)
            std::int64_t q = h.at(i, c) / h.at(r, c);
            if (h.at(i, c) % h.at(r, c) < 0) --q;
            row_sub(i, r, q);
        }
        pivots.push_back(c);
        ++r;
    }
    HnfResult res;
    res.h = std::move(h);
    res.u = std::move(u);
    res.rank = r;
    res.pivot_cols = std::move(pivots);
    return res;
}

}  // namespace

IntMat IntMat::unimodular_inverse() const {
    if (rows_ != cols_) throw std::invalid_argument("inverse of non-square matrix");
    std::int64_t d = det();
    if (d != 1 && d != -1) throw std::invalid_argument("matrix is not unimodular");
    auto res = row_hnf_transform(*this);
    if (!res.h.is_identity()) throw std::invalid_argument("unimodular matrix with non-identity HNF");
    return res.u;
}

IntMat column_hnf(const IntMat& m) {
    auto res = row_hnf_transform(m.transpose());
    // Drop zero rows, transpose back to columns.
    IntMat h(res.rank, m.rows());
    for (int i = 0; i < res.rank; ++i)
        for (int j = 0; j < m.rows(); ++j) h.at(i, j) = res.h.at(i, j);
    return h.transpose();
}

IntMat integer_kernel(const IntMat& m) {
    // Kernel of {v : m v = 0}: row-HNF the transpose with transform; zero rows
    // of H correspond to transform rows spanning the kernel lattice.
    auto res = row_hnf_transform(m.transpose());
    int total = m.cols();
    int k = total - res.rank;
    IntMat basis(total, k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < total; ++j) basis.at(j, i) = res.u.at(res.rank + i, j);
    return column_hnf(basis);
}

IntMat saturate_columns(const IntMat& m) {
    IntMat ann = integer_kernel(m.transpose());  // columns v with v^T m = 0
    return integer_kernel(ann.transpose());
}

int rational_rank(const IntMat& m) {
    return row_hnf_transform(m).rank;
}

std::vector<std::int64_t> smith_diagonal(const IntMat& m) {
    int rows = m.rows(), cols = m.cols();
    IntMat a = m;
    int n = std::min(rows, cols);
    std::vector<std::int64_t> diag(static_cast<size_t>(n), 0);
    int t = 0;
    while (t < n) {
        // Find minimal nonzero entry in the remaining submatrix.
        int pi = -1, pj = -1;
        for (int i = t; i < rows; ++i)
            for (int j = t; j < cols; ++j)
                if (a.at(i, j) != 0 &&
                    (pi < 0 || std::abs(a.at(i, j)) < std::abs(a.at(pi, pj)))) {
                    pi = i;
                    pj = j;
                }
        if (pi < 0) break;
        // Move pivot to (t, t).
        if (pi != t)
            for (int j = 0; j < cols; ++j) std::swap(a.at(t, j), a.at(pi, j));
        if (pj != t)
            for (int i = 0; i < rows; ++i) std::swap(a.at(i, t), a.at(i, pj));
        bool dirty = false;
        for (int i = t + 1; i < rows; ++i) {
            std::int64_t q = a.at(i, t) / a.at(t, t);
            if (q != 0)
                for (int j = 0; j < cols; ++j)
                    a.at(i, j) = checked_add(a.at(i, j), checked_mul(-q, a.at(t, j)));
            if (a.at(i, t) != 0) dirty = true;
        }
        for (int j = t + 1; j < cols; ++j) {
            std::int64_t q = a.at(t, j) / a.at(t, t);
            if (q != 0)
                for (int i = 0; i < rows; ++i)
                    a.at(i, j) = checked_add(a.at(i, j), checked_mul(-q, a.at(i, t)));
            if (a.at(t, j) != 0) dirty = true;
        }
        if (dirty) continue;
        // Divisibility sweep: pivot must divide every remaining entry.
        bool fixed = true;
        for (int i = t + 1; i < rows && fixed; ++i)
            for (int j = t + 1; j < cols && fixed; ++j)
                if (a.at(i, j) % a.at(t, t) != 0) {
                    for (int jj = 0; jj < cols; ++jj)
                        a.at(t, jj) = checked_add(a.at(t, jj), a.at(i, jj));
                    fixed = false;
                }
        if (!fixed) continue;
        diag[static_cast<size_t>(t)] = std::abs(a.at(t, t));
        ++t;
    }
    return diag;
}

std::string IntMat::str() const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < rows_; ++i) {
        os << (i ? "; " : "");
        for (int j = 0; j < cols_; ++j) os << (j ? "," : "") << at(i, j);
    }
    os << "]";
    return os.str();
}

std::vector<std::vector<std::int64_t>> IntMat::to_rows() const {
    std::vector<std::vector<std::int64_t>> out(static_cast<size_t>(rows_),
                                               std::vector<std::int64_t>(static_cast<size_t>(cols_)));
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out[static_cast<size_t>(i)][static_cast<size_t>(j)] = at(i, j);
    return out;
}

}  // namespace plcg
