#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "plcg/util.hpp"

namespace plcg {

/// Dense integer matrix with exact arithmetic. Small sizes only (ranks and
/// component groups at desk scale); all products overflow-checked.
class IntMat {
  public:
    IntMat() = default;
    IntMat(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, 0) {}
    static IntMat identity(int n);
    static IntMat from_rows(const std::vector<std::vector<std::int64_t>>& rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    std::int64_t& at(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
    std::int64_t at(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }

    bool is_zero() const;
    bool is_identity() const;

    IntMat mul(const IntMat& o) const;
    IntMat add(const IntMat& o) const;
    IntMat sub(const IntMat& o) const;
    IntMat transpose() const;
    IntMat neg() const;
    /// Columns [c0, c1) as a new matrix.
    IntMat col_slice(int c0, int c1) const;
    /// Horizontal concatenation.
    IntMat hcat(const IntMat& o) const;

    std::int64_t det() const;  // Bareiss, exact
    /// Exact inverse; requires |det| == 1.
    IntMat unimodular_inverse() const;

    bool operator==(const IntMat& o) const = default;
    std::string str() const;
    std::vector<std::vector<std::int64_t>> to_rows() const;

  private:
    int rows_ = 0, cols_ = 0;
    std::vector<std::int64_t> a_;
};

/// Column-style Hermite normal form of the lattice spanned by the columns.
/// Returns a canonical basis matrix (rows x rank) for the column lattice:
/// pivots positive, entries to the right of each pivot reduced. Two integer
/// matrices span the same column lattice iff their HNFs are equal.
IntMat column_hnf(const IntMat& m);

/// Basis of the integer kernel {v : m v = 0} as columns (cols x k). The
/// kernel lattice of an integer matrix is saturated by construction.
IntMat integer_kernel(const IntMat& m);

/// Saturation of the column lattice of m inside Z^rows: the set of integer
/// vectors lying in the rational column span. Computed as the integer kernel
/// of the integer kernel of m^T. Result is in column HNF.
IntMat saturate_columns(const IntMat& m);

/// Rank over Q.
int rational_rank(const IntMat& m);

/// Smith normal form diagonal (nonnegative, each dividing the next) of m.
std::vector<std::int64_t> smith_diagonal(const IntMat& m);

}  // namespace plcg
