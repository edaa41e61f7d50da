#pragma once

#include <cstdint>
#include <tuple>
#include <utility>
#include <vector>

#include "upsilon/matrix.hpp"
#include "upsilon/numeric.hpp"

namespace upsilon {

using Index = std::uint32_t;
// Sorted by index, no stored zeros.
using SparseVector = std::vector<std::pair<Index, Integer>>;

struct Triplet {
  Index row;
  Index col;
  Integer value;
};

// Column-major sparse integer matrix.
class SparseMatrix {
 public:
  SparseMatrix() = default;
  SparseMatrix(Index rows, Index cols) : rows_(rows), cols_(cols), columns_(cols) {}

  // Duplicate (row, col) pairs are summed.
  static SparseMatrix from_triplets(Index rows, Index cols, std::vector<Triplet> triplets);
  static SparseMatrix from_dense(const IntMatrix& m);

  Index rows() const { return rows_; }
  Index cols() const { return cols_; }
  const SparseVector& column(Index c) const { return columns_[c]; }
  void set_column(Index c, SparseVector v);
  std::size_t nonzeros() const;
  bool is_zero() const { return nonzeros() == 0; }

  SparseMatrix transpose() const;
  IntMatrix to_dense() const;
  SparseVector apply(const SparseVector& v) const;
  friend SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b);
  friend bool operator==(const SparseMatrix& a, const SparseMatrix& b) = default;

 private:
  Index rows_ = 0;
  Index cols_ = 0;
  std::vector<SparseVector> columns_;
};

// Sparse vector helpers.
SparseVector canonical(SparseVector v);  // sort, merge duplicates, drop zeros
SparseVector combine(const Integer& a, const SparseVector& x, const Integer& b, const SparseVector& y);
Integer content(const SparseVector& v);
// Divides by the content and makes the leading entry positive.
void make_primitive(SparseVector& v);
std::vector<Integer> to_dense(const SparseVector& v, Index size);
SparseVector from_dense(const std::vector<Integer>& v);

// Exact rank over Q.
std::size_t sparse_rank(const SparseMatrix& m);
// Nonzero invariant factors d1 | d2 | ... of m over Z.
std::vector<Integer> elementary_divisors(const SparseMatrix& m);

// Incrementally built integer row echelon form. Coordinates below
// `pivot_limit` are ambient; coordinates at or above it are bookkeeping tags
// that never hold pivots, which lets callers recover linear relations.
class Echelon {
 public:
  explicit Echelon(Index pivot_limit) : limit_(pivot_limit), pivot_row_(pivot_limit, -1) {}

  Index pivot_limit() const { return limit_; }
  std::size_t rank() const { return rows_.size(); }
  const std::vector<SparseVector>& rows() const { return rows_; }

  // Returns r with r = scale*v + (integer combination of stored rows) and no
  // entry of r at a pivot column. If scale is non-null it is multiplied by the
  // positive factor applied to v.
  SparseVector reduce(SparseVector v, Integer* scale = nullptr) const;

  // Adds v to the span. Returns false if v is already in the ambient span; in
  // that case the remainder (supported on tags only) is written to residue.
  bool insert(SparseVector v, SparseVector* residue = nullptr);

  bool contains(const SparseVector& v) const;

 private:
  Index limit_;
  std::vector<std::int32_t> pivot_row_;
  std::vector<SparseVector> rows_;
};

// Integer basis of ker m (primitive vectors, spanning the kernel over Q).
std::vector<SparseVector> sparse_kernel_basis(const SparseMatrix& m);

}  // namespace upsilon
