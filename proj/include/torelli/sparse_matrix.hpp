#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "torelli/rational.hpp"

namespace torelli {

// Sparse vector: column index -> nonzero coefficient, ordered by index.
using SparseVec = std::map<int, Rational>;

// Sparse matrix over Q. Entries are kept in (row, col) order so that every
// elimination walks the data in the same order and results are reproducible.
class SparseMatrix {
 public:
  SparseMatrix(int rows, int cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  void set(int r, int c, const Rational& v);
  void add(int r, int c, const Rational& v);
  Rational get(int r, int c) const;

  const std::map<std::pair<int, int>, Rational>& entries() const {
    return entries_;
  }

  SparseMatrix transpose() const;

  // Row-major view used by the elimination routines.
  std::vector<SparseVec> row_vectors() const;

 private:
  int rows_;
  int cols_;
  std::map<std::pair<int, int>, Rational> entries_;
};

// Rank over Q by fraction-exact Gaussian elimination. Pivot rows are chosen
// by smallest combined bit size of the pivot entry, ties by row order.
int rank(const SparseMatrix& m);

// Same elimination, starting from an explicit list of sparse rows.
int rank_of_rows(std::vector<SparseVec> rows);

// Basis of the right null space in reduced-echelon parametrization: one
// vector per free column, listed by ascending free column, with entry 1 at
// the free column itself. size == cols - rank.
std::vector<SparseVec> kernel_basis(const SparseMatrix& m);

// Rank of the span of the given vectors. Throws on ragged input.
int span_dimension(const std::vector<SparseVec>& vectors, int length);

}  // namespace torelli
