#include "torelli/sparse_matrix.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace torelli {

SparseMatrix::SparseMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0)
    throw std::invalid_argument("negative matrix dimension");
}

void SparseMatrix::set(int r, int c, const Rational& v) {
  if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
    throw std::out_of_range("matrix index out of range");
  if (is_zero(v))
    entries_.erase({r, c});
  else
    entries_[{r, c}] = v;
}

void SparseMatrix::add(int r, int c, const Rational& v) {
  set(r, c, get(r, c) + v);
}

Rational SparseMatrix::get(int r, int c) const {
  auto it = entries_.find({r, c});
  return it == entries_.end() ? Rational(0) : it->second;
}

SparseMatrix SparseMatrix::transpose() const {
  SparseMatrix t(cols_, rows_);
  for (const auto& [rc, v] : entries_) t.set(rc.second, rc.first, v);
  return t;
}

std::vector<SparseVec> SparseMatrix::row_vectors() const {
  std::vector<SparseVec> rows(rows_);
  for (const auto& [rc, v] : entries_) rows[rc.first][rc.second] = v;
  return rows;
}

namespace {

// row -= factor * pivot ; both sorted sparse maps. factor is taken by value
// because callers pass entries of `row` itself.
void axpy(SparseVec& row, const Rational factor, const SparseVec& pivot) {
  for (const auto& [c, v] : pivot) {
    auto it = row.find(c);
    if (it == row.end()) {
      row[c] = -factor * v;
    } else {
      it->second -= factor * v;
      if (is_zero(it->second)) row.erase(it);
    }
  }
}

int leading_col(const SparseVec& row) {
  return row.empty() ? std::numeric_limits<int>::max() : row.begin()->first;
}

}  // namespace

int rank_of_rows(std::vector<SparseVec> rows) {
  int r = 0;
  while (true) {
    // Next pivot column = least leading column among remaining rows.
    int col = std::numeric_limits<int>::max();
    for (const auto& row : rows) col = std::min(col, leading_col(row));
    if (col == std::numeric_limits<int>::max()) break;

    // Among rows leading at `col`, pick the smallest-bit-size pivot.
    int pivot = -1;
    std::size_t best_bits = 0;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (leading_col(rows[i]) != col) continue;
      std::size_t bits = bit_size(rows[i].begin()->second);
      if (pivot < 0 || bits < best_bits) {
        pivot = static_cast<int>(i);
        best_bits = bits;
      }
    }

    SparseVec prow = std::move(rows[pivot]);
    rows.erase(rows.begin() + pivot);
    const Rational pv = prow.begin()->second;
    for (auto& row : rows) {
      if (leading_col(row) == col) axpy(row, row.begin()->second / pv, prow);
    }
    ++r;
  }
  return r;
}

int rank(const SparseMatrix& m) { return rank_of_rows(m.row_vectors()); }

std::vector<SparseVec> kernel_basis(const SparseMatrix& m) {
  // Full reduced row echelon form, tracking pivot columns.
  std::vector<SparseVec> rows = m.row_vectors();
  std::vector<SparseVec> echelon;
  std::vector<int> pivot_cols;

  std::vector<SparseVec> work = std::move(rows);
  while (true) {
    int col = std::numeric_limits<int>::max();
    for (const auto& row : work) col = std::min(col, leading_col(row));
    if (col == std::numeric_limits<int>::max()) break;

    int pivot = -1;
    std::size_t best_bits = 0;
    for (std::size_t i = 0; i < work.size(); ++i) {
      if (leading_col(work[i]) != col) continue;
      std::size_t bits = bit_size(work[i].begin()->second);
      if (pivot < 0 || bits < best_bits) {
        pivot = static_cast<int>(i);
        best_bits = bits;
      }
    }

    SparseVec prow = std::move(work[pivot]);
    work.erase(work.begin() + pivot);
    const Rational pv = prow.begin()->second;
    for (auto& [c, v] : prow) v /= pv;
    for (auto& row : work) {
      if (leading_col(row) == col) axpy(row, row.begin()->second, prow);
    }
    echelon.push_back(std::move(prow));
    pivot_cols.push_back(col);
  }

  // Back-substitute to reduced form.
  for (int i = static_cast<int>(echelon.size()) - 1; i >= 0; --i) {
    for (int j = 0; j < i; ++j) {
      auto it = echelon[j].find(pivot_cols[i]);
      if (it != echelon[j].end()) axpy(echelon[j], it->second, echelon[i]);
    }
  }

  std::vector<bool> is_pivot(m.cols(), false);
  for (int c : pivot_cols) is_pivot[c] = true;

  std::vector<SparseVec> basis;
  for (int f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    SparseVec v;
    v[f] = 1;
    for (std::size_t i = 0; i < echelon.size(); ++i) {
      auto it = echelon[i].find(f);
      if (it != echelon[i].end()) v[pivot_cols[i]] = -it->second;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

int span_dimension(const std::vector<SparseVec>& vectors, int length) {
  for (const auto& v : vectors) {
    if (!v.empty() && (v.begin()->first < 0 || v.rbegin()->first >= length))
      throw std::invalid_argument("vector index exceeds stated length");
  }
  return rank_of_rows(vectors);
}

}  // namespace torelli
