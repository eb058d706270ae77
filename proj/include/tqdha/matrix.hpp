#pragma once

// Exact matrices over a Field, stored as sorted sparse rows.  The constraint
// systems built downstream have tens of thousands of rows but only a handful
// of nonzeros per row, while group matrices are tiny; one sparse layout
// serves both.

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "tqdha/field.hpp"

namespace tqdha {

/// (column, value) pairs with strictly increasing columns and no zero values.
using SparseRow = std::vector<std::pair<int, FieldElement>>;
using Vector = std::vector<FieldElement>;

class ExactMatrix {
 public:
  ExactMatrix(Field field, int rows, int cols);
  static ExactMatrix identity(Field field, int n);
  static ExactMatrix from_dense(Field field, const std::vector<Vector>& rows, int cols);

  int rows() const { return static_cast<int>(rows_.size()); }
  int cols() const { return cols_; }
  const Field& field() const { return field_; }

  FieldElement at(int r, int c) const;
  void set(int r, int c, const FieldElement& v);
  const SparseRow& row(int r) const { return rows_[static_cast<size_t>(r)]; }
  /// Appends a row given as unsorted (column, value) contributions; duplicate
  /// columns are summed and zeros dropped.  Returns the new row index.
  int append_row(std::vector<std::pair<int, FieldElement>> entries);

  Vector apply(std::span<const FieldElement> x) const;
  /// Index of the first row r with (Mx)_r != 0, if any.
  std::optional<int> first_violated_row(std::span<const FieldElement> x) const;

  ExactMatrix operator*(const ExactMatrix& rhs) const;
  bool operator==(const ExactMatrix& rhs) const;
  bool operator!=(const ExactMatrix& rhs) const { return !(*this == rhs); }
  bool is_identity() const;
  /// Determinant by exact elimination (square matrices only).
  FieldElement determinant() const;
  /// Inverse; throws NonInvertible when singular.
  ExactMatrix inverse() const;

 private:
  Field field_;
  int cols_;
  std::vector<SparseRow> rows_;
};

/// Reduced row echelon form: leftmost-nonzero pivots, each pivot row scaled to
/// leading coefficient 1 and cleared from every other row.
struct EchelonForm {
  int cols = 0;
  std::vector<int> pivot_cols;  // ascending
  std::vector<SparseRow> rows;  // rows[k] has its pivot at pivot_cols[k]
};

EchelonForm row_reduce(const ExactMatrix& m);
int rank(const ExactMatrix& m);

/// Basis of {x : Mx = 0}.  One vector per free column (ascending); the free
/// variable is set to 1, other free variables to 0.
std::vector<Vector> nullspace(const ExactMatrix& m);

/// Rank of a list of vectors (all of the given length).
int rank_of_vectors(const Field& field, const std::vector<Vector>& vs, int length);
/// True when the two lists of vectors span the same subspace.
bool same_span(const Field& field, const std::vector<Vector>& a, const std::vector<Vector>& b, int length);

}  // namespace tqdha
