#include "tqdha/matrix.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace tqdha {

namespace {

SparseRow normalize_entries(std::vector<std::pair<int, FieldElement>> entries) {
  std::sort(entries.begin(), entries.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  SparseRow out;
  for (auto& [c, v] : entries) {
    if (!out.empty() && out.back().first == c)
      out.back().second += v;
    else
      out.emplace_back(c, std::move(v));
  }
  std::erase_if(out, [](const auto& e) { return e.second.is_zero(); });
  return out;
}

// Reduces `acc` against the current pivot rows.  Pivot rows only carry
// entries to the right of their pivot, so a single left-to-right sweep
// suffices even though entries get added behind the cursor's right.
void reduce_against(std::map<int, FieldElement>& acc, const std::vector<int>& pivot_index,
                    const std::vector<SparseRow>& basis) {
  auto it = acc.begin();
  while (it != acc.end()) {
    int col = it->first;
    int p = pivot_index[static_cast<size_t>(col)];
    if (p < 0) {
      ++it;
      continue;
    }
    FieldElement c = it->second;
    for (const auto& [bc, bv] : basis[static_cast<size_t>(p)]) {
      auto [pos, inserted] = acc.try_emplace(bc);
      pos->second -= c * bv;
      if (pos->second.is_zero()) acc.erase(pos);
    }
    it = acc.upper_bound(col);
  }
}

}  // namespace

ExactMatrix::ExactMatrix(Field field, int rows, int cols)
    : field_(std::move(field)), cols_(cols), rows_(static_cast<size_t>(rows)) {}

ExactMatrix ExactMatrix::identity(Field field, int n) {
  ExactMatrix m(field, n, n);
  for (int i = 0; i < n; ++i) m.rows_[static_cast<size_t>(i)].emplace_back(i, field.one());
  return m;
}

ExactMatrix ExactMatrix::from_dense(Field field, const std::vector<Vector>& rows, int cols) {
  ExactMatrix m(field, 0, cols);
  for (const auto& r : rows) {
    if (static_cast<int>(r.size()) != cols) throw DimensionMismatch("ragged dense matrix");
    std::vector<std::pair<int, FieldElement>> e;
    for (int c = 0; c < cols; ++c) e.emplace_back(c, r[static_cast<size_t>(c)]);
    m.append_row(std::move(e));
  }
  return m;
}

FieldElement ExactMatrix::at(int r, int c) const {
  const auto& row = rows_[static_cast<size_t>(r)];
  auto it = std::lower_bound(row.begin(), row.end(), c,
                             [](const auto& e, int col) { return e.first < col; });
  if (it != row.end() && it->first == c) return it->second;
  return field_.zero();
}

void ExactMatrix::set(int r, int c, const FieldElement& v) {
  auto& row = rows_[static_cast<size_t>(r)];
  auto it = std::lower_bound(row.begin(), row.end(), c,
                             [](const auto& e, int col) { return e.first < col; });
  if (it != row.end() && it->first == c) {
    if (v.is_zero())
      row.erase(it);
    else
      it->second = v;
  } else if (!v.is_zero()) {
    row.insert(it, {c, v});
  }
}

int ExactMatrix::append_row(std::vector<std::pair<int, FieldElement>> entries) {
  for (const auto& e : entries)
    if (e.first < 0 || e.first >= cols_) throw DimensionMismatch("column index out of range");
  rows_.push_back(normalize_entries(std::move(entries)));
  return rows() - 1;
}

Vector ExactMatrix::apply(std::span<const FieldElement> x) const {
  if (static_cast<int>(x.size()) != cols_) throw DimensionMismatch("apply: vector length != cols");
  Vector out(rows_.size(), field_.zero());
  for (size_t r = 0; r < rows_.size(); ++r)
    for (const auto& [c, v] : rows_[r]) out[r] += v * x[static_cast<size_t>(c)];
  return out;
}

std::optional<int> ExactMatrix::first_violated_row(std::span<const FieldElement> x) const {
  if (static_cast<int>(x.size()) != cols_) throw DimensionMismatch("vector length != cols");
  for (size_t r = 0; r < rows_.size(); ++r) {
    FieldElement acc;
    for (const auto& [c, v] : rows_[r]) {
      const auto& xc = x[static_cast<size_t>(c)];
      if (!xc.is_zero()) acc += v * xc;
    }
    if (!acc.is_zero()) return static_cast<int>(r);
  }
  return std::nullopt;
}

ExactMatrix ExactMatrix::operator*(const ExactMatrix& rhs) const {
  if (cols_ != rhs.rows()) throw DimensionMismatch("matrix product shape mismatch");
  ExactMatrix out(field_, rows(), rhs.cols());
  for (size_t r = 0; r < rows_.size(); ++r) {
    std::vector<std::pair<int, FieldElement>> acc;
    for (const auto& [k, a] : rows_[r])
      for (const auto& [c, b] : rhs.rows_[static_cast<size_t>(k)]) acc.emplace_back(c, a * b);
    out.rows_[r] = normalize_entries(std::move(acc));
  }
  return out;
}

bool ExactMatrix::operator==(const ExactMatrix& rhs) const {
  if (cols_ != rhs.cols_ || rows_.size() != rhs.rows_.size()) return false;
  for (size_t r = 0; r < rows_.size(); ++r) {
    const auto& a = rows_[r];
    const auto& b = rhs.rows_[r];
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i)
      if (a[i].first != b[i].first || a[i].second != b[i].second) return false;
  }
  return true;
}

bool ExactMatrix::is_identity() const {
  if (rows() != cols_) return false;
  for (size_t r = 0; r < rows_.size(); ++r) {
    const auto& row = rows_[r];
    if (row.size() != 1 || row[0].first != static_cast<int>(r) || !row[0].second.is_one()) return false;
  }
  return true;
}

FieldElement ExactMatrix::determinant() const {
  if (rows() != cols_) throw DimensionMismatch("determinant of a non-square matrix");
  const int n = cols_;
  std::vector<Vector> a(static_cast<size_t>(n), Vector(static_cast<size_t>(n), field_.zero()));
  for (int r = 0; r < n; ++r)
    for (const auto& [c, v] : rows_[static_cast<size_t>(r)]) a[static_cast<size_t>(r)][static_cast<size_t>(c)] = v;
  FieldElement det = field_.one();
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    for (int r = c; r < n; ++r)
      if (!a[static_cast<size_t>(r)][static_cast<size_t>(c)].is_zero()) {
        piv = r;
        break;
      }
    if (piv < 0) return field_.zero();
    if (piv != c) {
      std::swap(a[static_cast<size_t>(piv)], a[static_cast<size_t>(c)]);
      det = -det;
    }
    const FieldElement p = a[static_cast<size_t>(c)][static_cast<size_t>(c)];
    det *= p;
    FieldElement pinv = p.inverse();
    for (int r = c + 1; r < n; ++r) {
      FieldElement f = a[static_cast<size_t>(r)][static_cast<size_t>(c)] * pinv;
      if (f.is_zero()) continue;
      for (int k = c; k < n; ++k)
        a[static_cast<size_t>(r)][static_cast<size_t>(k)] -= f * a[static_cast<size_t>(c)][static_cast<size_t>(k)];
    }
  }
  return det;
}

ExactMatrix ExactMatrix::inverse() const {
  if (rows() != cols_) throw DimensionMismatch("inverse of a non-square matrix");
  const int n = cols_;
  // Row-reduce [A | I].
  ExactMatrix aug(field_, 0, 2 * n);
  for (int r = 0; r < n; ++r) {
    std::vector<std::pair<int, FieldElement>> e(rows_[static_cast<size_t>(r)].begin(),
                                                rows_[static_cast<size_t>(r)].end());
    e.emplace_back(n + r, field_.one());
    aug.append_row(std::move(e));
  }
  EchelonForm ef = row_reduce(aug);
  if (static_cast<int>(ef.pivot_cols.size()) < n || ef.pivot_cols[static_cast<size_t>(n - 1)] != n - 1)
    throw NonInvertible("singular matrix");
  ExactMatrix inv(field_, n, n);
  for (int r = 0; r < n; ++r)
    for (const auto& [c, v] : ef.rows[static_cast<size_t>(r)])
      if (c >= n) inv.rows_[static_cast<size_t>(r)].emplace_back(c - n, v);
  return inv;
}

EchelonForm row_reduce(const ExactMatrix& m) {
  const int cols = m.cols();
  std::vector<int> pivot_index(static_cast<size_t>(cols), -1);
  std::vector<SparseRow> basis;
  std::vector<int> basis_pivot;

  // Sparse rows first keeps fill-in low; the reduced echelon form does not
  // depend on the order rows are absorbed.
  std::vector<int> order(static_cast<size_t>(m.rows()));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return m.row(a).size() < m.row(b).size(); });

  for (int r : order) {
    const auto& row = m.row(r);
    if (row.empty()) continue;
    std::map<int, FieldElement> acc(row.begin(), row.end());
    reduce_against(acc, pivot_index, basis);
    if (acc.empty()) continue;
    const int pc = acc.begin()->first;
    const FieldElement inv = acc.begin()->second.inverse();
    SparseRow nr;
    nr.reserve(acc.size());
    for (auto& [c, v] : acc) nr.emplace_back(c, v * inv);
    pivot_index[static_cast<size_t>(pc)] = static_cast<int>(basis.size());
    basis.push_back(std::move(nr));
    basis_pivot.push_back(pc);
  }

  // Back-substitution, largest pivot first, to reach the reduced form.
  std::vector<int> by_pivot(basis.size());
  std::iota(by_pivot.begin(), by_pivot.end(), 0);
  std::sort(by_pivot.begin(), by_pivot.end(),
            [&](int a, int b) { return basis_pivot[static_cast<size_t>(a)] > basis_pivot[static_cast<size_t>(b)]; });
  for (int k : by_pivot) {
    auto& row = basis[static_cast<size_t>(k)];
    std::map<int, FieldElement> acc;
    bool touched = false;
    for (const auto& [c, v] : row) {
      if (c != basis_pivot[static_cast<size_t>(k)] && pivot_index[static_cast<size_t>(c)] >= 0) touched = true;
    }
    if (!touched) continue;
    for (const auto& [c, v] : row) acc.emplace(c, v);
    // Clear every non-leading pivot column using already-final rows.
    for (auto it = std::next(acc.begin()); it != acc.end();) {
      int col = it->first;
      int p = pivot_index[static_cast<size_t>(col)];
      if (p < 0) {
        ++it;
        continue;
      }
      FieldElement c = it->second;
      for (const auto& [bc, bv] : basis[static_cast<size_t>(p)]) {
        auto [pos, inserted] = acc.try_emplace(bc);
        pos->second -= c * bv;
        if (pos->second.is_zero()) acc.erase(pos);
      }
      it = acc.upper_bound(col);
    }
    row.assign(acc.begin(), acc.end());
  }

  EchelonForm ef;
  ef.cols = cols;
  std::vector<int> sorted(basis.size());
  std::iota(sorted.begin(), sorted.end(), 0);
  std::sort(sorted.begin(), sorted.end(),
            [&](int a, int b) { return basis_pivot[static_cast<size_t>(a)] < basis_pivot[static_cast<size_t>(b)]; });
  for (int k : sorted) {
    ef.pivot_cols.push_back(basis_pivot[static_cast<size_t>(k)]);
    ef.rows.push_back(std::move(basis[static_cast<size_t>(k)]));
  }
  return ef;
}

int rank(const ExactMatrix& m) { return static_cast<int>(row_reduce(m).pivot_cols.size()); }

std::vector<Vector> nullspace(const ExactMatrix& m) {
  EchelonForm ef = row_reduce(m);
  const int cols = m.cols();
  std::vector<bool> is_pivot(static_cast<size_t>(cols), false);
  for (int p : ef.pivot_cols) is_pivot[static_cast<size_t>(p)] = true;
  std::vector<Vector> basis;
  for (int f = 0; f < cols; ++f) {
    if (is_pivot[static_cast<size_t>(f)]) continue;
    Vector x(static_cast<size_t>(cols), m.field().zero());
    x[static_cast<size_t>(f)] = m.field().one();
    for (size_t k = 0; k < ef.rows.size(); ++k) {
      for (const auto& [c, v] : ef.rows[k]) {
        if (c == f) {
          x[static_cast<size_t>(ef.pivot_cols[k])] = -v;
          break;
        }
        if (c > f) break;
      }
    }
    basis.push_back(std::move(x));
  }
  return basis;
}

int rank_of_vectors(const Field& field, const std::vector<Vector>& vs, int length) {
  ExactMatrix m(field, 0, length);
  for (const auto& v : vs) {
    std::vector<std::pair<int, FieldElement>> e;
    for (int c = 0; c < length; ++c)
      if (!v[static_cast<size_t>(c)].is_zero()) e.emplace_back(c, v[static_cast<size_t>(c)]);
    m.append_row(std::move(e));
  }
  return rank(m);
}

bool same_span(const Field& field, const std::vector<Vector>& a, const std::vector<Vector>& b, int length) {
  std::vector<Vector> both = a;
  both.insert(both.end(), b.begin(), b.end());
  int ra = rank_of_vectors(field, a, length);
  int rb = rank_of_vectors(field, b, length);
  return ra == rb && ra == rank_of_vectors(field, both, length);
}

}  // namespace tqdha
