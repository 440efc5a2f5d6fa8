#include "conetoric/matrix.hpp"

#include <boost/multiprecision/integer.hpp>

#include <sstream>

namespace conetoric {

IntegerMatrix IntegerMatrix::identity(std::size_t n) {
  IntegerMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntegerMatrix IntegerMatrix::from_rows(const std::vector<LatticeVector>& rows,
                                       std::size_t cols) {
  IntegerMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols)
      throw Error(ErrorCode::RankMismatch, "row length does not match matrix width");
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

IntegerMatrix IntegerMatrix::from_columns(
    const std::vector<LatticeVector>& columns, std::size_t rows) {
  IntegerMatrix m(rows, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != rows)
      throw Error(ErrorCode::RankMismatch, "column length does not match matrix height");
    for (std::size_t i = 0; i < rows; ++i) m.at(i, j) = columns[j][i];
  }
  return m;
}

LatticeVector IntegerMatrix::row(std::size_t r) const {
  LatticeVector out(cols_);
  for (std::size_t j = 0; j < cols_; ++j) out[j] = at(r, j);
  return out;
}

LatticeVector IntegerMatrix::column(std::size_t c) const {
  LatticeVector out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out[i] = at(i, c);
  return out;
}

std::vector<LatticeVector> IntegerMatrix::row_vectors() const {
  std::vector<LatticeVector> out;
  out.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out.push_back(row(i));
  return out;
}

IntegerMatrix IntegerMatrix::transposed() const {
  IntegerMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

IntegerMatrix IntegerMatrix::operator*(const IntegerMatrix& rhs) const {
  if (cols_ != rhs.rows_)
    throw Error(ErrorCode::RankMismatch, "matrix product size mismatch");
  IntegerMatrix p(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Int& a = at(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j)
        p.at(i, j) += a * rhs.at(k, j);
    }
  return p;
}

LatticeVector IntegerMatrix::apply(const LatticeVector& x) const {
  if (x.size() != cols_)
    throw Error(ErrorCode::RankMismatch, "matrix-vector size mismatch");
  LatticeVector out(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out[i] += at(i, j) * x[j];
  return out;
}

RationalVector IntegerMatrix::apply(const RationalVector& x) const {
  if (x.size() != cols_)
    throw Error(ErrorCode::RankMismatch, "matrix-vector size mismatch");
  RationalVector out(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out[i] += Rat(at(i, j)) * x[j];
  return out;
}

Int IntegerMatrix::determinant() const {
  if (rows_ != cols_)
    throw Error(ErrorCode::RankMismatch, "determinant of non-square matrix");
  const std::size_t n = rows_;
  if (n == 0) return 1;
  IntegerMatrix a = *this;
  Int prev = 1;
  Int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a.at(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a.at(p, k) == 0) ++p;
      if (p == n) return 0;
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        a.at(i, j) = (a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j)) / prev;
    prev = a.at(k, k);
  }
  return sign * a.at(n - 1, n - 1);
}

bool IntegerMatrix::is_unimodular() const {
  if (rows_ != cols_) return false;
  Int d = determinant();
  return d == 1 || d == -1;
}

IntegerMatrix IntegerMatrix::inverse_unimodular() const {
  Int d = determinant();
  if (d != 1 && d != -1)
    throw Error(ErrorCode::InvalidInput, "inverse_unimodular: determinant not +-1");
  const std::size_t n = rows_;
  // Gauss-Jordan over Q; the result is integral because |det| = 1.
  RationalMatrix work(n, RationalVector(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) work[i][j] = Rat(at(i, j));
    work[i][n + i] = 1;
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t p = col;
    while (work[p][col] == 0) ++p;
    std::swap(work[col], work[p]);
    Rat inv = Rat(1) / work[col][col];
    for (auto& x : work[col]) x *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || work[i][col] == 0) continue;
      Rat f = work[i][col];
      for (std::size_t j = 0; j < 2 * n; ++j) work[i][j] -= f * work[col][j];
    }
  }
  IntegerMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      out.at(i, j) = boost::multiprecision::numerator(work[i][n + j]);
  return out;
}

IntegerMatrix IntegerMatrix::columns_subset(
    const std::vector<std::size_t>& idx) const {
  IntegerMatrix m(rows_, idx.size());
  for (std::size_t j = 0; j < idx.size(); ++j)
    for (std::size_t i = 0; i < rows_; ++i) m.at(i, j) = at(i, idx[j]);
  return m;
}

void IntegerMatrix::swap_rows(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
}

void IntegerMatrix::swap_cols(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap(at(r, i), at(r, j));
}

void IntegerMatrix::negate_row(std::size_t i) {
  for (std::size_t c = 0; c < cols_; ++c) at(i, c) = -at(i, c);
}

void IntegerMatrix::add_row_multiple(std::size_t dst, std::size_t src,
                                     const Int& f) {
  for (std::size_t c = 0; c < cols_; ++c) at(dst, c) += f * at(src, c);
}

void IntegerMatrix::add_col_multiple(std::size_t dst, std::size_t src,
                                     const Int& f) {
  for (std::size_t r = 0; r < rows_; ++r) at(r, dst) += f * at(r, src);
}

std::string IntegerMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i) os << ',';
    os << '[';
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) os << ',';
      os << at(i, j);
    }
    os << ']';
  }
  os << ']';
  return os.str();
}

RationalMatrix to_rational(const IntegerMatrix& m) {
  RationalMatrix out(m.rows(), RationalVector(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = Rat(m.at(i, j));
  return out;
}

RationalMatrix rational_from_rows(const std::vector<LatticeVector>& rows) {
  RationalMatrix out;
  out.reserve(rows.size());
  for (const auto& r : rows) out.push_back(to_rational(r));
  return out;
}

std::size_t rational_rank(RationalMatrix m) {
  std::size_t rank = 0;
  if (m.empty()) return 0;
  const std::size_t cols = m[0].size();
  for (std::size_t col = 0; col < cols && rank < m.size(); ++col) {
    std::size_t p = rank;
    while (p < m.size() && m[p][col] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[rank], m[p]);
    for (std::size_t i = rank + 1; i < m.size(); ++i) {
      if (m[i][col] == 0) continue;
      Rat f = m[i][col] / m[rank][col];
      for (std::size_t j = col; j < cols; ++j) m[i][j] -= f * m[rank][j];
    }
    ++rank;
  }
  return rank;
}

namespace {

// Row-reduce [a | b]; returns reduced matrix, pivot column list, and whether
// the system is consistent (b may be empty for nullspace use).
struct Reduced {
  RationalMatrix m;
  std::vector<std::size_t> pivot_cols;
  bool consistent = true;
};

Reduced reduce(RationalMatrix m, std::size_t cols, bool has_rhs) {
  Reduced out;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < m.size(); ++col) {
    std::size_t p = rank;
    while (p < m.size() && m[p][col] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[rank], m[p]);
    Rat inv = Rat(1) / m[rank][col];
    for (auto& x : m[rank]) x *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == rank || m[i][col] == 0) continue;
      Rat f = m[i][col];
      for (std::size_t j = col; j < m[i].size(); ++j) m[i][j] -= f * m[rank][j];
    }
    out.pivot_cols.push_back(col);
    ++rank;
  }
  if (has_rhs) {
    for (std::size_t i = rank; i < m.size(); ++i)
      if (m[i][cols] != 0) out.consistent = false;
  }
  out.m = std::move(m);
  return out;
}

}  // namespace

std::optional<RationalVector> solve_rational(const RationalMatrix& a,
                                             const RationalVector& b) {
  if (a.size() != b.size())
    throw Error(ErrorCode::RankMismatch, "solve_rational: rhs size mismatch");
  if (a.empty()) return RationalVector{};
  const std::size_t cols = a[0].size();
  RationalMatrix aug(a.size(), RationalVector(cols + 1));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < cols; ++j) aug[i][j] = a[i][j];
    aug[i][cols] = b[i];
  }
  Reduced red = reduce(std::move(aug), cols, true);
  if (!red.consistent) return std::nullopt;
  RationalVector x(cols);
  for (std::size_t k = 0; k < red.pivot_cols.size(); ++k)
    x[red.pivot_cols[k]] = red.m[k][cols];
  return x;
}

std::vector<RationalVector> rational_nullspace(const RationalMatrix& a,
                                               std::size_t cols) {
  Reduced red = reduce(a, cols, false);
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : red.pivot_cols) is_pivot[c] = true;
  std::vector<RationalVector> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    RationalVector v(cols);
    v[free] = 1;
    for (std::size_t k = 0; k < red.pivot_cols.size(); ++k)
      v[red.pivot_cols[k]] = -red.m[k][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace conetoric
