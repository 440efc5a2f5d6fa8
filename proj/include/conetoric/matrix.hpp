#pragma once

#include "conetoric/types.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace conetoric {

// Dense row-major matrix over Z. Sizes here are tiny (rank <= ~6, a couple of
// dozen columns), so everything is the straightforward exact algorithm.
class IntegerMatrix {
 public:
  IntegerMatrix() = default;
  IntegerMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static IntegerMatrix identity(std::size_t n);
  // `cols` disambiguates the empty case.
  static IntegerMatrix from_rows(const std::vector<LatticeVector>& rows,
                                 std::size_t cols);
  static IntegerMatrix from_columns(const std::vector<LatticeVector>& columns,
                                    std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Int& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Int& at(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  LatticeVector row(std::size_t r) const;
  LatticeVector column(std::size_t c) const;
  std::vector<LatticeVector> row_vectors() const;

  IntegerMatrix transposed() const;
  IntegerMatrix operator*(const IntegerMatrix& rhs) const;
  LatticeVector apply(const LatticeVector& x) const;
  RationalVector apply(const RationalVector& x) const;

  bool operator==(const IntegerMatrix& rhs) const = default;

  // Fraction-free Bareiss elimination; square matrices only.
  Int determinant() const;
  bool is_unimodular() const;
  // Exact inverse of a matrix with determinant +-1.
  IntegerMatrix inverse_unimodular() const;

  IntegerMatrix columns_subset(const std::vector<std::size_t>& idx) const;

  void swap_rows(std::size_t i, std::size_t j);
  void swap_cols(std::size_t i, std::size_t j);
  void negate_row(std::size_t i);
  // row_dst += f * row_src
  void add_row_multiple(std::size_t dst, std::size_t src, const Int& f);
  void add_col_multiple(std::size_t dst, std::size_t src, const Int& f);

  std::string to_string() const;  // [[1,0],[0,1]]

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Int> data_;
};

// Exact dense rational linear algebra (Gaussian elimination).
using RationalMatrix = std::vector<RationalVector>;

RationalMatrix to_rational(const IntegerMatrix& m);
RationalMatrix rational_from_rows(const std::vector<LatticeVector>& rows);

std::size_t rational_rank(RationalMatrix m);

// One solution of a x = b, if any (a given as rows; x has a[0].size() coords).
std::optional<RationalVector> solve_rational(const RationalMatrix& a,
                                             const RationalVector& b);

// Basis of {x : a x = 0}.
std::vector<RationalVector> rational_nullspace(const RationalMatrix& a,
                                               std::size_t cols);

}  // namespace conetoric
