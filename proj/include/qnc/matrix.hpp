#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <vector>

#include "qnc/error.hpp"

namespace qnc {

using Int = mpz_class;
using Rat = mpq_class;
using IntVec = std::vector<Int>;

// Dense integer matrix over GMP integers. All algorithms below are exact;
// no floating point is used anywhere in this project.
class IntMat {
 public:
  IntMat() = default;
  IntMat(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols, Int(0)) {}
  IntMat(std::initializer_list<std::initializer_list<long>> init);

  static IntMat identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Int& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Int& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  bool operator==(const IntMat& o) const = default;

  IntMat transpose() const;
  IntMat operator*(const IntMat& o) const;
  IntMat operator+(const IntMat& o) const;
  IntMat operator-() const;
  IntVec apply(const IntVec& x) const;  // matrix * column vector

  bool is_zero() const;
  bool is_skew_symmetric() const;

  void swap_rows(std::size_t i, std::size_t j);
  void swap_cols(std::size_t i, std::size_t j);
  // row i += c * row j  /  col i += c * col j
  void add_row(std::size_t i, std::size_t j, const Int& c);
  void add_col(std::size_t i, std::size_t j, const Int& c);

  IntMat submatrix(const std::vector<std::size_t>& row_idx,
                   const std::vector<std::size_t>& col_idx) const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  IntVec a_;
};

// Exact determinant by fraction-free (Bareiss) elimination.
Int bareiss_det(IntMat m);

// Rank over the rationals; rows are gcd-normalized as elimination proceeds,
// which keeps entries small for the structured matrices this project meets.
std::size_t rank(IntMat m);

// Row-style Hermite normal form: H = U*M with U unimodular, pivots positive,
// zeros below each pivot, entries above a pivot reduced into [0, pivot).
// Zero rows sink to the bottom. H is the canonical basis of the row lattice.
IntMat row_hnf(IntMat m, IntMat* transform = nullptr);

// Canonical basis of {x : M x = 0} as an integer lattice (saturated: it is
// the full kernel of M over Z, not a finite-index sublattice). Basis vectors
// are returned as the rows of the result, in HNF.
IntMat integer_kernel(const IntMat& m);

// One integer solution of M x = b, if any.
std::optional<IntVec> solve_integer(const IntMat& m, const IntVec& b);

// Inverse of a unimodular matrix (throws contract_error otherwise).
IntMat unimodular_inverse(const IntMat& m);

Int dot(const IntVec& x, const IntVec& y);
IntVec operator+(const IntVec& x, const IntVec& y);
IntVec operator-(const IntVec& x, const IntVec& y);
IntVec scale(const Int& c, const IntVec& x);
bool is_zero(const IntVec& x);

}  // namespace qnc
