#pragma once

#include <cstddef>
#include <vector>

#include "qnc/weyl.hpp"

namespace qnc {

// Integer skew-symmetric form.
struct SkewForm {
  IntMat entries;

  explicit SkewForm(IntMat m) : entries(std::move(m)) {
    require(entries.is_skew_symmetric(), "form is not skew-symmetric");
  }
  std::size_t dim() const { return entries.rows(); }
};

// Skew form on the word positions: entry (i,j) = (beta_i, beta_j) for i < j.
// This is the commutation form of the generators z_1..z_r.
SkewForm generator_form(const BetaGrid& grid);

// 0/1 matrix whose row (s,t) accumulates the first t occurrences of letter s;
// row (s,t) is the z-exponent vector of the minor-diagonal product
// z_{s,1}...z_{s,t}. Unitriangular in the position order.
IntMat prefix_matrix(const BetaGrid& grid);

// The form on the minor diagonals: A * L0 * A^T.
SkewForm minor_form(const BetaGrid& grid, const SkewForm& l0);

// z-exponent vector of the full diagonal product for letter s (all of its
// occurrences), and of the partial product through occurrence t (t = 0 gives
// the empty product).
IntVec covariant_exps(const BetaGrid& grid, std::size_t s);
IntVec minor_exps(const BetaGrid& grid, std::size_t s, std::size_t t);

// Exponent vectors in the minor basis (one coordinate per grid pair).
// half_column(s,t) is the product of the minors at (s,t) and (s,t-1) with the
// Cartan-negative neighbor minors raised to a[j][s]; consecutive half columns
// differ by an exchange-matrix column.
IntVec half_column_m(const BetaGrid& grid, std::size_t s, std::size_t t);
IntVec exchange_column_m(const BetaGrid& grid, std::size_t s, std::size_t t);

// Converts an exponent vector from the minor basis to the position basis.
IntVec minor_basis_to_z(const BetaGrid& grid, const IntVec& m_exps);

// Exchange columns B with the certified contract  Lbar * B[(s,t)] = 2 d_s e_{(s,t)}
// for every pair with a later occurrence of the same letter.
struct CompatiblePair {
  std::vector<std::pair<std::size_t, std::size_t>> columns;  // (letter, occ)
  IntMat b;              // r x columns.size(), minor-basis exponent vectors
  IntVec diagonal;       // 2 d_s per column
};
CompatiblePair compatible_pair(const BetaGrid& grid, const SkewForm& l0);

// Column reduction of the minor form by the exchange columns: unimodular
// column operations bring Lbar to
//     [ diag(2 d_s)   Y ]
//     [      0        Z ]
// with the non-final pairs first. Z is the principal submatrix of Lbar on the
// final occurrence pairs, in grid order. det(Lbar) = +-2^(r-r0) det(Z) is
// checked exactly and the sign reported (0 when both determinants vanish).
struct ColumnReduction {
  std::vector<std::pair<std::size_t, std::size_t>> final_pairs;  // (letter, s_r)
  IntMat y;  // rows: non-final pairs, cols: final pairs
  IntMat z;  // r0 x r0
  std::size_t r0 = 0;
  Int det_l;
  Int det_z;
  int sign = 0;             // sign of det_l / (2^(r-r0) det_z), 0 if both zero
  bool relation_holds = false;
};
ColumnReduction column_reduce(const SkewForm& lbar, const BetaGrid& grid);

}  // namespace qnc
