#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "qnc/matrix.hpp"

namespace qnc {

// Finite-type Cartan data in the Bourbaki numbering, normalized so that short
// roots have squared length 2. The Cartan matrix convention is
//   a[i][j] = 2 (alpha_i, alpha_j) / (alpha_i, alpha_i),
// so (alpha_i, alpha_j) = d_i a[i][j] = d_j a[j][i] with d_i = (alpha_i,alpha_i)/2.

// Vector in the simple-root basis.
struct RootVector {
  IntVec coords;
  bool operator==(const RootVector&) const = default;
  bool operator<(const RootVector& o) const { return coords < o.coords; }
};

// Vector in the fundamental-weight basis.
struct Weight {
  IntVec coords;
  bool operator==(const Weight&) const = default;
};

class RootSystem {
 public:
  RootSystem(char family, std::size_t rank);

  // Parses strings such as "A5", "E6", "G2".
  static RootSystem parse(const std::string& type);

  char family() const { return family_; }
  std::size_t rank() const { return rank_; }
  std::string name() const { return family_ + std::to_string(rank_); }

  const IntMat& cartan() const { return cartan_; }          // a[i][j], 0-based
  const Int& symmetrizer(std::size_t i) const { return sym_[i]; }  // d_i
  const std::vector<RootVector>& positive_roots() const { return positive_; }

  RootVector simple_root(std::size_t i) const;
  Weight fundamental_weight(std::size_t i) const;

  // Exact conversions between the two coordinate systems.
  Weight to_weight(const RootVector& r) const;   // weight coords = C^T-style image
  std::vector<Rat> to_root_coords(const Weight& w) const;

  bool is_root(const RootVector& r) const;
  bool is_positive_root(const RootVector& r) const;

  // The invariant symmetric bilinear form, exact values.
  Int inner(const RootVector& x, const RootVector& y) const;
  Int inner(const RootVector& x, const Weight& y) const;
  Int inner(const Weight& x, const RootVector& y) const;
  Rat inner_weights(const Weight& x, const Weight& y) const;

  // The weight (s_i + 1)(Lambda_i) + sum_{j != i} a[j][i] Lambda_j, which is
  // zero in every finite type: it restates that alpha_i has weight
  // coordinates given by column i of the Cartan matrix.
  Weight cartan_column_identity(std::size_t i) const;

  // Expected |positive_roots| for this type.
  std::size_t expected_positive_count() const;

 private:
  void build_cartan();
  void enumerate_positive_roots();

  char family_;
  std::size_t rank_;
  IntMat cartan_;
  IntVec sym_;
  std::vector<RootVector> positive_;
};

}  // namespace qnc
