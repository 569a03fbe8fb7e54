#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "qnc/centers.hpp"
#include "qnc/lattice_forms.hpp"

namespace qnc {

// Block diagonalization of an integer skew form by a unimodular congruence:
// U L U^T = diag([[0,d_1],[-d_1,0]], ..., [[0,d_k],[-d_k,0]], 0) with the
// divisors positive and forming a divisibility chain.
struct SkewNormalForm {
  IntMat u;
  std::vector<Int> divisors;
  std::size_t nullity = 0;
};
SkewNormalForm skew_normal_form(const SkewForm& l);

// PI-degree data at a primitive m-th root of unity: h is the cardinality of
// the image of x -> L x mod m, a perfect square, and the degree its root.
struct PIDegreeReport {
  Int m;
  std::vector<Int> divisors;
  std::vector<Int> block_contributions;  // m / gcd(d_j, m), one per block
  Int h;
  Int pi_degree;
  std::vector<std::string> warnings;
};
PIDegreeReport pi_degree(const SkewForm& l, const Int& m);

// Exact cardinality of the image of x -> L x mod m by enumeration; the
// independent oracle for pi_degree. Guarded.
Int brute_force_image(const SkewForm& l, long m, std::size_t dim_guard = 6,
                      long m_guard = 16);

// Root-of-unity centrality and divisibility report for a reduced word.
struct RootCentralityReport {
  Int m;
  bool generator_powers_central = false;  // z_i^m for every position
  bool covariant_powers_central = false;  // C_s^m for every used letter
  bool minor_powers_central = false;      // every minor diagonal to the m-th power
  bool inverse_replacement_ok = false;    // C_s * C_s^{m-1} = C_s^m, central
  std::size_t r = 0, r0 = 0;
  Int det_l, det_z;
  bool det_relation_holds = false;
  std::vector<Int> divisors;              // of the generator form
  bool divisor_squares_divide = true;     // d_j^2 | 2^{r-r0} det Z (trivial center)
  // Nontrivial-center branch: determinant of the kernel-quotient block and the
  // odd primes of the block-diagonal determinant, each tested for divisibility.
  bool unimodular_change_found = false;
  Int det_z1;
  std::vector<std::pair<Int, bool>> odd_prime_divisibility;
  Int unfactored_cofactor;  // 1 when the block determinant factored completely
};
RootCentralityReport root_centrality_report(const BetaGrid& grid, const Int& m);

}  // namespace qnc
