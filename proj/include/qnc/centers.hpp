#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "qnc/lattice_forms.hpp"
#include "qnc/twisted_laurent.hpp"

namespace qnc {

// A center is described by a canonical basis of an integer kernel lattice.
// Each generator is a vector n over the used letters, rendered as a product
// of the covariant elements, together with its exponent vector in the
// quasi-polynomial model.
struct CenterGenerator {
  IntVec n;  // full rank-length vector, support inside the used letters
  std::string rendered;
  IntVec z_exps;
};

struct CenterDescription {
  std::vector<std::size_t> support;  // used letters, ascending
  std::size_t dimension = 0;
  std::vector<CenterGenerator> generators;
};

// Center of the quasi-polynomial algebra of a reduced word: the kernel of
// (1 + w) on the span of the used fundamental weights, paired against the
// used simple roots (the weights are tacitly restricted to that span). Each
// generator's exponent vector is certified central for the generator form.
CenterDescription center_nilpotent(const BetaGrid& grid);

// For each used letter: the weight (1 - w)(Lambda_s) (equal to the sum of its
// occurrence betas) and the exponent vector of the covariant element, with the
// covariance commutation certificate checked against the engine.
struct CovariantDatum {
  std::size_t s;
  Weight weight;
  IntVec z_exps;
};
std::vector<CovariantDatum> covariant_data(const BetaGrid& grid);

// Factorization w = w_1 w_2 ... w_k with every factor a product of pairwise
// distinct simple reflections, nested supports, and reduced concatenation.
struct DecompositionSpec {
  std::vector<ReducedWord> factors;
  ReducedWord concatenation() const;
};

struct DecompositionCheck {
  bool valid = true;
  std::string diagnostic;  // names the failing clause
};
DecompositionCheck validate_decomposition(const RootSystem& rs,
                                          const DecompositionSpec& spec);

// Center of the K-twisted minor algebra attached to a decomposition: the
// kernel of (1 - w_1^{-1} w) on the span of the used fundamental weights
// (an honest vector kernel; the difference lands in the used root span).
// Generators are rendered as products (D_{i,1} D_{i,imax})^{n_i}, with the
// repeated factor omitted when imax = 1; delta_exps is the exponent vector
// over the factor-grid generators.
struct WCenterGenerator {
  IntVec n;
  std::string rendered;
  IntVec delta_exps;
};
struct WCenterDescription {
  std::vector<std::size_t> support;
  std::size_t dimension = 0;
  std::vector<WCenterGenerator> generators;
};
WCenterDescription center_w(const RootSystem& rs, const DecompositionSpec& spec);

// The minor lattice of a decomposition: generators D_{s,t} indexed by letters
// s and factor indices t = 1..imax(s), with the commutation form
//   (s,t) <= (c,d)  =>  exponent (Lambda_s, (1 - u_t^{-1} u_d) Lambda_c),
// u_t the product of the first t factors. The nabla elements (the analogues
// of the half columns, allowed to use the degree-zero minors D_{s,0}) carry
// the step commutation pattern 0 / -d_i / +d_i, certified on construction,
// along with the range certificates for the interior minors and for
// D_{i,1}^{-1} D_{i,imax}.
class DeltaLattice {
 public:
  DeltaLattice(const RootSystem& rs, const DecompositionSpec& spec);

  struct Pair {
    std::size_t letter;
    std::size_t t;  // 0 only in the extended generator set
  };

  const std::vector<Pair>& pairs() const { return pairs_; }          // t >= 1
  const std::vector<Pair>& extended_pairs() const { return ext_; }   // t = 0 first
  const IntMat& form() const { return form_; }                       // on pairs()
  const IntMat& extended_form() const { return ext_form_; }

  std::size_t imax(std::size_t letter) const;
  std::size_t pair_index(std::size_t letter, std::size_t t) const;      // in pairs()
  std::size_t extended_index(std::size_t letter, std::size_t t) const;  // in ext_

  // Exponent vector of nabla_{i,j0} over the extended generators, j0 >= 2.
  IntVec nabla(std::size_t i, std::size_t j0) const;

  struct Certificates {
    std::size_t nabla_checked = 0;       // step-pattern commutations
    std::size_t interior_checked = 0;    // 2 d_i e_{(i,j0)} in the range
    std::size_t endpoints_checked = 0;   // d_i (e_{(i,imax)} - e_{(i,1)}) reachable
  };
  const Certificates& certificates() const { return certs_; }

 private:
  void build();
  void certify();

  const RootSystem* rs_;
  DecompositionSpec spec_;
  std::vector<WeylElement> factor_prefix_;  // u_0 = e, u_1, ..., u_k
  std::vector<Pair> pairs_, ext_;
  IntMat form_, ext_form_;
  Certificates certs_;
};

// Exponent in the quasi-commutation of two twisted minors
// (Theorem-style: (s lambda, mu) - (lambda, t mu)), under the length-additivity
// preconditions l(s's) = l(s') + l(s) and l(t't) = l(t') + l(t).
Int minor_exponent(const RootSystem& rs, const Weight& lambda, const Weight& mu,
                   const WeylElement& s, const WeylElement& s_outer,
                   const WeylElement& t, const WeylElement& t_outer);

// Exponent for the K-twisted generators w_{s,t}, valid for (s,t) < (c,d) in
// position order.
Int twisted_exponent(const BetaGrid& grid, std::size_t pos_st, std::size_t pos_cd);

// Center of the double Schubert cell algebra between a strict prefix and the
// full word: generators are indexed by the letters active in the half-open
// occurrence window, and the kernel is that of (w_a + w_c) paired against the
// window betas.
struct SchubertCenter {
  std::size_t prefix_len = 0;
  std::vector<std::size_t> window_positions;  // positions of wc's grid
  std::vector<std::size_t> support;           // letters with nonempty window
  std::size_t dimension = 0;
  struct Generator {
    IntVec n;
    std::string rendered;
    IntVec window_exps;  // over window_positions
    Weight weight;       // sum of n_s (w_a - w_c)(Lambda_s)
  };
  std::vector<Generator> generators;
};
SchubertCenter double_schubert_center(const BetaGrid& wc_grid, std::size_t prefix_len);

}  // namespace qnc
