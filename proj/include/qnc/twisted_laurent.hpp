#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "qnc/lattice_forms.hpp"

namespace qnc {

// Element of the twisted Laurent algebra over Z[q, q^{-1}]: a finite sum of
// terms coeff * q^p * z^e, stored as exps -> (q-power -> integer coefficient).
class LaurentElement {
 public:
  LaurentElement() = default;
  static LaurentElement monomial(const Int& qpow, IntVec exps, const Int& coeff = 1);

  bool operator==(const LaurentElement&) const = default;
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  void add_term(const IntVec& exps, const Int& qpow, const Int& coeff);
  const std::map<IntVec, std::map<Int, Int>>& terms() const { return terms_; }

  LaurentElement operator+(const LaurentElement& o) const;
  std::string to_string() const;

 private:
  std::map<IntVec, std::map<Int, Int>> terms_;  // zero coefficients never stored
};

// The twist: z^a z^b = q^{kappa(a,b)} z^{a+b} with
// kappa(a,b) = sum_{i>j} a_i b_j skew[i][j], the normal order being ascending
// position. Exchanging two monomials costs q^{a^T skew b}.
class TwistedAlgebra {
 public:
  explicit TwistedAlgebra(SkewForm skew) : skew_(std::move(skew)) {}

  std::size_t dim() const { return skew_.dim(); }
  const SkewForm& skew() const { return skew_; }

  Int kappa(const IntVec& a, const IntVec& b) const;
  Int commutation_exponent(const IntVec& a, const IntVec& b) const;  // a^T skew b

  LaurentElement multiply(const LaurentElement& x, const LaurentElement& y) const;

  // Central for generic q (modulus 0) or at a primitive m-th root of unity.
  bool centrality_test(const IntVec& exps, const Int& modulus) const;

 private:
  SkewForm skew_;
};

// Folds every q-power into [0, m); equality after reduction is equality of
// the specializations at a primitive m-th root of unity.
LaurentElement reduce_q_exponents(const LaurentElement& x, const Int& m);

// Engine-vs-closed-form audit of the commutation exponent formulas attached
// to a reduced word: generators against covariants, generators against minor
// diagonals (prefix-element cases), minors against covariants, minors against
// minors, and the half/exchange column contracts.
struct AuditFamily {
  std::string name;
  std::size_t checked = 0;
  std::vector<std::string> mismatches;
};

struct FormulaAuditReport {
  std::vector<AuditFamily> families;
  bool all_pass() const {
    for (const auto& f : families)
      if (!f.mismatches.empty()) return false;
    return true;
  }
  std::size_t total_checked() const {
    std::size_t n = 0;
    for (const auto& f : families) n += f.checked;
    return n;
  }
};

// flip_q mirrors the q <-> q^{-1} convention split: it negates the twist and
// the expected exponents together.
FormulaAuditReport formula_audit(const BetaGrid& grid, bool flip_q = false);

}  // namespace qnc
