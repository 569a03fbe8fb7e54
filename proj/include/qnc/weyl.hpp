#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "qnc/cartan.hpp"

namespace qnc {

// Weyl group element, canonically the integer matrix of its action on
// simple-root coordinates. Equality is by matrix, never by word. The inverse
// matrix is carried along so that inverse actions and weight actions stay in
// exact integer arithmetic.
class WeylElement {
 public:
  static WeylElement identity(const RootSystem& rs);
  static WeylElement simple_reflection(const RootSystem& rs, std::size_t i);
  // Reflection in an arbitrary root.
  static WeylElement root_reflection(const RootSystem& rs, const RootVector& beta);

  const RootSystem& system() const { return *rs_; }
  const IntMat& matrix() const { return mat_; }

  WeylElement operator*(const WeylElement& o) const;
  WeylElement inverse() const;
  bool operator==(const WeylElement& o) const { return mat_ == o.mat_; }
  bool is_identity() const;

  RootVector apply(const RootVector& r) const;
  Weight apply(const Weight& w) const;
  RootVector apply_inverse(const RootVector& r) const;

  // Phi_w = {alpha > 0 : w^{-1} alpha < 0}, listed in the positive-root order
  // of the root system.
  std::vector<RootVector> inversion_set() const;
  std::size_t length() const { return inversion_set().size(); }

  // Deterministic reduced word: repeatedly strip the smallest right descent.
  std::vector<std::size_t> reduced_word() const;

  IntVec key() const;  // flattened matrix, for use as a map key

 private:
  WeylElement(const RootSystem& rs, IntMat mat, IntMat inv);
  const RootSystem* rs_;
  IntMat mat_, inv_;
};

// Word in the simple reflections, letters 0-based internally.
struct ReducedWord {
  std::vector<std::size_t> letters;

  static ReducedWord parse(const std::string& csv);  // "1,2,1", 1-based on the wire
  std::string to_string() const;                     // 1-based on the wire
  std::size_t size() const { return letters.size(); }
  bool operator==(const ReducedWord&) const = default;
};

WeylElement evaluate(const RootSystem& rs, const ReducedWord& word);

// (length of the evaluated element, whether the word is reduced).
std::pair<std::size_t, bool> length_and_reduced(const RootSystem& rs,
                                                const ReducedWord& word);

// Position k of a word carries the root beta_k = s_{i_1}...s_{i_{k-1}}(alpha_{i_k})
// and the pair (s,t): s the letter, t its occurrence count so far. Construction
// checks that the word is reduced, that the betas are distinct positive roots
// forming the inversion set, that the element factors through the beta
// reflections in reverse order, and that for each used letter the betas with
// that letter sum to Lambda_s - w(Lambda_s).
class BetaGrid {
 public:
  BetaGrid(const RootSystem& rs, const ReducedWord& word);

  const RootSystem& system() const { return *rs_; }
  const ReducedWord& word() const { return word_; }
  std::size_t size() const { return word_.size(); }

  const std::vector<RootVector>& betas() const { return betas_; }
  const RootVector& beta(std::size_t letter, std::size_t occ) const;

  std::size_t letter_at(std::size_t pos) const { return word_.letters[pos]; }
  std::size_t occ_at(std::size_t pos) const { return occ_[pos]; }
  std::size_t position(std::size_t letter, std::size_t occ) const;  // occ 1-based
  std::size_t occurrences(std::size_t letter) const;                // s_r
  const std::vector<std::size_t>& support() const { return support_; }

  // Prefix element s_{i_1}...s_{i_k}; k ranges over 0..size().
  const WeylElement& prefix(std::size_t k) const;
  const WeylElement& element() const { return prefixes_.back(); }

  // Number of occurrences of `letter` among the first n letters.
  std::size_t prefix_occurrences(std::size_t letter, std::size_t n) const;

 private:
  const RootSystem* rs_;
  ReducedWord word_;
  std::vector<RootVector> betas_;
  std::vector<std::size_t> occ_;
  std::vector<std::size_t> support_;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> position_;
  std::vector<WeylElement> prefixes_;
};

WeylElement longest_element(const RootSystem& rs);
WeylElement longest_in_levi(const RootSystem& rs, const std::vector<std::size_t>& levi);

struct ParabolicData {
  WeylElement w0;      // longest in W
  WeylElement wl;      // longest in the Levi subgroup
  WeylElement wp;      // w0 * wl^{-1}; satisfies wp * wl = w0 and maps
                       // the nilradical positives to negative roots
};
ParabolicData longest_and_parabolic(const RootSystem& rs,
                                    const std::vector<std::size_t>& levi);

// Positive roots supported on the Levi, and the complement (the nilradical).
std::vector<RootVector> levi_positive_roots(const RootSystem& rs,
                                            const std::vector<std::size_t>& levi);
std::vector<RootVector> nilradical_roots(const RootSystem& rs,
                                         const std::vector<std::size_t>& levi);

// Unique factorization w = w_p * w^p with w_p in the Levi subgroup and w^p the
// minimal-length representative of its coset (Phi_{w^p} inside the nilradical).
std::pair<WeylElement, WeylElement> coset_decompose(
    const WeylElement& w, const std::vector<std::size_t>& levi);

struct KostantReport {
  std::size_t group_order = 0;
  std::size_t doubly_saturated_count = 0;
  bool every_inversion_set_doubly_saturated = false;
  bool bijection = false;
};

// Exhaustive check that w -> Phi_w is a bijection onto the subsets of the
// positive roots that are saturated with saturated complement. Guarded to
// rank <= 4; the subset side is enumerated by a pruned search that is
// independent of the Weyl-group side.
KostantReport kostant_scan(const RootSystem& rs);

// Reduced word of length a*b in type A_{a+b-1} whose inversion set is the
// nilradical of the parabolic omitting node a: the column-by-column
// Grassmannian word (s_a s_{a-1} ... s_1)(s_{a+1} ... s_2)...
ReducedWord matrix_algebra_word(std::size_t a, std::size_t b);

// All elements of length <= max_len, one deterministic reduced word each,
// ordered by (length, word).
std::vector<ReducedWord> enumerate_elements(const RootSystem& rs, std::size_t max_len);

}  // namespace qnc
