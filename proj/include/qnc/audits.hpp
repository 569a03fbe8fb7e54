#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "qnc/centers.hpp"
#include "qnc/diophantine.hpp"
#include "qnc/root_of_unity.hpp"

namespace qnc {

struct SuiteResult {
  std::string name;
  std::size_t cases = 0;
  std::vector<std::string> failures;
  bool pass() const { return failures.empty(); }
};

// Every finite type of rank <= max_rank, smallest families first.
std::vector<std::string> sweep_types(std::size_t max_rank);

struct SweepWord {
  std::string type;
  ReducedWord word;
};
// One deterministic reduced word for every element of length in [1, max_len]
// in every type of rank <= max_rank.
std::vector<SweepWord> sweep_words(std::size_t max_rank, std::size_t max_len);

// Structure identities: the reflection factorization of every parabolic
// representative word, wp * wl = w0 with the nilradical mapped to negatives,
// coset factorization, the Kostant bijection (rank <= kostant_rank), and the
// Cartan column identity (rank <= identity_rank).
SuiteResult suite_structure(std::size_t max_rank, std::size_t kostant_rank,
                            std::size_t identity_rank);

// Engine-vs-closed-form commutation exponents over the sweep.
SuiteResult suite_formulas(std::size_t max_rank, std::size_t max_len);

// Brute-force centrality (by exact products) against the kernel lattice and
// the covariant-generated lattice, over the sweep, in the box [-box, box]^r.
SuiteResult suite_center_oracle(std::size_t max_rank, std::size_t max_len, long box);

// The exchange-column contract over the sweep.
SuiteResult suite_compatible(std::size_t max_rank, std::size_t max_len);

// det(Lbar) = +-2^(r-r0) det(Z) and center triviality <=> det(Z) != 0.
SuiteResult suite_determinant(std::size_t max_rank, std::size_t max_len);

// Random skew forms: squared degree equals the enumerated image cardinality;
// plus m-th power centrality over the sweep.
SuiteResult suite_pidegree(std::size_t random_cases, unsigned seed,
                           std::size_t max_rank, std::size_t max_len);

// Gaussian moves preserve the corank and the (p,q,b) shadow.
SuiteResult suite_moves(std::size_t random_cases, unsigned seed);

// The b = 1 closed form against direct coranks, and the shifted-start
// configurations reduced by the first b move.
SuiteResult suite_b1(long max_ac, std::size_t remark_samples, unsigned seed);

// Two-factor decompositions of the longest element in type A:
// brute-forced minor-lattice centers against the kernel description, with the
// step-pattern and range certificates.
SuiteResult suite_walgebra(std::size_t max_rank, long box);

// Double Schubert cells over all prefixes of the chosen longest words in
// types A2 and A3: windowed brute force against the kernel description.
SuiteResult suite_schubert(long box);

std::vector<SuiteResult> run_suites(const std::string& which, std::size_t max_rank,
                                    unsigned seed);

}  // namespace qnc
