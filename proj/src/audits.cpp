#include "qnc/audits.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace qnc {

namespace {

constexpr std::size_t kMaxFailuresListed = 8;

void record(SuiteResult& r, const std::string& failure) {
  if (r.failures.size() < kMaxFailuresListed) r.failures.push_back(failure);
  else if (r.failures.size() == kMaxFailuresListed)
    r.failures.push_back("(further failures suppressed)");
}

// Odometer over [-box, box]^n; returns false when the sweep wraps around.
bool next_point(std::vector<long>& x, long box) {
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (++x[i] <= box) return true;
    x[i] = -box;
  }
  return false;
}

IntVec to_intvec(const std::vector<long>& x) {
  IntVec v(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) v[i] = x[i];
  return v;
}

// Centrality by honest products: z^a commutes with every generator.
bool product_central(const TwistedAlgebra& alg, const IntVec& a) {
  const std::size_t n = alg.dim();
  LaurentElement za = LaurentElement::monomial(0, a);
  for (std::size_t i = 0; i < n; ++i) {
    IntVec e(n, Int(0));
    e[i] = 1;
    LaurentElement zi = LaurentElement::monomial(0, e);
    if (alg.multiply(za, zi) != alg.multiply(zi, za)) return false;
  }
  return true;
}

// Canonical HNF of the lattice generated by the given rows.
IntMat lattice_hnf(const std::vector<IntVec>& rows, std::size_t cols) {
  IntMat m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
  IntMat h = row_hnf(std::move(m));
  // strip zero rows
  std::size_t nz = 0;
  for (std::size_t i = 0; i < h.rows(); ++i) {
    bool zero = true;
    for (std::size_t j = 0; j < cols && zero; ++j) zero = h.at(i, j) == 0;
    if (!zero) ++nz;
  }
  std::vector<std::size_t> keep(nz), all(cols);
  for (std::size_t i = 0; i < nz; ++i) keep[i] = i;
  for (std::size_t j = 0; j < cols; ++j) all[j] = j;
  return h.submatrix(keep, all);
}

}  // namespace

std::vector<std::string> sweep_types(std::size_t max_rank) {
  std::vector<std::string> out;
  for (std::size_t r = 1; r <= max_rank; ++r) {
    out.push_back("A" + std::to_string(r));
    if (r >= 2) out.push_back("B" + std::to_string(r));
    if (r >= 2) out.push_back("C" + std::to_string(r));
    if (r >= 4) out.push_back("D" + std::to_string(r));
    if (r >= 6 && r <= 8) out.push_back("E" + std::to_string(r));
    if (r == 4) out.push_back("F4");
    if (r == 2) out.push_back("G2");
  }
  return out;
}

std::vector<SweepWord> sweep_words(std::size_t max_rank, std::size_t max_len) {
  std::vector<SweepWord> out;
  for (const auto& type : sweep_types(max_rank)) {
    RootSystem rs = RootSystem::parse(type);
    for (const auto& word : enumerate_elements(rs, max_len))
      if (!word.letters.empty()) out.push_back({type, word});
  }
  return out;
}

SuiteResult suite_structure(std::size_t max_rank, std::size_t kostant_rank,
                            std::size_t identity_rank) {
  SuiteResult res{"structure"};
  for (const auto& type : sweep_types(max_rank)) {
    RootSystem rs = RootSystem::parse(type);
    const std::size_t n = rs.rank();
    for (std::size_t mask = 0; mask < (1u << n); ++mask) {
      std::vector<std::size_t> levi;
      for (std::size_t i = 0; i < n; ++i)
        if (mask & (1u << i)) levi.push_back(i);
      ++res.cases;
      ParabolicData pd = longest_and_parabolic(rs, levi);
      if (!(pd.wp * pd.wl == pd.w0))
        record(res, type + ": wp*wl != w0 for levi mask " + std::to_string(mask));
      if (pd.wp.length() + pd.wl.length() != pd.w0.length())
        record(res, type + ": parabolic lengths do not add");
      // wp maps the nilradical positives into the negatives.
      auto nil = nilradical_roots(rs, levi);
      std::set<IntVec> inverted;
      for (const auto& alpha : rs.positive_roots()) {
        IntVec img = pd.wp.apply(alpha).coords;
        bool neg = std::all_of(img.begin(), img.end(),
                               [](const Int& c) { return c <= 0; }) &&
                   !is_zero(img);
        if (neg) inverted.insert(alpha.coords);
      }
      std::set<IntVec> nil_set;
      for (const auto& alpha : nil) nil_set.insert(alpha.coords);
      if (inverted != nil_set)
        record(res, type + ": wp does not invert exactly the nilradical");
      // Unique coset factorization of w0 recovers (wl, wl * w0).
      auto [wpart, rep] = coset_decompose(pd.w0, levi);
      if (!(wpart == pd.wl) || !(rep == pd.wl * pd.w0) ||
          !(rep == pd.wp.inverse()))
        record(res, type + ": coset factorization of w0 is off");
      if (wpart.length() + rep.length() != pd.w0.length())
        record(res, type + ": coset lengths do not add");
      // The representative's word passes the beta-grid certificates
      // (reflection factorization among them).
      ReducedWord word{rep.reduced_word()};
      try {
        BetaGrid grid(rs, word);
        std::set<IntVec> phi;
        for (const auto& b : grid.betas()) phi.insert(b.coords);
        if (phi != nil_set)
          record(res, type + ": representative betas miss the nilradical");
      } catch (const std::exception& e) {
        record(res, type + ": grid certificate: " + e.what());
      }
    }
    if (n <= kostant_rank) {
      ++res.cases;
      KostantReport kr = kostant_scan(rs);
      if (!kr.bijection || !kr.every_inversion_set_doubly_saturated ||
          kr.group_order != kr.doubly_saturated_count)
        record(res, type + ": Kostant bijection failed");
    }
  }
  for (const auto& type : sweep_types(identity_rank)) {
    RootSystem rs = RootSystem::parse(type);
    for (std::size_t i = 0; i < rs.rank(); ++i) {
      ++res.cases;
      if (!is_zero(rs.cartan_column_identity(i).coords))
        record(res, type + ": Cartan column identity fails at " + std::to_string(i + 1));
    }
  }
  return res;
}

SuiteResult suite_formulas(std::size_t max_rank, std::size_t max_len) {
  SuiteResult res{"formulas"};
  for (const auto& sw : sweep_words(max_rank, max_len)) {
    RootSystem rs = RootSystem::parse(sw.type);
    BetaGrid grid(rs, sw.word);
    FormulaAuditReport report = formula_audit(grid);
    res.cases += report.total_checked();
    if (!report.all_pass())
      for (const auto& fam : report.families)
        for (const auto& mm : fam.mismatches)
          record(res, sw.type + " " + sw.word.to_string() + ": " + mm);
  }
  return res;
}

SuiteResult suite_center_oracle(std::size_t max_rank, std::size_t max_len, long box) {
  SuiteResult res{"center_oracle"};
  for (const auto& sw : sweep_words(max_rank, max_len)) {
    RootSystem rs = RootSystem::parse(sw.type);
    BetaGrid grid(rs, sw.word);
    SkewForm l0 = generator_form(grid);
    TwistedAlgebra alg(l0);
    IntMat kernel = integer_kernel(l0.entries);
    CenterDescription center = center_nilpotent(grid);
    // The covariant z-exponents generate exactly the kernel lattice.
    std::vector<IntVec> rows;
    for (const auto& g : center.generators) rows.push_back(g.z_exps);
    if (lattice_hnf(rows, grid.size()) != kernel) {
      record(res, sw.type + " " + sw.word.to_string() +
                      ": covariant lattice differs from the kernel lattice");
      continue;
    }
    // Honest product centrality agrees with the form kernel on the box.
    std::vector<long> x(grid.size(), -box);
    do {
      ++res.cases;
      IntVec a = to_intvec(x);
      bool by_form = alg.centrality_test(a, 0);
      bool by_product = product_central(alg, a);
      if (by_form != by_product) {
        record(res, sw.type + " " + sw.word.to_string() +
                        ": centrality mismatch at a box point");
        break;
      }
    } while (next_point(x, box));
  }
  return res;
}

SuiteResult suite_compatible(std::size_t max_rank, std::size_t max_len) {
  SuiteResult res{"compatible_pair"};
  for (const auto& sw : sweep_words(max_rank, max_len)) {
    RootSystem rs = RootSystem::parse(sw.type);
    BetaGrid grid(rs, sw.word);
    ++res.cases;
    try {
      compatible_pair(grid, generator_form(grid));
    } catch (const std::exception& e) {
      record(res, sw.type + " " + sw.word.to_string() + ": " + e.what());
    }
  }
  return res;
}

SuiteResult suite_determinant(std::size_t max_rank, std::size_t max_len) {
  SuiteResult res{"determinant"};
  for (const auto& sw : sweep_words(max_rank, max_len)) {
    RootSystem rs = RootSystem::parse(sw.type);
    BetaGrid grid(rs, sw.word);
    SkewForm lbar = minor_form(grid, generator_form(grid));
    ColumnReduction red = column_reduce(lbar, grid);
    CenterDescription center = center_nilpotent(grid);
    ++res.cases;
    if (!red.relation_holds)
      record(res, sw.type + " " + sw.word.to_string() +
                      ": det relation fails: det L = " + red.det_l.get_str() +
                      ", det Z = " + red.det_z.get_str());
    if ((center.dimension == 0) != (red.det_z != 0))
      record(res, sw.type + " " + sw.word.to_string() +
                      ": center triviality disagrees with det Z");
  }
  return res;
}

SuiteResult suite_pidegree(std::size_t random_cases, unsigned seed,
                           std::size_t max_rank, std::size_t max_len) {
  SuiteResult res{"pi_degree"};
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> entry(-3, 3);
  std::uniform_int_distribution<std::size_t> dim_dist(1, 4);
  const long ms[] = {3, 5, 7, 9, 15};
  for (std::size_t k = 0; k < random_cases; ++k) {
    std::size_t n = dim_dist(rng);
    IntMat m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        long v = entry(rng);
        m.at(i, j) = v;
        m.at(j, i) = -v;
      }
    SkewForm l(std::move(m));
    for (long mm : ms) {
      ++res.cases;
      PIDegreeReport rep = pi_degree(l, mm);
      Int image = brute_force_image(l, mm);
      if (rep.pi_degree * rep.pi_degree != image || rep.h != image)
        record(res, "random skew case " + std::to_string(k) + " at m=" +
                        std::to_string(mm) + ": degree^2 != image cardinality");
    }
  }
  for (const auto& sw : sweep_words(max_rank, max_len)) {
    RootSystem rs = RootSystem::parse(sw.type);
    BetaGrid grid(rs, sw.word);
    for (long mm : {3L, 5L, 7L}) {
      ++res.cases;
      RootCentralityReport rep = root_centrality_report(grid, mm);
      if (!rep.generator_powers_central || !rep.covariant_powers_central ||
          !rep.minor_powers_central || !rep.inverse_replacement_ok)
        record(res, sw.type + " " + sw.word.to_string() + " m=" +
                        std::to_string(mm) + ": m-th powers not central");
    }
  }
  return res;
}

SuiteResult suite_moves(std::size_t random_cases, unsigned seed) {
  SuiteResult res{"moves"};
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> size_dist(0, 20);
  std::uniform_int_distribution<int> sign_dist(0, 1);
  for (std::size_t k = 0; k < random_cases; ++k) {
    BlockConfig cfg;
    cfg.a = size_dist(rng);
    cfg.b = size_dist(rng);
    cfg.c = size_dist(rng);
    if (cfg.a + cfg.b + cfg.c == 0) cfg.a = 1;
    cfg.ea = sign_dist(rng) ? 1 : -1;
    cfg.eb = sign_dist(rng) ? 1 : -1;
    cfg.ec = sign_dist(rng) ? 1 : -1;
    long before = corank_direct(cfg);
    LatticeShadow shadow = lattice_shadow(cfg);
    for (Move m : applicable_moves(cfg)) {
      ++res.cases;
      BlockConfig next = apply_move(cfg, m);
      if (next.a + next.b + next.c == 0) {
        if (before != 0) record(res, cfg.to_string() + ": vanished with corank");
        continue;
      }
      if (corank_direct(next) != before)
        record(res, cfg.to_string() + ": move changed the corank");
      LatticeShadow after = lattice_shadow(next);
      if (after.gcd_pq != shadow.gcd_pq ||
          (shadow.gcd_pq != 0 && after.b_mod != shadow.b_mod))
        record(res, cfg.to_string() + ": move changed the (p,q,b) shadow");
    }
  }
  return res;
}

SuiteResult suite_b1(long max_ac, std::size_t remark_samples, unsigned seed) {
  SuiteResult res{"b1_corank"};
  for (long a = 1; a <= max_ac; ++a)
    for (long c = 1; c <= max_ac; ++c) {
      ++res.cases;
      BlockConfig cfg{a, 1, c, 1, 1, 1};
      if (b1_corank(a, c) != corank_direct(cfg))
        record(res, "closed form disagrees at a=" + std::to_string(a) +
                        ", c=" + std::to_string(c));
    }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> a_dist(2, 20), b_dist(1, 10);
  for (std::size_t k = 0; k < remark_samples; ++k) {
    long a = a_dist(rng);
    std::uniform_int_distribution<long> c_dist(1, a - 1);
    long c = c_dist(rng);
    long b = b_dist(rng);
    ++res.cases;
    BlockConfig cfg{a, b + a - c, c, 1, 1, 1};
    if (!move_applicable(cfg, Move::ShrinkB1)) {
      record(res, cfg.to_string() + ": expected b move is not applicable");
      continue;
    }
    BlockConfig next = apply_move(cfg, Move::ShrinkB1);
    bool signs_ok = next.b == b && next.ea == -1 && next.eb == 1 &&
                    (next.c == 0 || next.ec == -1);
    if (!signs_ok || corank_direct(cfg) != corank_direct(next))
      record(res, cfg.to_string() + ": shifted-start reduction failed");
  }
  return res;
}

namespace {

void distinct_letter_words(std::size_t rank, std::vector<ReducedWord>& out) {
  // all orderings of all nonempty subsets
  std::vector<std::size_t> letters(rank);
  for (std::size_t i = 0; i < rank; ++i) letters[i] = i;
  for (std::size_t mask = 1; mask < (1u << rank); ++mask) {
    std::vector<std::size_t> subset;
    for (std::size_t i = 0; i < rank; ++i)
      if (mask & (1u << i)) subset.push_back(i);
    std::sort(subset.begin(), subset.end());
    do {
      out.push_back(ReducedWord{subset});
    } while (std::next_permutation(subset.begin(), subset.end()));
  }
}

}  // namespace

SuiteResult suite_walgebra(std::size_t max_rank, long box) {
  SuiteResult res{"w_algebra"};
  for (std::size_t rank = 1; rank <= max_rank; ++rank) {
    RootSystem rs('A', rank);
    WeylElement w0 = longest_element(rs);
    std::vector<ReducedWord> factors;
    distinct_letter_words(rank, factors);
    for (const auto& f1 : factors)
      for (const auto& f2 : factors) {
        DecompositionSpec spec{{f1, f2}};
        if (!validate_decomposition(rs, spec).valid) continue;
        if (!(evaluate(rs, spec.concatenation()) == w0)) continue;
        ++res.cases;
        std::string label = "A" + std::to_string(rank) + " [" + f1.to_string() +
                            " | " + f2.to_string() + "]";
        try {
          WCenterDescription wc = center_w(rs, spec);
          DeltaLattice dl(rs, spec);  // certificates run on construction
          IntMat kernel = integer_kernel(dl.form());
          std::vector<IntVec> rows;
          for (const auto& g : wc.generators) rows.push_back(g.delta_exps);
          if (lattice_hnf(rows, dl.pairs().size()) != kernel) {
            record(res, label + ": generator lattice differs from form kernel");
            continue;
          }
          TwistedAlgebra alg{SkewForm(dl.form())};
          std::vector<long> x(dl.pairs().size(), -box);
          bool ok = true;
          do {
            IntVec a = to_intvec(x);
            if (alg.centrality_test(a, 0) != product_central(alg, a)) {
              ok = false;
              break;
            }
          } while (next_point(x, box));
          if (!ok) record(res, label + ": box centrality mismatch");
          // The product criterion: a power product of the endpoint pairs is
          // central iff the twisted difference of its weight vanishes on the
          // used fundamental weights.
          WeylElement tail = evaluate(rs, f2);
          std::vector<long> nv(wc.support.size(), -box);
          do {
            IntVec delta(dl.pairs().size(), Int(0));
            IntVec nw(rs.rank(), Int(0));
            for (std::size_t i = 0; i < wc.support.size(); ++i) {
              std::size_t letter = wc.support[i];
              nw[letter] = nv[i];
              delta[dl.pair_index(letter, 1)] += nv[i];
              if (dl.imax(letter) > 1)
                delta[dl.pair_index(letter, dl.imax(letter))] += nv[i];
            }
            Weight combo{nw};
            Weight diff{combo.coords - tail.apply(combo).coords};
            bool weight_zero = true;
            for (std::size_t s : wc.support)
              if (rs.inner_weights(rs.fundamental_weight(s), diff) != 0)
                weight_zero = false;
            if (alg.centrality_test(delta, 0) != weight_zero) {
              record(res, label + ": endpoint product criterion mismatch");
              break;
            }
          } while (next_point(nv, box));
        } catch (const std::exception& e) {
          record(res, label + ": " + e.what());
        }
      }
  }
  return res;
}

SuiteResult suite_schubert(long box) {
  SuiteResult res{"double_schubert"};
  for (const char* type : {"A2", "A3"}) {
    RootSystem rs = RootSystem::parse(type);
    ReducedWord word{longest_element(rs).reduced_word()};
    BetaGrid grid(rs, word);
    SkewForm l0 = generator_form(grid);
    for (std::size_t prefix = 0; prefix + 1 <= word.size(); ++prefix) {
      ++res.cases;
      std::string label = std::string(type) + " prefix " + std::to_string(prefix);
      try {
        SchubertCenter sc = double_schubert_center(grid, prefix);
        if (prefix == 0 && sc.dimension != center_nilpotent(grid).dimension) {
          record(res, label + ": empty prefix does not match the nilpotent center");
          continue;
        }
        IntMat sub = l0.entries.submatrix(sc.window_positions, sc.window_positions);
        TwistedAlgebra alg{SkewForm(sub)};
        IntMat kernel = integer_kernel(sub);
        std::vector<IntVec> rows;
        for (const auto& g : sc.generators) rows.push_back(g.window_exps);
        if (lattice_hnf(rows, sc.window_positions.size()) != kernel) {
          record(res, label + ": window lattice differs from form kernel");
          continue;
        }
        std::vector<long> x(sc.window_positions.size(), -box);
        do {
          IntVec a = to_intvec(x);
          if (alg.centrality_test(a, 0) != product_central(alg, a)) {
            record(res, label + ": box centrality mismatch");
            break;
          }
        } while (next_point(x, box));
      } catch (const std::exception& e) {
        record(res, label + ": " + e.what());
      }
    }
  }
  return res;
}

std::vector<SuiteResult> run_suites(const std::string& which, std::size_t max_rank,
                                    unsigned seed) {
  std::vector<SuiteResult> out;
  auto want = [&](const std::string& name) { return which == "all" || which == name; };
  std::size_t len = 6;
  if (want("structure"))
    out.push_back(suite_structure(std::min<std::size_t>(max_rank, 4),
                                  std::min<std::size_t>(max_rank, 3), 8));
  if (want("formulas")) out.push_back(suite_formulas(max_rank, len));
  if (want("center_oracle")) out.push_back(suite_center_oracle(max_rank, len, 2));
  if (want("compatible_pair")) out.push_back(suite_compatible(max_rank, len));
  if (want("determinant")) out.push_back(suite_determinant(max_rank, len));
  if (want("pi_degree")) out.push_back(suite_pidegree(200, seed, max_rank, len));
  if (want("moves")) out.push_back(suite_moves(500, seed));
  if (want("b1_corank")) out.push_back(suite_b1(40, 50, seed));
  if (want("w_algebra"))
    out.push_back(suite_walgebra(std::min<std::size_t>(max_rank, 3), 2));
  if (want("double_schubert")) out.push_back(suite_schubert(2));
  if (out.empty()) throw input_error("unknown suite: " + which);
  return out;
}

}  // namespace qnc
