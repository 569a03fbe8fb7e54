#include "qnc/centers.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace qnc {

namespace {

std::string render_product(const std::string& symbol, const IntVec& n) {
  std::string out;
  for (std::size_t s = 0; s < n.size(); ++s) {
    if (n[s] == 0) continue;
    if (!out.empty()) out += "*";
    out += symbol + std::to_string(s + 1);
    if (n[s] != 1) out += "^" + n[s].get_str();
  }
  return out.empty() ? "1" : out;
}

IntVec weight_to_root_lattice(const RootSystem& rs, const Weight& w) {
  auto c = solve_integer(rs.cartan(), w.coords);
  ensure(c.has_value(), "weight is not in the root lattice");
  return *c;
}

}  // namespace

CenterDescription center_nilpotent(const BetaGrid& grid) {
  const RootSystem& rs = grid.system();
  const auto& support = grid.support();
  const std::size_t k = support.size();
  const WeylElement& w = grid.element();

  // Pairing matrix ((1+w)Lambda_s, alpha_j) over the used letters.
  IntMat g(k, k);
  for (std::size_t sc = 0; sc < k; ++sc) {
    Weight lam = rs.fundamental_weight(support[sc]);
    Weight target{lam.coords + w.apply(lam).coords};
    for (std::size_t jr = 0; jr < k; ++jr)
      g.at(jr, sc) = rs.inner(rs.simple_root(support[jr]), target);
  }
  IntMat kernel = integer_kernel(g);

  CenterDescription desc;
  desc.support = support;
  desc.dimension = kernel.rows();
  SkewForm l0 = generator_form(grid);
  TwistedAlgebra alg(l0);
  for (std::size_t row = 0; row < kernel.rows(); ++row) {
    CenterGenerator gen;
    gen.n = IntVec(rs.rank(), Int(0));
    gen.z_exps = IntVec(grid.size(), Int(0));
    for (std::size_t sc = 0; sc < k; ++sc) {
      gen.n[support[sc]] = kernel.at(row, sc);
      if (kernel.at(row, sc) != 0)
        gen.z_exps = gen.z_exps +
                     scale(kernel.at(row, sc), covariant_exps(grid, support[sc]));
    }
    gen.rendered = render_product("C", gen.n);
    ensure(alg.centrality_test(gen.z_exps, 0),
           "center generator failed the centrality test: " + gen.rendered);
    desc.generators.push_back(std::move(gen));
  }
  return desc;
}

std::vector<CovariantDatum> covariant_data(const BetaGrid& grid) {
  const RootSystem& rs = grid.system();
  const WeylElement& w = grid.element();
  SkewForm l0 = generator_form(grid);
  TwistedAlgebra alg(l0);
  std::vector<CovariantDatum> out;
  for (std::size_t s : grid.support()) {
    CovariantDatum d;
    d.s = s;
    Weight lam = rs.fundamental_weight(s);
    d.weight = Weight{lam.coords - w.apply(lam).coords};
    d.z_exps = covariant_exps(grid, s);
    // (1 - w)(Lambda_s) telescopes through the occurrence betas.
    IntVec beta_sum(rs.rank(), Int(0));
    for (std::size_t t = 1; t <= grid.occurrences(s); ++t)
      beta_sum = beta_sum + grid.beta(s, t).coords;
    ensure(rs.to_weight(RootVector{beta_sum}) == d.weight,
           "covariant weight disagrees with the beta sum");
    // Covariance certificate against the engine.
    Weight plus{lam.coords + w.apply(lam).coords};
    for (std::size_t pos = 0; pos < grid.size(); ++pos) {
      IntVec e(grid.size(), Int(0));
      e[pos] = 1;
      ensure(alg.commutation_exponent(e, d.z_exps) ==
                 -rs.inner(grid.betas()[pos], plus),
             "covariance certificate failed");
    }
    out.push_back(std::move(d));
  }
  return out;
}

ReducedWord DecompositionSpec::concatenation() const {
  ReducedWord w;
  for (const auto& f : factors)
    w.letters.insert(w.letters.end(), f.letters.begin(), f.letters.end());
  return w;
}

DecompositionCheck validate_decomposition(const RootSystem& rs,
                                          const DecompositionSpec& spec) {
  if (spec.factors.empty()) return {false, "no factors"};
  std::set<std::size_t> prev_support;
  for (std::size_t i = 0; i < spec.factors.size(); ++i) {
    const auto& f = spec.factors[i];
    if (f.letters.empty()) return {false, "factor " + std::to_string(i + 1) + " is empty"};
    std::set<std::size_t> support;
    for (std::size_t l : f.letters) {
      if (l >= rs.rank())
        return {false, "factor letter out of range in factor " + std::to_string(i + 1)};
      if (!support.insert(l).second)
        return {false, "factor " + std::to_string(i + 1) +
                           " repeats a simple reflection"};
    }
    if (i > 0 && !std::includes(prev_support.begin(), prev_support.end(),
                                support.begin(), support.end()))
      return {false, "support of factor " + std::to_string(i + 1) +
                         " is not contained in the previous factor"};
    prev_support = std::move(support);
  }
  auto [len, reduced] = length_and_reduced(rs, spec.concatenation());
  (void)len;
  if (!reduced) return {false, "concatenation is not reduced"};
  return {true, ""};
}

WCenterDescription center_w(const RootSystem& rs, const DecompositionSpec& spec) {
  auto check = validate_decomposition(rs, spec);
  require(check.valid, "invalid decomposition: " + check.diagnostic);

  // w_1^{-1} w is the product of the factors after the first.
  WeylElement tail = WeylElement::identity(rs);
  for (std::size_t i = 1; i < spec.factors.size(); ++i)
    tail = tail * evaluate(rs, spec.factors[i]);

  std::vector<std::size_t> support;
  std::set<std::size_t> s1(spec.factors[0].letters.begin(),
                           spec.factors[0].letters.end());
  support.assign(s1.begin(), s1.end());

  std::vector<std::size_t> imax(rs.rank(), 0);
  for (const auto& f : spec.factors)
    for (std::size_t l : f.letters) ++imax[l];

  // Vector kernel of (1 - tail) on the span of the used fundamental weights.
  IntMat m(rs.rank(), support.size());
  for (std::size_t sc = 0; sc < support.size(); ++sc) {
    Weight lam = rs.fundamental_weight(support[sc]);
    Weight diff{lam.coords - tail.apply(lam).coords};
    for (std::size_t rrow = 0; rrow < rs.rank(); ++rrow)
      m.at(rrow, sc) = diff.coords[rrow];
  }
  IntMat kernel = integer_kernel(m);

  // Factor-grid indexing for the delta exponents.
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> index;
  for (std::size_t t = 1; t <= spec.factors.size(); ++t)
    for (std::size_t l : spec.factors[t - 1].letters) {
      index[{l, t}] = pairs.size();
      pairs.emplace_back(l, t);
    }

  WCenterDescription desc;
  desc.support = support;
  desc.dimension = kernel.rows();
  for (std::size_t row = 0; row < kernel.rows(); ++row) {
    WCenterGenerator gen;
    gen.n = IntVec(rs.rank(), Int(0));
    gen.delta_exps = IntVec(pairs.size(), Int(0));
    std::string rendered;
    for (std::size_t sc = 0; sc < support.size(); ++sc) {
      Int c = kernel.at(row, sc);
      if (c == 0) continue;
      std::size_t letter = support[sc];
      gen.n[letter] = c;
      gen.delta_exps[index[{letter, 1}]] += c;
      std::string factor = "D" + std::to_string(letter + 1) + ",1";
      if (imax[letter] > 1) {
        gen.delta_exps[index[{letter, imax[letter]}]] += c;
        factor = "(" + factor + "*D" + std::to_string(letter + 1) + "," +
                 std::to_string(imax[letter]) + ")";
      }
      if (c != 1) factor += "^" + c.get_str();
      if (!rendered.empty()) rendered += "*";
      rendered += factor;
    }
    gen.rendered = rendered.empty() ? "1" : rendered;
    desc.generators.push_back(std::move(gen));
  }
  return desc;
}

std::size_t DeltaLattice::imax(std::size_t letter) const {
  std::size_t n = 0;
  for (const auto& f : spec_.factors)
    for (std::size_t l : f.letters) n += (l == letter);
  return n;
}

std::size_t DeltaLattice::pair_index(std::size_t letter, std::size_t t) const {
  for (std::size_t i = 0; i < pairs_.size(); ++i)
    if (pairs_[i].letter == letter && pairs_[i].t == t) return i;
  throw input_error("factor pair out of range");
}

std::size_t DeltaLattice::extended_index(std::size_t letter, std::size_t t) const {
  for (std::size_t i = 0; i < ext_.size(); ++i)
    if (ext_[i].letter == letter && ext_[i].t == t) return i;
  throw input_error("extended pair out of range");
}

DeltaLattice::DeltaLattice(const RootSystem& rs, const DecompositionSpec& spec)
    : rs_(&rs), spec_(spec) {
  auto check = validate_decomposition(rs, spec);
  require(check.valid, "invalid decomposition: " + check.diagnostic);
  build();
  certify();
}

void DeltaLattice::build() {
  const RootSystem& rs = *rs_;
  factor_prefix_.clear();
  factor_prefix_.push_back(WeylElement::identity(rs));
  for (const auto& f : spec_.factors)
    factor_prefix_.push_back(factor_prefix_.back() * evaluate(rs, f));

  // Extended generators: the degree-zero minors first (every letter), then the
  // factor pairs in factor order, letters in written factor order.
  ext_.clear();
  for (std::size_t l = 0; l < rs.rank(); ++l) ext_.push_back({l, 0});
  pairs_.clear();
  for (std::size_t t = 1; t <= spec_.factors.size(); ++t)
    for (std::size_t l : spec_.factors[t - 1].letters) {
      pairs_.push_back({l, t});
      ext_.push_back({l, t});
    }

  auto entry = [&](const Pair& x, const Pair& y) {
    // (Lambda_s, (1 - u_t^{-1} u_d) Lambda_c) for x = (s,t) before y = (c,d).
    WeylElement rel = factor_prefix_[x.t].inverse() * factor_prefix_[y.t];
    Weight lam_c = rs.fundamental_weight(y.letter);
    Weight diff{lam_c.coords - rel.apply(lam_c).coords};
    IntVec root_coords = [&] {
      auto c = solve_integer(rs.cartan(), diff.coords);
      ensure(c.has_value(), "minor weight difference escaped the root lattice");
      return *c;
    }();
    return rs.inner(RootVector{root_coords},
                    rs.fundamental_weight(x.letter));
  };
  auto build_form = [&](const std::vector<Pair>& ps) {
    IntMat f(ps.size(), ps.size());
    for (std::size_t i = 0; i < ps.size(); ++i)
      for (std::size_t j = i + 1; j < ps.size(); ++j) {
        Int e = entry(ps[i], ps[j]);
        f.at(i, j) = e;
        f.at(j, i) = -e;
      }
    return f;
  };
  ext_form_ = build_form(ext_);
  // The public form is the principal block on the t >= 1 pairs.
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < ext_.size(); ++i)
    if (ext_[i].t >= 1) idx.push_back(i);
  form_ = ext_form_.submatrix(idx, idx);
}

IntVec DeltaLattice::nabla(std::size_t i, std::size_t j0) const {
  const RootSystem& rs = *rs_;
  require(i < rs.rank() && j0 >= 2 && j0 <= imax(i), "nabla index out of range");
  IntVec v(ext_.size(), Int(0));
  v[extended_index(i, j0)] += 1;
  v[extended_index(i, j0 - 1)] += 1;
  // Position of i inside factor j0, for the within-factor order.
  const auto& letters = spec_.factors[j0 - 1].letters;
  std::size_t pos_i = std::find(letters.begin(), letters.end(), i) - letters.begin();
  for (std::size_t j = 0; j < rs.rank(); ++j) {
    if (j == i || rs.cartan().at(j, i) >= 0) continue;
    std::size_t cap = j0 - 1;
    auto it = std::find(letters.begin(), letters.end(), j);
    if (it != letters.end() &&
        static_cast<std::size_t>(it - letters.begin()) < pos_i)
      cap = j0;  // (j, j0) still precedes (i, j0) inside the factor
    std::size_t p = std::min(imax(j), cap);
    v[extended_index(j, p)] += rs.cartan().at(j, i);
  }
  return v;
}

void DeltaLattice::certify() {
  const RootSystem& rs = *rs_;
  auto gamma = [&](std::size_t i, std::size_t j0, const Pair& p) -> Int {
    if (p.letter != i) return 0;
    return p.t >= j0 ? Int(-rs.symmetrizer(i)) : Int(rs.symmetrizer(i));
  };
  // Step-pattern certificates for every nabla.
  for (std::size_t i = 0; i < rs.rank(); ++i) {
    for (std::size_t j0 = 2; j0 <= imax(i); ++j0) {
      IntVec nb = nabla(i, j0);
      IntVec image = ext_form_.apply(nb);
      for (std::size_t k = 0; k < ext_.size(); ++k) {
        if (ext_[k].t == 0) continue;
        ensure(image[k] == gamma(i, j0, ext_[k]),
               "nabla step pattern failed at letter " + std::to_string(i + 1));
        ++certs_.nabla_checked;
      }
    }
  }
  // Interior minors: 2 d_i e_{(i,j0)} is hit by a nabla ratio.
  for (std::size_t i = 0; i < rs.rank(); ++i) {
    for (std::size_t j0 = 2; j0 + 1 <= imax(i); ++j0) {
      IntVec ratio = nabla(i, j0 + 1) - nabla(i, j0);
      IntVec image = ext_form_.apply(ratio);
      for (std::size_t k = 0; k < ext_.size(); ++k) {
        if (ext_[k].t == 0) continue;
        Int expect = (ext_[k].letter == i && ext_[k].t == j0)
                         ? Int(2 * rs.symmetrizer(i))
                         : Int(0);
        ensure(image[k] == expect, "interior range certificate failed");
      }
      ++certs_.interior_checked;
    }
  }
  // Endpoint ratio d_i (e_{(i,imax)} - e_{(i,1)}) is reachable, constraining
  // only the commutations against the t >= 1 generators.
  std::vector<std::size_t> rows;
  for (std::size_t k = 0; k < ext_.size(); ++k)
    if (ext_[k].t >= 1) rows.push_back(k);
  std::vector<std::size_t> all_cols(ext_.size());
  for (std::size_t k = 0; k < ext_.size(); ++k) all_cols[k] = k;
  IntMat subsystem = ext_form_.submatrix(rows, all_cols);
  for (std::size_t i = 0; i < rs.rank(); ++i) {
    std::size_t top = imax(i);
    if (top == 0) continue;
    IntVec target(rows.size(), Int(0));
    for (std::size_t k = 0; k < rows.size(); ++k) {
      const Pair& p = ext_[rows[k]];
      if (p.letter != i) continue;
      if (p.t == top) target[k] += rs.symmetrizer(i);
      if (p.t == 1) target[k] -= rs.symmetrizer(i);
    }
    ensure(solve_integer(subsystem, target).has_value(),
           "endpoint range certificate failed at letter " + std::to_string(i + 1));
    ++certs_.endpoints_checked;
  }
}

Int minor_exponent(const RootSystem& rs, const Weight& lambda, const Weight& mu,
                   const WeylElement& s, const WeylElement& s_outer,
                   const WeylElement& t, const WeylElement& t_outer) {
  for (const auto& c : lambda.coords) require(c >= 0, "lambda must be dominant");
  for (const auto& c : mu.coords) require(c >= 0, "mu must be dominant");
  require(
      (s_outer * s).length() == s_outer.length() + s.length(),
      "length additivity fails on the left pair");
  require(
      (t_outer * t).length() == t_outer.length() + t.length(),
      "length additivity fails on the right pair");
  // (s lambda, mu) - (lambda, t mu) = (s lambda - lambda, mu) + (lambda, (1-t) mu),
  // both pairings of a root-lattice vector with a weight.
  Weight slam = s.apply(lambda);
  IntVec left = weight_to_root_lattice(rs, Weight{slam.coords - lambda.coords});
  IntVec right = weight_to_root_lattice(
      rs, Weight{mu.coords - t.apply(mu).coords});
  return rs.inner(RootVector{left}, mu) + rs.inner(RootVector{right}, lambda);
}

Int twisted_exponent(const BetaGrid& grid, std::size_t pos_st, std::size_t pos_cd) {
  require(pos_st < pos_cd && pos_cd < grid.size(),
          "twisted exponent needs strictly ordered grid positions");
  const RootSystem& rs = grid.system();
  std::size_t s = grid.letter_at(pos_st), t = grid.occ_at(pos_st);
  std::size_t c = grid.letter_at(pos_cd), d = grid.occ_at(pos_cd);
  const RootVector& bs = grid.betas()[pos_st];
  const RootVector& bc = grid.betas()[pos_cd];
  IntVec ps(rs.rank(), Int(0)), pc(rs.rank(), Int(0));
  for (std::size_t k = 1; k <= t; ++k) ps = ps + grid.beta(s, k).coords;
  for (std::size_t k = 1; k <= d; ++k) pc = pc + grid.beta(c, k).coords;
  return rs.inner(bs, bc) + rs.inner(bc, rs.fundamental_weight(s)) -
         rs.inner(bs, rs.fundamental_weight(c)) - rs.inner(RootVector{ps}, bc) +
         rs.inner(RootVector{pc}, bs);
}

SchubertCenter double_schubert_center(const BetaGrid& wc_grid, std::size_t prefix_len) {
  const RootSystem& rs = wc_grid.system();
  require(prefix_len < wc_grid.size(),
          "the prefix must be strictly shorter than the full word");

  SchubertCenter out;
  out.prefix_len = prefix_len;
  WeylElement wa = wc_grid.prefix(prefix_len);
  const WeylElement& wc = wc_grid.element();

  std::map<std::size_t, std::vector<std::size_t>> windows;  // letter -> positions
  for (std::size_t pos = prefix_len; pos < wc_grid.size(); ++pos) {
    // Occurrences past the prefix form the half-open window.
    windows[wc_grid.letter_at(pos)].push_back(pos);
    out.window_positions.push_back(pos);
  }
  for (const auto& [letter, positions] : windows) out.support.push_back(letter);

  // Kernel of (w_a + w_c) paired against the window betas.
  IntMat g(out.window_positions.size(), out.support.size());
  for (std::size_t sc = 0; sc < out.support.size(); ++sc) {
    Weight lam = rs.fundamental_weight(out.support[sc]);
    Weight target{wa.apply(lam).coords + wc.apply(lam).coords};
    for (std::size_t k = 0; k < out.window_positions.size(); ++k)
      g.at(k, sc) = rs.inner(wc_grid.betas()[out.window_positions[k]], target);
  }
  IntMat kernel = integer_kernel(g);
  out.dimension = kernel.rows();

  std::map<std::size_t, std::size_t> window_index;
  for (std::size_t k = 0; k < out.window_positions.size(); ++k)
    window_index[out.window_positions[k]] = k;

  for (std::size_t row = 0; row < kernel.rows(); ++row) {
    SchubertCenter::Generator gen;
    gen.n = IntVec(rs.rank(), Int(0));
    gen.window_exps = IntVec(out.window_positions.size(), Int(0));
    IntVec wt(rs.rank(), Int(0));
    for (std::size_t sc = 0; sc < out.support.size(); ++sc) {
      Int c = kernel.at(row, sc);
      if (c == 0) continue;
      std::size_t letter = out.support[sc];
      gen.n[letter] = c;
      for (std::size_t pos : windows[letter]) gen.window_exps[window_index[pos]] += c;
      Weight lam = rs.fundamental_weight(letter);
      wt = wt + scale(c, wa.apply(lam).coords - wc.apply(lam).coords);
    }
    gen.weight = Weight{wt};
    gen.rendered = render_product("D", gen.n);
    out.generators.push_back(std::move(gen));
  }
  return out;
}

}  // namespace qnc
