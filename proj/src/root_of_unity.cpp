#include "qnc/root_of_unity.hpp"

#include <algorithm>

namespace qnc {

namespace {

// Congruence reduction of the region starting at block `b`: every elementary
// row operation on M is mirrored by the same column operation (so M stays a
// congruence image) and recorded on U (rows only).
struct Congruence {
  IntMat& m;
  IntMat& u;

  void swap(std::size_t i, std::size_t j) {
    m.swap_rows(i, j);
    m.swap_cols(i, j);
    u.swap_rows(i, j);
  }
  void add(std::size_t i, std::size_t j, const Int& c) {
    m.add_row(i, j, c);
    m.add_col(i, j, c);
    u.add_row(i, j, c);
  }
  void negate(std::size_t i) {
    for (std::size_t k = 0; k < m.cols(); ++k) {
      m.at(i, k) = -m.at(i, k);
      m.at(k, i) = -m.at(k, i);
    }
    for (std::size_t k = 0; k < u.cols(); ++k) u.at(i, k) = -u.at(i, k);
  }
};

// Reduces blocks b, b+1, ... of the skew matrix; returns the number of 2x2
// blocks produced in total (including the `b` already settled).
std::size_t reduce_from(Congruence cg, std::size_t b) {
  IntMat& m = cg.m;
  const std::size_t n = m.rows();
  while (true) {
    const std::size_t lo = 2 * b;
    if (lo + 1 >= n) break;
    // Smallest nonzero |entry| in the dirty region, upper triangle.
    std::size_t pi = n, pj = n;
    Int best(0);
    for (std::size_t i = lo; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        if (m.at(i, j) == 0) continue;
        Int a = abs(m.at(i, j));
        if (pi == n || a < best) {
          best = a;
          pi = i;
          pj = j;
        }
      }
    if (pi == n) break;  // region is zero
    if (pi != lo) cg.swap(pi, lo);
    if (pj == lo) pj = pi;  // the swap moved it
    if (pj != lo + 1) cg.swap(pj, lo + 1);
    if (m.at(lo, lo + 1) < 0) cg.negate(lo + 1);
    const Int d = m.at(lo, lo + 1);
    bool restart = false;
    for (std::size_t k = lo + 2; k < n && !restart; ++k) {
      // clear m[lo][k] with column lo+1 (pairing d), then m[lo+1][k] with
      // column lo (pairing -d); non-divisible remainders become new pivots.
      Int q;
      mpz_fdiv_q(q.get_mpz_t(), m.at(lo, k).get_mpz_t(), d.get_mpz_t());
      cg.add(k, lo + 1, -q);
      if (m.at(lo, k) != 0) {
        cg.swap(k, lo + 1);
        restart = true;
        break;
      }
      mpz_fdiv_q(q.get_mpz_t(), m.at(lo + 1, k).get_mpz_t(), d.get_mpz_t());
      cg.add(k, lo, q);
      if (m.at(lo + 1, k) != 0) {
        cg.swap(k, lo);
        restart = true;
      }
    }
    if (restart) continue;
    ++b;
  }
  return b;
}

std::vector<std::pair<Int, int>> trial_factor(Int n, Int& leftover) {
  std::vector<std::pair<Int, int>> factors;
  n = abs(n);
  leftover = 1;
  if (n <= 1) return factors;
  for (Int p = 2; p * p <= n && p <= 1000000; p += (p == 2 ? 1 : 2)) {
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e) factors.emplace_back(p, e);
  }
  if (n > 1) {
    if (n <= 1000000 * Int(1000000))
      factors.emplace_back(n, 1);  // remaining cofactor is prime
    else
      leftover = n;
  }
  return factors;
}

}  // namespace

SkewNormalForm skew_normal_form(const SkewForm& l) {
  const std::size_t n = l.dim();
  IntMat m = l.entries;
  IntMat u = IntMat::identity(n);
  Congruence cg{m, u};
  std::size_t blocks = reduce_from(cg, 0);

  // Enforce the divisibility chain: a violated pair is mixed by a congruence
  // row/column addition, which lets the next pass shrink the earlier divisor.
  for (std::size_t guard = 0; guard < 64 * (n + 1); ++guard) {
    std::size_t bad = blocks;
    for (std::size_t i = 0; i + 1 < blocks; ++i)
      if (m.at(2 * i, 2 * i + 1) != 0 &&
          m.at(2 * (i + 1), 2 * (i + 1) + 1) % m.at(2 * i, 2 * i + 1) != 0) {
        bad = i;
        break;
      }
    if (bad == blocks) break;
    cg.add(2 * bad, 2 * (bad + 1), 1);
    blocks = reduce_from(cg, bad);
  }

  SkewNormalForm out;
  out.u = u;
  for (std::size_t i = 0; i < blocks; ++i) out.divisors.push_back(m.at(2 * i, 2 * i + 1));
  out.nullity = n - 2 * blocks;

  // Exact verification of the congruence and its invariants.
  IntMat check = u * l.entries * u.transpose();
  ensure(check == m, "congruence bookkeeping failed");
  for (std::size_t i = 0; i + 1 < out.divisors.size(); ++i)
    ensure(out.divisors[i] > 0 && out.divisors[i + 1] % out.divisors[i] == 0,
           "divisor chain failed");
  IntMat expect(n, n);
  for (std::size_t i = 0; i < blocks; ++i) {
    expect.at(2 * i, 2 * i + 1) = out.divisors[i];
    expect.at(2 * i + 1, 2 * i) = -out.divisors[i];
  }
  ensure(m == expect, "residual entries after skew reduction");
  Int du = bareiss_det(u);
  ensure(du == 1 || du == -1, "transform is not unimodular");
  return out;
}

PIDegreeReport pi_degree(const SkewForm& l, const Int& m) {
  require(m >= 1, "the order of the root of unity must be positive");
  PIDegreeReport report;
  report.m = m;
  if (m % 2 == 0)
    report.warnings.push_back("even order: the root-of-unity analysis assumes odd m");
  SkewNormalForm snf = skew_normal_form(l);
  report.divisors = snf.divisors;
  report.h = 1;
  report.pi_degree = 1;
  for (const auto& d : snf.divisors) {
    Int contrib = m / gcd(d, m);
    report.block_contributions.push_back(contrib);
    report.pi_degree *= contrib;
    report.h *= contrib * contrib;
  }
  return report;
}

Int brute_force_image(const SkewForm& l, long m, std::size_t dim_guard, long m_guard) {
  const std::size_t n = l.dim();
  require(m >= 1, "modulus must be positive");
  require(n <= dim_guard && m <= m_guard,
          "brute-force image enumeration exceeds its guard");
  if (n == 0) return 1;
  std::vector<std::vector<long>> lm(n, std::vector<long>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Int r;
      mpz_fdiv_r_ui(r.get_mpz_t(), l.entries.at(i, j).get_mpz_t(),
                    static_cast<unsigned long>(m));
      lm[i][j] = r.get_si();
    }
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= static_cast<std::size_t>(m);
  std::vector<bool> hit(total, false);
  std::vector<long> x(n, 0);
  Int count(0);
  while (true) {
    std::size_t code = 0;
    for (std::size_t i = n; i-- > 0;) {
      long acc = 0;
      for (std::size_t j = 0; j < n; ++j) acc += lm[i][j] * x[j];
      code = code * static_cast<std::size_t>(m) +
             static_cast<std::size_t>(((acc % m) + m) % m);
    }
    if (!hit[code]) {
      hit[code] = true;
      ++count;
    }
    std::size_t pos = 0;
    while (pos < n && ++x[pos] == m) x[pos++] = 0;
    if (pos == n) break;
  }
  return count;
}

RootCentralityReport root_centrality_report(const BetaGrid& grid, const Int& m) {
  require(m >= 2, "root of unity order must be at least 2");
  const RootSystem& rs = grid.system();
  const std::size_t r = grid.size();
  SkewForm l0 = generator_form(grid);
  TwistedAlgebra alg(l0);

  RootCentralityReport report;
  report.m = m;
  report.r = r;

  auto central_mod = [&](const IntVec& exps) { return alg.centrality_test(exps, m); };
  auto element_central_mod = [&](const LaurentElement& e) {
    for (std::size_t i = 0; i < r; ++i) {
      IntVec unit(r, Int(0));
      unit[i] = 1;
      LaurentElement zi = LaurentElement::monomial(0, unit);
      if (reduce_q_exponents(alg.multiply(e, zi), m) !=
          reduce_q_exponents(alg.multiply(zi, e), m))
        return false;
    }
    return true;
  };

  report.generator_powers_central = true;
  for (std::size_t i = 0; i < r; ++i) {
    IntVec exps(r, Int(0));
    exps[i] = m;
    bool ok = central_mod(exps) &&
              element_central_mod(LaurentElement::monomial(0, exps));
    report.generator_powers_central &= ok;
  }

  report.covariant_powers_central = true;
  report.inverse_replacement_ok = true;
  for (std::size_t s : grid.support()) {
    IntVec c1 = covariant_exps(grid, s);
    IntVec cm = scale(m, c1);
    report.covariant_powers_central &=
        central_mod(cm) && element_central_mod(LaurentElement::monomial(0, cm));
    // C_s * C_s^{m-1} agrees with C_s^m and is central mod m.
    LaurentElement c = LaurentElement::monomial(0, c1);
    LaurentElement power = LaurentElement::monomial(0, IntVec(r, Int(0)));
    for (Int k = 0; k < m - 1; ++k) power = alg.multiply(power, c);
    LaurentElement full = alg.multiply(c, power);
    LaurentElement direct = LaurentElement::monomial(0, IntVec(r, Int(0)));
    for (Int k = 0; k < m; ++k) direct = alg.multiply(direct, c);
    report.inverse_replacement_ok &=
        (full == direct) && element_central_mod(full);
  }

  report.minor_powers_central = true;
  for (std::size_t pos = 0; pos < r; ++pos) {
    IntVec exps = scale(m, minor_exps(grid, grid.letter_at(pos), grid.occ_at(pos)));
    report.minor_powers_central &= central_mod(exps);
  }

  SkewForm lbar = minor_form(grid, l0);
  ColumnReduction red = column_reduce(lbar, grid);
  report.r0 = red.r0;
  report.det_l = red.det_l;
  report.det_z = red.det_z;
  report.det_relation_holds = red.relation_holds;

  SkewNormalForm snf = skew_normal_form(l0);
  report.divisors = snf.divisors;
  report.unfactored_cofactor = 1;

  if (red.det_z != 0) {
    // Trivial q-generic center: every block divisor squared divides the
    // scaled determinant.
    Int scale = Int(1) << (r - red.r0);
    for (const auto& d : snf.divisors)
      if ((scale * red.det_z) % (d * d) != 0) report.divisor_squares_divide = false;
    report.det_z1 = red.det_z;
    report.unimodular_change_found = true;
  } else {
    // Nontrivial center: quotient Z by its radical through a unimodular
    // basis change (one always exists, the radical being saturated).
    IntMat radical = integer_kernel(red.z);
    const std::size_t d = radical.rows(), r0 = red.r0;
    if (d == r0) {
      report.det_z1 = 1;  // empty block
      report.unimodular_change_found = true;
    } else {
      IntMat u;
      row_hnf(radical.transpose(), &u);
      IntMat uinv = unimodular_inverse(u);
      std::vector<std::size_t> all_rows(r0), tail_cols(r0 - d);
      for (std::size_t i = 0; i < r0; ++i) all_rows[i] = i;
      for (std::size_t i = 0; i < r0 - d; ++i) tail_cols[i] = d + i;
      IntMat w = uinv.submatrix(all_rows, tail_cols);
      IntMat z1 = w.transpose() * red.z * w;
      report.det_z1 = bareiss_det(z1);
      ensure(report.det_z1 != 0, "kernel quotient is degenerate");
      report.unimodular_change_found = true;
    }
    Int det_bd(1);
    for (const auto& dv : snf.divisors) det_bd *= dv * dv;
    Int leftover;
    auto factors = trial_factor(det_bd, leftover);
    report.unfactored_cofactor = leftover;
    for (const auto& [p, e] : factors) {
      if (p == 2) continue;
      report.odd_prime_divisibility.emplace_back(p, report.det_z1 % p == 0);
    }
  }
  return report;
}

}  // namespace qnc
