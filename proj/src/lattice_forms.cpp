#include "qnc/lattice_forms.hpp"

namespace qnc {

SkewForm generator_form(const BetaGrid& grid) {
  const std::size_t r = grid.size();
  const RootSystem& rs = grid.system();
  IntMat m(r, r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = i + 1; j < r; ++j) {
      Int v = rs.inner(grid.betas()[i], grid.betas()[j]);
      m.at(i, j) = v;
      m.at(j, i) = -v;
    }
  return SkewForm(std::move(m));
}

IntMat prefix_matrix(const BetaGrid& grid) {
  const std::size_t r = grid.size();
  IntMat a(r, r);
  for (std::size_t row = 0; row < r; ++row) {
    std::size_t s = grid.letter_at(row), d = grid.occ_at(row);
    for (std::size_t t = 1; t <= d; ++t) a.at(row, grid.position(s, t)) = 1;
  }
  return a;
}

SkewForm minor_form(const BetaGrid& grid, const SkewForm& l0) {
  IntMat a = prefix_matrix(grid);
  return SkewForm(a * l0.entries * a.transpose());
}

IntVec covariant_exps(const BetaGrid& grid, std::size_t s) {
  return minor_exps(grid, s, grid.occurrences(s));
}

IntVec minor_exps(const BetaGrid& grid, std::size_t s, std::size_t t) {
  IntVec v(grid.size(), Int(0));
  require(t <= grid.occurrences(s), "occurrence index out of range");
  for (std::size_t k = 1; k <= t; ++k) v[grid.position(s, k)] = 1;
  return v;
}

IntVec half_column_m(const BetaGrid& grid, std::size_t s, std::size_t t) {
  require(t >= 1 && t <= grid.occurrences(s), "half column out of range");
  const RootSystem& rs = grid.system();
  IntVec v(grid.size(), Int(0));
  v[grid.position(s, t)] += 1;
  if (t >= 2) v[grid.position(s, t - 1)] += 1;
  // Neighbor minors at their last occurrence before this pair; an absent
  // occurrence is the empty product and contributes nothing.
  std::size_t n = grid.position(s, t) + 1;
  for (std::size_t j = 0; j < rs.rank(); ++j) {
    if (j == s || rs.cartan().at(j, s) >= 0) continue;
    std::size_t p = grid.prefix_occurrences(j, n);
    if (p == 0) continue;
    v[grid.position(j, p)] += rs.cartan().at(j, s);
  }
  return v;
}

IntVec exchange_column_m(const BetaGrid& grid, std::size_t s, std::size_t t) {
  require(t + 1 <= grid.occurrences(s), "exchange column needs a later occurrence");
  return half_column_m(grid, s, t) - half_column_m(grid, s, t + 1);
}

IntVec minor_basis_to_z(const BetaGrid& grid, const IntVec& m_exps) {
  return prefix_matrix(grid).transpose().apply(m_exps);
}

CompatiblePair compatible_pair(const BetaGrid& grid, const SkewForm& l0) {
  const RootSystem& rs = grid.system();
  SkewForm lbar = minor_form(grid, l0);
  CompatiblePair pair;
  for (std::size_t pos = 0; pos < grid.size(); ++pos) {
    std::size_t s = grid.letter_at(pos), t = grid.occ_at(pos);
    if (t < grid.occurrences(s)) pair.columns.emplace_back(s, t);
  }
  pair.b = IntMat(grid.size(), pair.columns.size());
  for (std::size_t c = 0; c < pair.columns.size(); ++c) {
    auto [s, t] = pair.columns[c];
    IntVec col = exchange_column_m(grid, s, t);
    for (std::size_t i = 0; i < grid.size(); ++i) pair.b.at(i, c) = col[i];
    pair.diagonal.push_back(2 * rs.symmetrizer(s));
    // The defining contract of the pair.
    IntVec image = lbar.entries.apply(col);
    for (std::size_t i = 0; i < grid.size(); ++i) {
      Int expect = (i == grid.position(s, t)) ? pair.diagonal.back() : Int(0);
      ensure(image[i] == expect, "compatible pair contract failed at " +
                                     grid.word().to_string());
    }
  }
  return pair;
}

ColumnReduction column_reduce(const SkewForm& lbar, const BetaGrid& grid) {
  // Re-certify the exchange columns; the reduced shape rests on them.
  SkewForm l0 = generator_form(grid);
  compatible_pair(grid, l0);

  ColumnReduction red;
  std::vector<std::size_t> final_pos, other_pos;
  for (std::size_t pos = 0; pos < grid.size(); ++pos) {
    std::size_t s = grid.letter_at(pos), t = grid.occ_at(pos);
    if (t == grid.occurrences(s)) {
      red.final_pairs.emplace_back(s, t);
      final_pos.push_back(pos);
    } else {
      other_pos.push_back(pos);
    }
  }
  red.r0 = final_pos.size();
  red.y = lbar.entries.submatrix(other_pos, final_pos);
  red.z = lbar.entries.submatrix(final_pos, final_pos);
  red.det_l = bareiss_det(lbar.entries);
  red.det_z = bareiss_det(red.z);
  Int scale = Int(1) << (grid.size() - red.r0);
  Int rhs = scale * red.det_z;
  if (red.det_l == 0 && rhs == 0) {
    red.sign = 0;
    red.relation_holds = true;
  } else if (red.det_l == rhs) {
    red.sign = 1;
    red.relation_holds = true;
  } else if (red.det_l == -rhs) {
    red.sign = -1;
    red.relation_holds = true;
  }
  return red;
}

}  // namespace qnc
