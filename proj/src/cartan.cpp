#include "qnc/cartan.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace qnc {

RootSystem::RootSystem(char family, std::size_t rank)
    : family_(static_cast<char>(std::toupper(family))), rank_(rank) {
  const bool valid = (family_ == 'A' && rank_ >= 1) ||
                     (family_ == 'B' && rank_ >= 2) ||
                     (family_ == 'C' && rank_ >= 2) ||
                     (family_ == 'D' && rank_ >= 4) ||
                     (family_ == 'E' && rank_ >= 6 && rank_ <= 8) ||
                     (family_ == 'F' && rank_ == 4) ||
                     (family_ == 'G' && rank_ == 2);
  require(valid, std::string("not a finite type: ") + family_ + std::to_string(rank_));
  require(rank_ <= 32, "rank out of supported range");
  build_cartan();
  enumerate_positive_roots();
}

RootSystem RootSystem::parse(const std::string& type) {
  require(type.size() >= 2, "type string must be letter+rank, e.g. A3");
  char fam = type[0];
  std::size_t rank = 0;
  for (std::size_t i = 1; i < type.size(); ++i) {
    require(std::isdigit(static_cast<unsigned char>(type[i])), "bad rank in type string");
    rank = rank * 10 + static_cast<std::size_t>(type[i] - '0');
  }
  return RootSystem(fam, rank);
}

void RootSystem::build_cartan() {
  const std::size_t n = rank_;
  cartan_ = IntMat(n, n);
  sym_ = IntVec(n, Int(1));
  for (std::size_t i = 0; i < n; ++i) cartan_.at(i, i) = 2;
  auto bond = [&](std::size_t i, std::size_t j, long aij, long aji) {
    cartan_.at(i, j) = aij;
    cartan_.at(j, i) = aji;
  };
  auto chain = [&](std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i) bond(i, i + 1, -1, -1);
  };
  switch (family_) {
    case 'A':
      chain(0, n - 1);
      break;
    case 'B':  // alpha_n short
      chain(0, n - 2);
      bond(n - 2, n - 1, -1, -2);
      for (std::size_t i = 0; i + 1 < n; ++i) sym_[i] = 2;
      break;
    case 'C':  // alpha_n long
      chain(0, n - 2);
      bond(n - 2, n - 1, -2, -1);
      sym_[n - 1] = 2;
      break;
    case 'D':
      chain(0, n - 3);
      bond(n - 3, n - 2, -1, -1);
      bond(n - 3, n - 1, -1, -1);
      break;
    case 'E':  // chain 1-3-4-5-..., node 2 hangs off node 4
      bond(0, 2, -1, -1);
      bond(1, 3, -1, -1);
      chain(2, n - 1);
      break;
    case 'F':  // alpha_1, alpha_2 long; double bond between 2 and 3
      chain(0, 3);
      bond(1, 2, -1, -2);
      sym_[0] = sym_[1] = 2;
      break;
    case 'G':  // alpha_1 short, alpha_2 long
      bond(0, 1, -3, -1);
      sym_[1] = 3;
      break;
  }
}

void RootSystem::enumerate_positive_roots() {
  // Orbit of the simple roots under simple reflections; a root is positive
  // exactly when all simple-root coordinates are >= 0.
  std::set<IntVec> seen;
  std::vector<IntVec> queue;
  for (std::size_t i = 0; i < rank_; ++i) {
    IntVec e(rank_, Int(0));
    e[i] = 1;
    seen.insert(e);
    queue.push_back(e);
  }
  while (!queue.empty()) {
    IntVec v = queue.back();
    queue.pop_back();
    for (std::size_t i = 0; i < rank_; ++i) {
      Int pairing(0);
      for (std::size_t j = 0; j < rank_; ++j) pairing += cartan_.at(i, j) * v[j];
      IntVec w = v;
      w[i] -= pairing;
      if (seen.insert(w).second) queue.push_back(w);
    }
  }
  for (const auto& v : seen) {
    if (std::all_of(v.begin(), v.end(), [](const Int& c) { return c >= 0; }))
      positive_.push_back(RootVector{v});
  }
  auto height = [](const RootVector& r) {
    Int h(0);
    for (const auto& c : r.coords) h += c;
    return h;
  };
  std::sort(positive_.begin(), positive_.end(),
            [&](const RootVector& x, const RootVector& y) {
              Int hx = height(x), hy = height(y);
              if (hx != hy) return hx < hy;
              return x.coords < y.coords;
            });
  ensure(positive_.size() == expected_positive_count(),
         "positive root count mismatch for " + name());
}

std::size_t RootSystem::expected_positive_count() const {
  const std::size_t n = rank_;
  switch (family_) {
    case 'A': return n * (n + 1) / 2;
    case 'B':
    case 'C': return n * n;
    case 'D': return n * (n - 1);
    case 'E': return n == 6 ? 36 : n == 7 ? 63 : 120;
    case 'F': return 24;
    case 'G': return 6;
  }
  return 0;
}

RootVector RootSystem::simple_root(std::size_t i) const {
  require(i < rank_, "simple root index out of range");
  IntVec e(rank_, Int(0));
  e[i] = 1;
  return RootVector{e};
}

Weight RootSystem::fundamental_weight(std::size_t i) const {
  require(i < rank_, "fundamental weight index out of range");
  IntVec e(rank_, Int(0));
  e[i] = 1;
  return Weight{e};
}

Weight RootSystem::to_weight(const RootVector& r) const {
  require(r.coords.size() == rank_, "root vector rank mismatch");
  return Weight{cartan_.apply(r.coords)};
}

std::vector<Rat> RootSystem::to_root_coords(const Weight& w) const {
  require(w.coords.size() == rank_, "weight rank mismatch");
  // Solve cartan * x = w over the rationals by Gaussian elimination.
  const std::size_t n = rank_;
  std::vector<std::vector<Rat>> aug(n, std::vector<Rat>(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = Rat(cartan_.at(i, j));
    aug[i][n] = Rat(w.coords[i]);
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (aug[piv][c] == 0) ++piv;  // Cartan matrices are nonsingular
    std::swap(aug[piv], aug[c]);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || aug[i][c] == 0) continue;
      Rat f = aug[i][c] / aug[c][c];
      for (std::size_t j = c; j <= n; ++j) aug[i][j] -= f * aug[c][j];
    }
  }
  std::vector<Rat> x(n);
  for (std::size_t i = 0; i < n; ++i) {
    x[i] = aug[i][n] / aug[i][i];
    x[i].canonicalize();
  }
  return x;
}

bool RootSystem::is_root(const RootVector& r) const {
  RootVector neg{r.coords};
  for (auto& c : neg.coords) c = -c;
  return is_positive_root(r) || is_positive_root(neg);
}

bool RootSystem::is_positive_root(const RootVector& r) const {
  return std::binary_search(
      positive_.begin(), positive_.end(), r,
      [](const RootVector& x, const RootVector& y) {
        Int hx(0), hy(0);
        for (const auto& c : x.coords) hx += c;
        for (const auto& c : y.coords) hy += c;
        if (hx != hy) return hx < hy;
        return x.coords < y.coords;
      });
}

Int RootSystem::inner(const RootVector& x, const RootVector& y) const {
  require(x.coords.size() == rank_ && y.coords.size() == rank_, "rank mismatch");
  Int s(0);
  for (std::size_t i = 0; i < rank_; ++i) {
    if (x.coords[i] == 0) continue;
    for (std::size_t j = 0; j < rank_; ++j)
      s += x.coords[i] * y.coords[j] * sym_[i] * cartan_.at(i, j);
  }
  return s;
}

Int RootSystem::inner(const RootVector& x, const Weight& y) const {
  require(x.coords.size() == rank_ && y.coords.size() == rank_, "rank mismatch");
  // (alpha_i, Lambda_j) = delta_ij d_i
  Int s(0);
  for (std::size_t i = 0; i < rank_; ++i) s += x.coords[i] * sym_[i] * y.coords[i];
  return s;
}

Int RootSystem::inner(const Weight& x, const RootVector& y) const { return inner(y, x); }

Rat RootSystem::inner_weights(const Weight& x, const Weight& y) const {
  auto rx = to_root_coords(x);
  Rat s(0);
  for (std::size_t i = 0; i < rank_; ++i) {
    s += rx[i] * Rat(sym_[i] * y.coords[i]);
  }
  s.canonicalize();
  return s;
}

Weight RootSystem::cartan_column_identity(std::size_t i) const {
  require(i < rank_, "index out of range");
  // s_i(Lambda_i) computed through the invariant form, not through the
  // Cartan column, so the vanishing is a genuine cross-check.
  Weight li = fundamental_weight(i);
  RootVector ai = simple_root(i);
  Int k = inner(ai, li) / sym_[i];
  Weight ai_wt = to_weight(ai);
  IntVec out(rank_, Int(0));
  for (std::size_t j = 0; j < rank_; ++j) {
    out[j] = 2 * li.coords[j] - k * ai_wt.coords[j];  // (s_i + 1)(Lambda_i)
    if (j != i) out[j] += cartan_.at(j, i);
  }
  return Weight{out};
}

}  // namespace qnc
