#include "qnc/weyl.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>
#include <sstream>

namespace qnc {

WeylElement::WeylElement(const RootSystem& rs, IntMat mat, IntMat inv)
    : rs_(&rs), mat_(std::move(mat)), inv_(std::move(inv)) {}

WeylElement WeylElement::identity(const RootSystem& rs) {
  IntMat id = IntMat::identity(rs.rank());
  return WeylElement(rs, id, id);
}

WeylElement WeylElement::simple_reflection(const RootSystem& rs, std::size_t i) {
  require(i < rs.rank(), "simple reflection index out of range");
  // s_i(alpha_j) = alpha_j - a[i][j] alpha_i
  IntMat m = IntMat::identity(rs.rank());
  for (std::size_t j = 0; j < rs.rank(); ++j) m.at(i, j) -= rs.cartan().at(i, j);
  return WeylElement(rs, m, m);
}

WeylElement WeylElement::root_reflection(const RootSystem& rs, const RootVector& beta) {
  require(rs.is_root(beta), "reflection requires a root");
  Int norm = rs.inner(beta, beta);
  IntMat m = IntMat::identity(rs.rank());
  for (std::size_t j = 0; j < rs.rank(); ++j) {
    Int pairing = 2 * rs.inner(rs.simple_root(j), beta);
    Int c;
    mpz_divexact(c.get_mpz_t(), pairing.get_mpz_t(), norm.get_mpz_t());
    for (std::size_t k = 0; k < rs.rank(); ++k) m.at(k, j) -= c * beta.coords[k];
  }
  return WeylElement(rs, m, m);
}

WeylElement WeylElement::operator*(const WeylElement& o) const {
  require(rs_ == o.rs_, "mixed root systems");
  return WeylElement(*rs_, mat_ * o.mat_, o.inv_ * inv_);
}

WeylElement WeylElement::inverse() const { return WeylElement(*rs_, inv_, mat_); }

bool WeylElement::is_identity() const { return mat_ == IntMat::identity(rs_->rank()); }

RootVector WeylElement::apply(const RootVector& r) const {
  return RootVector{mat_.apply(r.coords)};
}

RootVector WeylElement::apply_inverse(const RootVector& r) const {
  return RootVector{inv_.apply(r.coords)};
}

Weight WeylElement::apply(const Weight& w) const {
  // Weight action: N = D^{-1} M^{-T} D, entrywise N[i][j] = d_j M^{-1}[j][i] / d_i.
  const std::size_t n = rs_->rank();
  IntVec out(n, Int(0));
  for (std::size_t i = 0; i < n; ++i) {
    Int acc(0);
    for (std::size_t j = 0; j < n; ++j)
      acc += rs_->symmetrizer(j) * inv_.at(j, i) * w.coords[j];
    Int q, rem;
    mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), acc.get_mpz_t(),
                rs_->symmetrizer(i).get_mpz_t());
    ensure(rem == 0, "weight action left the weight lattice");
    out[i] = q;
  }
  return Weight{out};
}

std::vector<RootVector> WeylElement::inversion_set() const {
  std::vector<RootVector> result;
  for (const auto& alpha : rs_->positive_roots()) {
    IntVec img = inv_.apply(alpha.coords);
    bool negative = std::all_of(img.begin(), img.end(),
                                [](const Int& c) { return c <= 0; });
    if (negative && !is_zero(img)) result.push_back(alpha);
  }
  return result;
}

std::vector<std::size_t> WeylElement::reduced_word() const {
  std::vector<std::size_t> rev;
  WeylElement w = *this;
  while (!w.is_identity()) {
    bool found = false;
    for (std::size_t i = 0; i < rs_->rank(); ++i) {
      RootVector img = w.apply(rs_->simple_root(i));
      bool negative = std::all_of(img.coords.begin(), img.coords.end(),
                                  [](const Int& c) { return c <= 0; });
      if (negative) {
        rev.push_back(i);
        w = w * simple_reflection(*rs_, i);
        found = true;
        break;
      }
    }
    ensure(found, "non-identity element with no descent");
  }
  std::reverse(rev.begin(), rev.end());
  return rev;
}

IntVec WeylElement::key() const {
  IntVec k;
  k.reserve(rs_->rank() * rs_->rank());
  for (std::size_t i = 0; i < rs_->rank(); ++i)
    for (std::size_t j = 0; j < rs_->rank(); ++j) k.push_back(mat_.at(i, j));
  return k;
}

ReducedWord ReducedWord::parse(const std::string& csv) {
  ReducedWord w;
  if (csv.empty()) return w;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    require(!tok.empty(), "empty word letter");
    long v = 0;
    try {
      v = std::stol(tok);
    } catch (...) {
      throw input_error("bad word letter: " + tok);
    }
    require(v >= 1, "word letters are 1-based positive indices");
    w.letters.push_back(static_cast<std::size_t>(v - 1));
  }
  return w;
}

std::string ReducedWord::to_string() const {
  std::string s;
  for (std::size_t k = 0; k < letters.size(); ++k) {
    if (k) s += ',';
    s += std::to_string(letters[k] + 1);
  }
  return s;
}

WeylElement evaluate(const RootSystem& rs, const ReducedWord& word) {
  WeylElement w = WeylElement::identity(rs);
  for (std::size_t i : word.letters) {
    require(i < rs.rank(), "word letter out of range");
    w = w * WeylElement::simple_reflection(rs, i);
  }
  return w;
}

std::pair<std::size_t, bool> length_and_reduced(const RootSystem& rs,
                                                const ReducedWord& word) {
  std::size_t len = evaluate(rs, word).length();
  return {len, len == word.size()};
}

BetaGrid::BetaGrid(const RootSystem& rs, const ReducedWord& word)
    : rs_(&rs), word_(word) {
  const std::size_t r = word.size();
  prefixes_.reserve(r + 1);
  prefixes_.push_back(WeylElement::identity(rs));
  std::map<std::size_t, std::size_t> counts;
  for (std::size_t k = 0; k < r; ++k) {
    std::size_t i = word.letters[k];
    require(i < rs.rank(), "word letter out of range");
    betas_.push_back(prefixes_[k].apply(rs.simple_root(i)));
    occ_.push_back(++counts[i]);
    position_[{i, counts[i]}] = k;
    prefixes_.push_back(prefixes_[k] * WeylElement::simple_reflection(rs, i));
  }
  require(element().length() == r, "word is not reduced: " + word.to_string());
  for (const auto& [letter, count] : counts) support_.push_back(letter);

  // The betas are distinct positive roots and exhaust the inversion set.
  std::set<IntVec> seen;
  for (const auto& b : betas_) {
    ensure(rs.is_positive_root(b), "beta escaped the positive roots");
    ensure(seen.insert(b.coords).second, "repeated beta in a reduced word");
  }
  auto phi = element().inversion_set();
  ensure(phi.size() == r, "inversion set size disagrees with length");
  for (const auto& alpha : phi)
    ensure(seen.count(alpha.coords) == 1, "inversion set disagrees with betas");

  // Reflection factorization: sigma_{beta_r} ... sigma_{beta_1} = element.
  WeylElement prod = WeylElement::identity(rs);
  for (std::size_t k = r; k-- > 0;)
    prod = prod * WeylElement::root_reflection(rs, betas_[k]);
  // product built left-to-right as sigma_{beta_r} first
  ensure(prod == element(), "reflection factorization failed");

  // For each used letter, the betas at that letter sum to Lambda_s - w(Lambda_s).
  for (std::size_t s : support_) {
    IntVec sum(rs.rank(), Int(0));
    for (std::size_t t = 1; t <= counts[s]; ++t)
      sum = sum + beta(s, t).coords;
    Weight ls = rs.fundamental_weight(s);
    Weight expect{ls.coords - element().apply(ls).coords};
    ensure(rs.to_weight(RootVector{sum}) == expect,
           "occurrence betas do not telescope the fundamental weight");
  }
}

const RootVector& BetaGrid::beta(std::size_t letter, std::size_t occ) const {
  return betas_[position(letter, occ)];
}

std::size_t BetaGrid::position(std::size_t letter, std::size_t occ) const {
  auto it = position_.find({letter, occ});
  require(it != position_.end(), "grid pair out of range");
  return it->second;
}

std::size_t BetaGrid::occurrences(std::size_t letter) const {
  std::size_t n = 0;
  for (std::size_t l : word_.letters) n += (l == letter);
  return n;
}

const WeylElement& BetaGrid::prefix(std::size_t k) const {
  require(k < prefixes_.size(), "prefix index out of range");
  return prefixes_[k];
}

std::size_t BetaGrid::prefix_occurrences(std::size_t letter, std::size_t n) const {
  std::size_t c = 0;
  for (std::size_t k = 0; k < n; ++k) c += (word_.letters[k] == letter);
  return c;
}

namespace {

bool image_negative(const WeylElement& w, const RootVector& alpha) {
  IntVec img = w.apply(alpha).coords;
  return std::all_of(img.begin(), img.end(), [](const Int& c) { return c <= 0; }) &&
         !is_zero(img);
}

}  // namespace

WeylElement longest_element(const RootSystem& rs) {
  std::vector<std::size_t> all(rs.rank());
  for (std::size_t i = 0; i < rs.rank(); ++i) all[i] = i;
  return longest_in_levi(rs, all);
}

WeylElement longest_in_levi(const RootSystem& rs, const std::vector<std::size_t>& levi) {
  for (std::size_t i : levi) require(i < rs.rank(), "levi index out of range");
  WeylElement w = WeylElement::identity(rs);
  bool progress = true;
  while (progress) {
    progress = false;
    for (std::size_t i : levi) {
      if (!image_negative(w, rs.simple_root(i))) {
        w = w * WeylElement::simple_reflection(rs, i);
        progress = true;
        break;
      }
    }
  }
  return w;
}

ParabolicData longest_and_parabolic(const RootSystem& rs,
                                    const std::vector<std::size_t>& levi) {
  WeylElement w0 = longest_element(rs);
  WeylElement wl = longest_in_levi(rs, levi);
  return ParabolicData{w0, wl, w0 * wl.inverse()};
}

std::vector<RootVector> levi_positive_roots(const RootSystem& rs,
                                            const std::vector<std::size_t>& levi) {
  std::vector<bool> in_levi(rs.rank(), false);
  for (std::size_t i : levi) in_levi[i] = true;
  std::vector<RootVector> out;
  for (const auto& alpha : rs.positive_roots()) {
    bool ok = true;
    for (std::size_t i = 0; i < rs.rank() && ok; ++i)
      if (alpha.coords[i] != 0 && !in_levi[i]) ok = false;
    if (ok) out.push_back(alpha);
  }
  return out;
}

std::vector<RootVector> nilradical_roots(const RootSystem& rs,
                                         const std::vector<std::size_t>& levi) {
  auto levi_roots = levi_positive_roots(rs, levi);
  std::set<IntVec> in_levi;
  for (const auto& r : levi_roots) in_levi.insert(r.coords);
  std::vector<RootVector> out;
  for (const auto& alpha : rs.positive_roots())
    if (!in_levi.count(alpha.coords)) out.push_back(alpha);
  return out;
}

std::pair<WeylElement, WeylElement> coset_decompose(
    const WeylElement& w, const std::vector<std::size_t>& levi) {
  const RootSystem& rs = w.system();
  for (std::size_t i : levi) require(i < rs.rank(), "levi index out of range");
  WeylElement wp = WeylElement::identity(rs);
  WeylElement rep = w;
  bool progress = true;
  while (progress) {
    progress = false;
    for (std::size_t i : levi) {
      // strip while s_i is a left descent of the representative
      if (image_negative(rep.inverse(), rs.simple_root(i))) {
        WeylElement si = WeylElement::simple_reflection(rs, i);
        wp = wp * si;
        rep = si * rep;
        progress = true;
        break;
      }
    }
  }
  return {wp, rep};
}

namespace {

// Enumerates the subsets of the positive roots that are saturated with
// saturated complement, by a forced-assignment search over roots in height
// order. Independent of the Weyl-group side of the bijection.
std::vector<std::vector<bool>> doubly_saturated_subsets(const RootSystem& rs) {
  const auto& pos = rs.positive_roots();
  const std::size_t n = pos.size();
  std::map<IntVec, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i) index[pos[i].coords] = i;
  // sums[k]: pairs (i,j), i<j<k or i<k,j<k, with root_i + root_j = root_k
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> sums(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      auto it = index.find(pos[i].coords + pos[j].coords);
      if (it != index.end()) sums[it->second].emplace_back(i, j);
    }
  std::vector<std::vector<bool>> result;
  std::vector<char> in(n, 0);
  std::function<void(std::size_t)> dfs = [&](std::size_t k) {
    if (k == n) {
      result.emplace_back(in.begin(), in.end());
      return;
    }
    bool force_in = false, force_out = false;
    for (auto [i, j] : sums[k]) {
      if (in[i] && in[j]) force_in = true;
      if (!in[i] && !in[j]) force_out = true;
    }
    if (force_in && force_out) return;
    if (force_in || !force_out) {
      in[k] = 1;
      dfs(k + 1);
    }
    if (force_out || !force_in) {
      in[k] = 0;
      dfs(k + 1);
    }
  };
  dfs(0);
  return result;
}

}  // namespace

KostantReport kostant_scan(const RootSystem& rs) {
  require(rs.rank() <= 4, "kostant scan is guarded to rank <= 4");
  const auto& pos = rs.positive_roots();
  std::map<IntVec, std::size_t> index;
  for (std::size_t i = 0; i < pos.size(); ++i) index[pos[i].coords] = i;

  // Enumerate W by breadth-first search on matrices.
  std::set<IntVec> seen;
  std::deque<WeylElement> queue;
  WeylElement e = WeylElement::identity(rs);
  seen.insert(e.key());
  queue.push_back(e);
  std::set<std::vector<bool>> weyl_masks;
  KostantReport report;
  report.every_inversion_set_doubly_saturated = true;
  auto saturated = [&](const std::vector<bool>& mask, bool complement) {
    for (std::size_t i = 0; i < pos.size(); ++i)
      for (std::size_t j = i + 1; j < pos.size(); ++j) {
        bool a = complement ? !mask[i] : mask[i];
        bool b = complement ? !mask[j] : mask[j];
        if (!a || !b) continue;
        auto it = index.find(pos[i].coords + pos[j].coords);
        if (it == index.end()) continue;
        bool c = complement ? !mask[it->second] : mask[it->second];
        if (!c) return false;
      }
    return true;
  };
  while (!queue.empty()) {
    WeylElement w = queue.front();
    queue.pop_front();
    ++report.group_order;
    std::vector<bool> mask(pos.size(), false);
    for (const auto& alpha : w.inversion_set()) mask[index[alpha.coords]] = true;
    if (!saturated(mask, false) || !saturated(mask, true))
      report.every_inversion_set_doubly_saturated = false;
    weyl_masks.insert(mask);
    for (std::size_t i = 0; i < rs.rank(); ++i) {
      WeylElement next = w * WeylElement::simple_reflection(rs, i);
      if (seen.insert(next.key()).second) queue.push_back(next);
    }
  }
  auto subsets = doubly_saturated_subsets(rs);
  report.doubly_saturated_count = subsets.size();
  std::set<std::vector<bool>> subset_masks(subsets.begin(), subsets.end());
  report.bijection = weyl_masks.size() == report.group_order &&
                     subset_masks == weyl_masks;
  return report;
}

ReducedWord matrix_algebra_word(std::size_t a, std::size_t b) {
  require(a >= 1 && b >= 1, "matrix algebra sizes must be positive");
  ReducedWord w;
  for (std::size_t j = 0; j < b; ++j)
    for (std::size_t k = 0; k < a; ++k) w.letters.push_back(a - 1 + j - k);
  return w;
}

std::vector<ReducedWord> enumerate_elements(const RootSystem& rs, std::size_t max_len) {
  std::map<IntVec, ReducedWord> seen;
  std::deque<std::pair<WeylElement, ReducedWord>> queue;
  WeylElement e = WeylElement::identity(rs);
  seen[e.key()] = ReducedWord{};
  queue.emplace_back(e, ReducedWord{});
  std::vector<ReducedWord> out;
  out.push_back(ReducedWord{});
  while (!queue.empty()) {
    auto [w, word] = queue.front();
    queue.pop_front();
    if (word.size() == max_len) continue;
    for (std::size_t i = 0; i < rs.rank(); ++i) {
      if (image_negative(w, rs.simple_root(i))) continue;  // would shorten
      WeylElement next = w * WeylElement::simple_reflection(rs, i);
      if (seen.count(next.key())) continue;
      ReducedWord nw = word;
      nw.letters.push_back(i);
      seen[next.key()] = nw;
      out.push_back(nw);
      queue.emplace_back(next, nw);
    }
  }
  std::sort(out.begin(), out.end(), [](const ReducedWord& x, const ReducedWord& y) {
    if (x.size() != y.size()) return x.size() < y.size();
    return x.letters < y.letters;
  });
  return out;
}

}  // namespace qnc
