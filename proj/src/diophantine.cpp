#include "qnc/diophantine.hpp"

#include <numeric>

namespace qnc {

std::string BlockConfig::to_string() const {
  auto part = [](long n, int e) {
    return "[" + std::to_string(n) + "," + (e > 0 ? std::string("+") : std::string("-")) + "]";
  };
  return part(a, ea) + part(b, eb) + part(c, ec);
}

IntMat build_block_matrix(const BlockConfig& cfg) {
  require(cfg.a >= 0 && cfg.b >= 0 && cfg.c >= 0, "block sizes must be nonnegative");
  require(cfg.a + cfg.b + cfg.c >= 1, "at least one block must be nonempty");
  require(cfg.ea * cfg.ea == 1 && cfg.eb * cfg.eb == 1 && cfg.ec * cfg.ec == 1,
          "signs must be +-1");
  const std::size_t n = static_cast<std::size_t>(cfg.a + cfg.b + cfg.c);
  IntMat m = IntMat::identity(n);
  const std::size_t a = static_cast<std::size_t>(cfg.a);
  const std::size_t b = static_cast<std::size_t>(cfg.b);
  const std::size_t c = static_cast<std::size_t>(cfg.c);
  for (std::size_t i = 0; i < c; ++i) m.at(i, a + b + i) += cfg.ec;        // top right
  for (std::size_t i = 0; i < b; ++i) m.at(c + i, a + i) += cfg.eb;        // middle
  for (std::size_t i = 0; i < a; ++i) m.at(c + b + i, i) += cfg.ea;        // bottom left
  return m;
}

long corank_direct(const BlockConfig& cfg) {
  IntMat m = build_block_matrix(cfg);
  return static_cast<long>(m.rows() - rank(m));
}

bool move_applicable(const BlockConfig& cfg, Move m) {
  switch (m) {
    case Move::ShrinkA: return cfg.a >= cfg.b + cfg.c && cfg.a > 0;
    case Move::ShrinkC: return cfg.c >= cfg.a + cfg.b && cfg.c > 0;
    case Move::ShrinkB1: return cfg.b + cfg.c >= cfg.a && cfg.a > cfg.c;
    case Move::ShrinkB2: return cfg.a + cfg.b >= cfg.c && cfg.c > cfg.a;
  }
  return false;
}

BlockConfig apply_move(const BlockConfig& cfg, Move m) {
  require(move_applicable(cfg, m), "move not applicable to " + cfg.to_string());
  BlockConfig r = cfg;
  switch (m) {
    case Move::ShrinkA:
      r.a = cfg.a - cfg.b - cfg.c;
      r.eb = -cfg.ea * cfg.eb;
      r.ec = -cfg.ea * cfg.ec;
      break;
    case Move::ShrinkC:
      r.c = cfg.c - cfg.a - cfg.b;
      r.ea = -cfg.ec * cfg.ea;
      r.eb = -cfg.ec * cfg.eb;
      break;
    case Move::ShrinkB1:
      r.b = cfg.b - (cfg.a - cfg.c);
      r.ea = -cfg.eb * cfg.ea;
      r.ec = -cfg.eb * cfg.ec;
      break;
    case Move::ShrinkB2:
      r.b = cfg.b - (cfg.c - cfg.a);
      r.ea = -cfg.eb * cfg.ea;
      r.ec = -cfg.eb * cfg.ec;
      break;
  }
  // A block of size zero is removed together with its sign.
  if (r.a == 0) r.ea = 1;
  if (r.b == 0) r.eb = 1;
  if (r.c == 0) r.ec = 1;
  return r;
}

std::vector<Move> applicable_moves(const BlockConfig& cfg) {
  std::vector<Move> out;
  for (Move m : {Move::ShrinkA, Move::ShrinkC, Move::ShrinkB1, Move::ShrinkB2})
    if (move_applicable(cfg, m)) out.push_back(m);
  return out;
}

LatticeShadow lattice_shadow(const BlockConfig& cfg) {
  Int p(cfg.a + cfg.b), q(cfg.b + cfg.c);
  Int g = gcd(p, q);
  Int bm(cfg.b);
  if (g != 0) {
    mpz_fdiv_r(bm.get_mpz_t(), bm.get_mpz_t(), g.get_mpz_t());
  }
  return {g, bm};
}

long b1_corank(long a, long c) {
  require(a >= 1 && c >= 1, "closed form needs a, c >= 1");
  long p = a + 1, q = c + 1;
  long delta = std::gcd(p, q);
  long x = p / delta, y = q / delta;
  return (x + y) % 2 == 0 ? delta - 1 : 1;
}

}  // namespace qnc
