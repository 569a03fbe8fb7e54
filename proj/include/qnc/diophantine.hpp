#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "qnc/matrix.hpp"

namespace qnc {

// Three signed blocks (a, eps_a), (b, eps_b), (c, eps_c). A zero-size block
// simply contributes no rows or columns; its sign is inert.
struct BlockConfig {
  long a = 0, b = 0, c = 0;
  int ea = 1, eb = 1, ec = 1;

  std::string to_string() const;
  bool operator==(const BlockConfig&) const = default;
};

// I_{a+b+c} plus the signed anti-diagonal identity blocks: rows are split
// (c, b, a) and columns (a, b, c), so the corner blocks are square.
IntMat build_block_matrix(const BlockConfig& cfg);

// Corank over the rationals by exact elimination.
long corank_direct(const BlockConfig& cfg);

enum class Move {
  ShrinkA,  // a >= b+c:      a -> a-b-c, signs (ea, -ea*eb, -ea*ec)
  ShrinkC,  // c >= a+b:      c -> c-a-b, signs (-ec*ea, -ec*eb, ec)
  ShrinkB1, // b+c >= a > c:  b -> b-(a-c), signs (-eb*ea, eb, -eb*ec)
  ShrinkB2, // a+b >= c > a:  b -> b-(c-a), signs (-eb*ea, eb, -eb*ec)
};

bool move_applicable(const BlockConfig& cfg, Move m);
BlockConfig apply_move(const BlockConfig& cfg, Move m);  // input_error if inapplicable
std::vector<Move> applicable_moves(const BlockConfig& cfg);

// The (p,q,b) shadow with p = a+b, q = b+c: moves preserve gcd(p,q) and the
// class of b modulo it.
struct LatticeShadow {
  Int gcd_pq;
  Int b_mod;  // b reduced mod gcd(p,q); the whole of Z when gcd is 0
};
LatticeShadow lattice_shadow(const BlockConfig& cfg);

// Closed form for (a, 1, c) with all signs positive: with p = a+1, q = c+1,
// Delta = gcd(p,q), p = x Delta, q = y Delta, the corank is Delta-1 when x+y
// is even and 1 otherwise.
long b1_corank(long a, long c);

}  // namespace qnc
