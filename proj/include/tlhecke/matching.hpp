#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "tlhecke/arith.hpp"

namespace tl {

// Hard ceiling on strand counts; Catalan(13) diagrams is the largest
// exhaustive computation the suite performs.
constexpr int kMaxStrands = 13;
constexpr int kMaxPoints = 2 * kMaxStrands + 2;

// Planar pairing of boundary points on a rectangle: nb points on the bottom
// row and nt on top, both indexed left to right.  Points are encoded
// 0..nb-1 (bottom) then nb..nb+nt-1 (top); p[i] is the partner of point i.
struct CrossinglessMatching {
  std::uint8_t nb = 0, nt = 0;
  std::array<std::int8_t, kMaxPoints> p{};

  int total() const { return nb + nt; }
  bool is_bottom(int pt) const { return pt < nb; }
  // 1-indexed position within its row, reading left to right.
  int row_index(int pt) const { return is_bottom(pt) ? pt + 1 : pt - nb + 1; }

  bool operator==(const CrossinglessMatching& o) const;
  bool operator<(const CrossinglessMatching& o) const;

  std::string str() const;
};

using Matching = CrossinglessMatching;

// Builds a matching from a partner involution; checks planarity.
Matching make_matching(int nb, int nt, const std::vector<int>& partner);

bool is_planar(const Matching& m);

Matching identity_matching(int n);
// The cap-cup generator e_i on n strands, 1 <= i <= n-1.
Matching e_matching(int n, int i);

// All planar matchings with the given boundary profile, ordered by the
// canonical arc-list order.  Count is Catalan((nb+nt)/2).
std::vector<Matching> enumerate_matchings(int nb, int nt);

struct CupCapCounts {
  int even_caps = 0, odd_caps = 0;
  int even_cups = 0, odd_cups = 0;
  int through = 0;
};

// Caps are bottom-bottom arcs, cups top-top arcs; even/odd by the parity of
// the 1-indexed left endpoint within its row.
CupCapCounts classify_cups_caps(const Matching& m);

// Counterclockwise rotation by one strand: old top-1 becomes new bottom-1,
// old bottom-i becomes new bottom-(i+1) for i < n, old bottom-n becomes new
// top-n, old top-j becomes new top-(j-1) for j > 1.  Square profiles only.
Matching rotate_ccw(const Matching& m);

// Vertical flip (exchange bottom and top).
Matching vflip(const Matching& m);

// Stacks b on top of a (a.nt must equal b.nb); returns the composite
// matching and the number of closed loops removed.
Matching compose_matchings(const Matching& a, const Matching& b, int* loops);

// Side-by-side juxtaposition.
Matching tensor_matchings(const Matching& a, const Matching& b);

// Merge two adjacent nested cap stacks on the bottom row: a stack of x caps
// whose leftmost endpoint is `position` (1-indexed) followed immediately by
// a stack of y caps becomes one stack of x + y caps.
Matching merge_caps(const Matching& m, int position);

// Move a nested stack of y caps leftward through the x leading bottom
// strands: bottom points 1..x shift to 2y+1..2y+x and the stack occupying
// x+1..x+2y moves to 1..2y.  Fails when that configuration is absent.
Matching move_cap(const Matching& m, int x, int y);

// Size of the maximal nested cap stack whose leftmost bottom endpoint is
// `position`, or 0 when there is none.
int nested_cap_stack_size(const Matching& m, int position);

}  // namespace tl
