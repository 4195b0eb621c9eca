#include "tlhecke/matching.hpp"

#include <algorithm>
#include <cstring>
#include <sstream>

namespace tl {

using arith::Errc;
using arith::fail;

bool CrossinglessMatching::operator==(const CrossinglessMatching& o) const {
  if (nb != o.nb || nt != o.nt) return false;
  return std::memcmp(p.data(), o.p.data(), total()) == 0;
}

bool CrossinglessMatching::operator<(const CrossinglessMatching& o) const {
  if (nb != o.nb) return nb < o.nb;
  if (nt != o.nt) return nt < o.nt;
  return std::memcmp(p.data(), o.p.data(), total()) < 0;
}

std::string CrossinglessMatching::str() const {
  std::ostringstream out;
  auto name = [&](int pt) {
    return (is_bottom(pt) ? "b" : "t") + std::to_string(row_index(pt));
  };
  out << "{";
  bool first = true;
  for (int i = 0; i < total(); ++i) {
    if (p[i] < i) continue;
    if (!first) out << " ";
    out << name(i) << "-" << name(p[i]);
    first = false;
  }
  out << "}";
  return out.str();
}

Matching make_matching(int nb, int nt, const std::vector<int>& partner) {
  if (nb < 0 || nt < 0 || nb + nt > kMaxPoints)
    fail(Errc::SizeLimit, "matching exceeds the supported boundary size");
  if ((nb + nt) % 2 != 0) fail(Errc::OddBoundary, "boundary has an odd number of points");
  if (static_cast<int>(partner.size()) != nb + nt)
    fail(Errc::SchemaError, "partner vector has wrong length");
  Matching m;
  m.nb = static_cast<std::uint8_t>(nb);
  m.nt = static_cast<std::uint8_t>(nt);
  for (int i = 0; i < nb + nt; ++i) {
    int j = partner[i];
    if (j < 0 || j >= nb + nt || j == i || partner[j] != i)
      fail(Errc::SchemaError, "partner vector is not a perfect matching");
    m.p[i] = static_cast<std::int8_t>(j);
  }
  if (!is_planar(m)) fail(Errc::SchemaError, "matching is not planar");
  return m;
}

namespace {

// Position of each point in the cyclic boundary order: bottom left-to-right,
// then top right-to-left.
inline int cyclic_pos(const Matching& m, int pt) {
  return m.is_bottom(pt) ? pt : m.nb + (m.total() - 1 - pt);
}

}  // namespace

bool is_planar(const Matching& m) {
  const int n = m.total();
  // stack scan over the cyclic word
  std::vector<int> open;
  std::vector<int> at(n);
  for (int i = 0; i < n; ++i) at[cyclic_pos(m, i)] = i;
  for (int c = 0; c < n; ++c) {
    int pt = at[c];
    int mate = m.p[pt];
    if (!open.empty() && open.back() == pt) {
      open.pop_back();
    } else if (cyclic_pos(m, mate) > c) {
      open.push_back(mate);
    } else {
      return false;
    }
  }
  return open.empty();
}

Matching identity_matching(int n) {
  std::vector<int> partner(2 * n);
  for (int i = 0; i < n; ++i) {
    partner[i] = n + i;
    partner[n + i] = i;
  }
  return make_matching(n, n, partner);
}

Matching e_matching(int n, int i) {
  if (i < 1 || i >= n) fail(Errc::SchemaError, "e generator index out of range");
  std::vector<int> partner(2 * n);
  for (int k = 0; k < n; ++k) {
    partner[k] = n + k;
    partner[n + k] = k;
  }
  int a = i - 1, b = i;  // 0-indexed bottom points
  partner[a] = b;
  partner[b] = a;
  partner[n + a] = n + b;
  partner[n + b] = n + a;
  return make_matching(n, n, partner);
}

namespace {

// Enumerates non-crossing perfect matchings of the linear word, processing a
// stack of still-unmatched segments.
void enumerate_rec(std::vector<int>& cp, std::vector<std::pair<int, int>>& segs,
                   std::vector<std::vector<int>>& out) {
  while (!segs.empty() && segs.back().first >= segs.back().second) segs.pop_back();
  if (segs.empty()) {
    out.push_back(cp);
    return;
  }
  auto [a, b] = segs.back();
  segs.pop_back();
  for (int j = a + 1; j < b; j += 2) {
    cp[a] = j;
    cp[j] = a;
    auto segs2 = segs;
    segs2.emplace_back(a + 1, j);
    segs2.emplace_back(j + 1, b);
    enumerate_rec(cp, segs2, out);
  }
  segs.emplace_back(a, b);
}

}  // namespace

std::vector<Matching> enumerate_matchings(int nb, int nt) {
  if ((nb + nt) % 2 != 0) fail(Errc::OddBoundary, "boundary has an odd number of points");
  if (nb + nt > kMaxPoints) fail(Errc::SizeLimit, "boundary too large");
  const int n = nb + nt;
  std::vector<Matching> result;
  if (n == 0) {
    Matching m;
    result.push_back(m);
    return result;
  }
  std::vector<int> cyc(n, -1);
  std::vector<std::pair<int, int>> segs{{0, n}};
  std::vector<std::vector<int>> raw;
  enumerate_rec(cyc, segs, raw);
  result.reserve(raw.size());
  std::vector<int> partner(n);
  std::vector<int> at(n);
  for (const auto& cp : raw) {
    // translate cyclic positions back to point labels
    Matching probe;
    probe.nb = static_cast<std::uint8_t>(nb);
    probe.nt = static_cast<std::uint8_t>(nt);
    for (int i = 0; i < n; ++i) at[cyclic_pos(probe, i)] = i;
    for (int c = 0; c < n; ++c) partner[at[c]] = at[cp[c]];
    result.push_back(make_matching(nb, nt, partner));
  }
  std::sort(result.begin(), result.end());
  return result;
}

CupCapCounts classify_cups_caps(const Matching& m) {
  CupCapCounts c;
  for (int i = 0; i < m.total(); ++i) {
    int j = m.p[i];
    if (j < i) continue;
    bool bi = m.is_bottom(i), bj = m.is_bottom(j);
    if (bi && bj) {
      (m.row_index(i) % 2 == 0 ? c.even_caps : c.odd_caps)++;
    } else if (!bi && !bj) {
      (m.row_index(i) % 2 == 0 ? c.even_cups : c.odd_cups)++;
    } else {
      c.through++;
    }
  }
  return c;
}

Matching rotate_ccw(const Matching& m) {
  if (m.nb != m.nt) fail(Errc::NotSquareProfile, "rotation needs equal top and bottom counts");
  const int n = m.nb;
  // new point label for each old point
  auto relabel = [n](int pt) {
    if (pt < n) return pt == n - 1 ? 2 * n - 1 : pt + 1;  // bottom i -> bottom i+1, bottom n -> top n
    return pt == n ? 0 : pt - 1;                          // top 1 -> bottom 1, top j -> top j-1
  };
  std::vector<int> partner(2 * n);
  for (int i = 0; i < 2 * n; ++i) partner[relabel(i)] = relabel(m.p[i]);
  return make_matching(n, n, partner);
}

Matching vflip(const Matching& m) {
  const int nb = m.nb, nt = m.nt;
  auto relabel = [&](int pt) { return m.is_bottom(pt) ? nt + pt : pt - nb; };
  std::vector<int> partner(nb + nt);
  for (int i = 0; i < nb + nt; ++i) partner[relabel(i)] = relabel(m.p[i]);
  Matching r;
  r.nb = static_cast<std::uint8_t>(nt);
  r.nt = static_cast<std::uint8_t>(nb);
  for (int i = 0; i < nb + nt; ++i) r.p[i] = static_cast<std::int8_t>(partner[i]);
  return r;
}

Matching compose_matchings(const Matching& a, const Matching& b, int* loops) {
  if (a.nt != b.nb) fail(Errc::ProfileMismatch, "stacking needs a.top == b.bottom");
  const int nb = a.nb, mid = a.nt, nt = b.nt;
  // nodes: 0..nb-1 bottom externals; then a-top/b-bottom interface 0..mid-1;
  // externals of b top are nb..nb+nt-1 in the result
  std::vector<int> partner(nb + nt, -1);
  std::vector<char> seen(mid, 0);

  auto a_partner = [&](int pt) { return static_cast<int>(a.p[pt]); };
  auto b_partner = [&](int pt) { return static_cast<int>(b.p[pt]); };

  auto trace_from = [&](bool from_bottom, int ext) {
    // walk until another external is reached; returns encoded endpoint
    bool in_a = from_bottom;
    int pt = from_bottom ? ext : ext + b.nb;  // point label inside a or b
    for (;;) {
      if (in_a) {
        int q = a_partner(pt);
        if (q < a.nb) return q;  // bottom external
        int k = q - a.nb;        // interface strand
        seen[k] = 1;
        in_a = false;
        pt = k;  // enters b at its bottom point k
      } else {
        int q = b_partner(pt);
        if (q >= b.nb) return nb + (q - b.nb);  // top external
        seen[q] = 1;
        in_a = true;
        pt = a.nb + q;  // enters a at its top point q
      }
    }
  };

  for (int i = 0; i < nb; ++i) {
    if (partner[i] >= 0) continue;
    int other = trace_from(true, i);
    partner[i] = other;
    partner[other] = i;
  }
  for (int j = 0; j < nt; ++j) {
    if (partner[nb + j] >= 0) continue;
    int other = trace_from(false, j);
    partner[nb + j] = other;
    partner[other] = nb + j;
  }

  int cycles = 0;
  for (int k = 0; k < mid; ++k) {
    if (seen[k]) continue;
    ++cycles;
    // walk the loop
    int pt = k;
    bool in_a = false;  // start by entering b at bottom k
    for (;;) {
      if (!in_a) {
        seen[pt] = 1;
        int q = b_partner(pt);
        pt = q;  // stays inside b; q must be a bottom point of b (interface)
        if (q >= b.nb) fail(Errc::SchemaError, "loop tracing escaped the interface");
        seen[q] = 1;
        in_a = true;
        pt = a.nb + q;
      } else {
        int q = a_partner(pt);
        if (q < a.nb) fail(Errc::SchemaError, "loop tracing escaped the interface");
        int k2 = q - a.nb;
        if (k2 == k) break;
        seen[k2] = 1;
        in_a = false;
        pt = k2;
      }
    }
  }
  if (loops) *loops = cycles;
  return make_matching(nb, nt, partner);
}

Matching tensor_matchings(const Matching& a, const Matching& b) {
  const int nb = a.nb + b.nb, nt = a.nt + b.nt;
  if (nb + nt > kMaxPoints) fail(Errc::SizeLimit, "tensor exceeds the supported boundary size");
  std::vector<int> partner(nb + nt);
  auto relabel_a = [&](int pt) { return a.is_bottom(pt) ? pt : b.nb + pt; };
  auto relabel_b = [&](int pt) { return b.is_bottom(pt) ? a.nb + pt : a.nt + pt + a.nb; };
  for (int i = 0; i < a.total(); ++i) partner[relabel_a(i)] = relabel_a(a.p[i]);
  for (int i = 0; i < b.total(); ++i) partner[relabel_b(i)] = relabel_b(b.p[i]);
  return make_matching(nb, nt, partner);
}

int nested_cap_stack_size(const Matching& m, int position) {
  int a = position - 1;  // 0-indexed leftmost endpoint
  if (a < 0 || a >= m.nb) return 0;
  int j = m.p[a];
  if (!m.is_bottom(j) || j <= a) return 0;
  int x = (j - a + 1) / 2;
  if (j - a + 1 != 2 * x) return 0;
  for (int i = 0; i < x; ++i)
    if (m.p[a + i] != j - i) return 0;
  return x;
}

Matching merge_caps(const Matching& m, int position) {
  int x = nested_cap_stack_size(m, position);
  if (x == 0)
    fail(Errc::ConfigurationAbsent, "no nested cap stack at bottom position " + std::to_string(position));
  int y = nested_cap_stack_size(m, position + 2 * x);
  if (y == 0)
    fail(Errc::ConfigurationAbsent, "no adjacent cap stack after position " + std::to_string(position));
  Matching r = m;
  int a = position - 1;
  for (int i = 0; i < x + y; ++i) {
    r.p[a + i] = static_cast<std::int8_t>(a + 2 * (x + y) - 1 - i);
    r.p[a + 2 * (x + y) - 1 - i] = static_cast<std::int8_t>(a + i);
  }
  if (!is_planar(r)) fail(Errc::SchemaError, "merge produced a non-planar matching");
  return r;
}

Matching move_cap(const Matching& m, int x, int y) {
  if (x < 1 || y < 1 || x + 2 * y > m.nb)
    fail(Errc::ConfigurationAbsent, "move window exceeds the bottom row");
  if (nested_cap_stack_size(m, x + 1) < y)
    fail(Errc::ConfigurationAbsent, "no nested stack of " + std::to_string(y) +
                                        " caps after the first " + std::to_string(x) + " strands");
  for (int i = 0; i < x; ++i)
    if (m.is_bottom(m.p[i]) && m.p[i] < x + 2 * y)
      fail(Errc::ConfigurationAbsent, "leading strands must leave the local window");
  // relabel bottom points: i < x shifts right by 2y, the stack moves to the front
  auto relabel = [&](int pt) {
    if (!m.is_bottom(pt) || pt >= x + 2 * y) return pt;
    return pt < x ? pt + 2 * y : pt - x;
  };
  std::vector<int> partner(m.total());
  for (int i = 0; i < m.total(); ++i) partner[relabel(i)] = relabel(m.p[i]);
  return make_matching(m.nb, m.nt, partner);
}

}  // namespace tl
