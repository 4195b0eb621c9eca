#pragma once

#include <array>
#include <optional>
#include <vector>

#include "tlhecke/tl.hpp"

namespace tl {

struct NamedCheck {
  std::string name;
  bool pass = true;
  std::string detail;
};

struct HomogeneityReport {
  bool homogeneous = true;
  int diagrams_checked = 0;
  std::string detail;  // first violator, if any
};

struct RatioReport {
  bool pass = true;
  int pairs_checked = 0;
  std::string detail;
};

struct YIdempotentReport {
  bool pass = true;
  int dimension = 0;
  std::string detail;
};

struct EDecompReport {
  bool pass = true;
  std::vector<NamedCheck> checks;
  void add(std::string name, bool ok, std::string detail = "");
};

struct TraceScalars {
  Scalar p1;
  std::optional<Scalar> p2;  // defined for n >= 3
};

// Exact Jones-Wenzl computations.  The generic projector is built over the
// fraction field of Z[d] by the one-step recursion (with the right-hand
// projector copy expanded through its surviving hook terms, which keeps
// every multiplication element-by-single-diagram).  Specializations at
// d = 0 are certified independently: identity coefficient 1, killed by all
// cap generators on both sides.
class JonesWenzl {
 public:
  JonesWenzl() = default;
  JonesWenzl(const JonesWenzl&) = delete;
  JonesWenzl& operator=(const JonesWenzl&) = delete;

  static constexpr int kMax = kMaxStrands;

  // Generic projector over the fraction field; killed-by-caps is asserted.
  TLElementQ generic(int n);

  // Specialization at d = 0, then mod p when p > 0.  Errors: PoleAtZero
  // when the projector does not survive d = 0, NonIntegralAtP when a
  // denominator vanishes mod p.
  const TLElement& at_zero(int n, long p = 0);

  // Whether at_zero(n, p) exists (no pole / integral at p).
  bool exists_at_zero(int n, long p = 0);

  // Rotation invariance of an element under the one-strand rotation.
  static bool is_rotation_invariant(const TLElement& x);

  // d = 0, characteristic 0 projector computed by the two-step recursion
  // through the E pieces; fully independent of the generic route.
  const TLElement& two_step(int n);

  // Identity coefficients of the one- and two-strand partial closures of
  // the projector; p2 requires n >= 3.
  TraceScalars partial_trace_scalars(int n, long p = 0);

  // The E pieces in the (n+2)-strand algebra at d = 0, characteristic 0;
  // i in {0,1,2,3}, n odd, i = 3 requires n >= 3.
  TLElement build_E(int n, int i);

  HomogeneityReport check_homogeneity(int n, long p, const TwoColorDegreeData& data);

  // Coefficient ratios between left-end move pairs, generically and at d=0.
  RatioReport coeff_ratio_check(int n);

  // Corner algebra of JW_n (x) id_1: two-dimensional with nilpotent radical.
  YIdempotentReport y_idempotent_check(int n);

  // Orthogonal-idempotent decomposition of E0 for odd n.
  EDecompReport check_E_decomposition(int n);

 private:
  struct QCoeff {
    arith::DeltaPoly num;
    std::array<std::int16_t, kMax + 1> den{};  // exponents of psi(2..kMax)
  };
  struct Level {
    int n = 0;
    std::map<Matching, QCoeff> terms;
  };

  const Level& ladder(int n);
  void specialize_level(const Level& lv);
  void certify_at_zero(const TLElement& x);

  std::vector<Level> levels_;  // levels_[i] holds strand count i+1
  std::vector<std::optional<TLElement>> zero0_;  // d=0 char-0 projectors
  std::vector<std::string> zero0_err_;           // pole diagnostics
  std::map<std::pair<int, long>, TLElement> zerop_;
  std::map<int, TLElement> two_step_;
};

// (JW_n (x) id_k) stacked above x, computed with the cap-kill filter: terms
// of x whose top has a cup inside the first n positions vanish against the
// projector and are dropped; the survivors multiply out directly.
TLElement jw_pad_above(const TLElement& x, const TLElement& jw, int k);
// x stacked above (JW_n (x) id_k); the mirror filter on bottom caps.
TLElement jw_pad_below(const TLElement& jw, int k, const TLElement& x);

}  // namespace tl
