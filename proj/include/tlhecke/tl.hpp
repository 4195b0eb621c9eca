#pragma once

#include <map>

#include "tlhecke/delta.hpp"
#include "tlhecke/grading.hpp"
#include "tlhecke/matching.hpp"

namespace tl {

using arith::DeltaRational;
using arith::Scalar;
using grading::GroupElement;
using grading::GroupPtr;

// Finite linear combination of crossingless matchings with exact scalar
// coefficients.  The loop parameter is a fixed scalar value (zero for the
// specialized algebras this library centers on); closed loops formed during
// multiplication each contribute one factor of it.
class TLElement {
 public:
  TLElement() = default;
  TLElement(int nb, int nt, Scalar delta) : nb_(nb), nt_(nt), delta_(std::move(delta)) {}
  static TLElement identity(int n, Scalar delta);
  static TLElement generator(int n, int i, Scalar delta);  // e_i
  static TLElement single(const Matching& m, Scalar delta);

  int n_bottom() const { return nb_; }
  int n_top() const { return nt_; }
  const Scalar& delta() const { return delta_; }
  long characteristic() const { return delta_.characteristic(); }
  const std::map<Matching, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t size() const { return terms_.size(); }

  Scalar coeff(const Matching& m) const;
  void add_term(const Matching& m, const Scalar& c);

  TLElement operator+(const TLElement& o) const;
  TLElement operator-(const TLElement& o) const;
  TLElement scale(const Scalar& c) const;
  bool operator==(const TLElement& o) const;

  TLElement vflip() const;
  TLElement rotate_ccw() const;
  TLElement tensor_id(int k) const;  // x (x) id_k

 private:
  void check_profile(const Matching& m) const;
  int nb_ = 0, nt_ = 0;
  Scalar delta_;
  std::map<Matching, Scalar> terms_;
};

// Stacks y on top of x (x.n_top must equal y.n_bottom); closed loops each
// contribute a factor of the ambient loop parameter.
TLElement multiply(const TLElement& x, const TLElement& y);

// x composed with a single diagram below / above (cheap paths).
TLElement compose_diagram_below(const Matching& d, const TLElement& x, int* size_guard = nullptr);
TLElement compose_diagram_above(const TLElement& x, const Matching& d);

// Closes the rightmost strand of a square element (top n wired around to
// bottom n), landing in one fewer strand.
TLElement partial_trace_last(const TLElement& x);

// Formal linear combination over the fraction field of Z[d]; used for the
// generic Jones-Wenzl projector, where the loop parameter is the
// indeterminate itself.
class TLElementQ {
 public:
  TLElementQ() = default;
  TLElementQ(int nb, int nt) : nb_(nb), nt_(nt) {}

  int n_bottom() const { return nb_; }
  int n_top() const { return nt_; }
  const std::map<Matching, DeltaRational>& terms() const { return terms_; }
  DeltaRational coeff(const Matching& m) const;
  void add_term(const Matching& m, const DeltaRational& c);
  bool is_zero() const { return terms_.empty(); }

  bool operator==(const TLElementQ& o) const;

 private:
  int nb_ = 0, nt_ = 0;
  std::map<Matching, DeltaRational> terms_;
};

// Stacks a single diagram below a generic element; loops contribute factors
// of the indeterminate d.
TLElementQ compose_diagram_below_q(const Matching& d, const TLElementQ& x);

// Degrees of the two-colored dot generators; the leftmost bottom strand is
// colored s by convention and colors alternate along each row.
struct TwoColorDegreeData {
  GroupPtr group;
  GroupElement f_s, g_s, f_t, g_t;
};

// Degree of a diagram:
//   (#even caps - #odd cups)(g_s - f_t) + (#odd caps - #even cups)(g_t - f_s).
GroupElement degree(const Matching& m, const TwoColorDegreeData& data);

// Single-difference form, valid for square diagrams:
//   (#even caps - #odd cups)((f_s + g_s) - (f_t + g_t)).
GroupElement degree_single_difference(const Matching& m, const TwoColorDegreeData& data);

// Degree-based rescaling: multiplies each diagram coefficient by
// chi(degree(D)).  chi is given by its values on the group generators and
// must kill the relations (ChiNotHomomorphism otherwise).
TLElement theta_rescale(const TLElement& x, const TwoColorDegreeData& data,
                        const std::vector<Scalar>& chi_on_generators);

}  // namespace tl
