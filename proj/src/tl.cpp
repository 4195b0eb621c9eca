#include "tlhecke/tl.hpp"

namespace tl {

using arith::Errc;
using arith::fail;

TLElement TLElement::identity(int n, Scalar delta) {
  TLElement x(n, n, std::move(delta));
  x.add_term(identity_matching(n), Scalar::one(x.characteristic()));
  return x;
}

TLElement TLElement::generator(int n, int i, Scalar delta) {
  TLElement x(n, n, std::move(delta));
  x.add_term(e_matching(n, i), Scalar::one(x.characteristic()));
  return x;
}

TLElement TLElement::single(const Matching& m, Scalar delta) {
  TLElement x(m.nb, m.nt, std::move(delta));
  x.add_term(m, Scalar::one(x.characteristic()));
  return x;
}

void TLElement::check_profile(const Matching& m) const {
  if (m.nb != nb_ || m.nt != nt_)
    fail(Errc::ProfileMismatch, "matching profile does not match the element");
}

Scalar TLElement::coeff(const Matching& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Scalar::zero(characteristic()) : it->second;
}

void TLElement::add_term(const Matching& m, const Scalar& c) {
  check_profile(m);
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.emplace(m, c);
  if (!fresh) {
    it->second = it->second + c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

TLElement TLElement::operator+(const TLElement& o) const {
  if (nb_ != o.nb_ || nt_ != o.nt_) fail(Errc::ProfileMismatch, "adding elements of different profiles");
  TLElement r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, c);
  return r;
}

TLElement TLElement::operator-(const TLElement& o) const {
  if (nb_ != o.nb_ || nt_ != o.nt_) fail(Errc::ProfileMismatch, "subtracting elements of different profiles");
  TLElement r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
  return r;
}

TLElement TLElement::scale(const Scalar& c) const {
  TLElement r(nb_, nt_, delta_);
  if (c.is_zero()) return r;
  for (const auto& [m, v] : terms_) r.terms_.emplace(m, v * c);
  return r;
}

bool TLElement::operator==(const TLElement& o) const {
  return nb_ == o.nb_ && nt_ == o.nt_ && terms_ == o.terms_;
}

TLElement TLElement::vflip() const {
  TLElement r(nt_, nb_, delta_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(tl::vflip(m), c);
  return r;
}

TLElement TLElement::rotate_ccw() const {
  TLElement r(nb_, nt_, delta_);
  for (const auto& [m, c] : terms_) r.add_term(tl::rotate_ccw(m), c);
  return r;
}

TLElement TLElement::tensor_id(int k) const {
  TLElement r(nb_ + k, nt_ + k, delta_);
  const Matching idk = identity_matching(k);
  for (const auto& [m, c] : terms_) r.terms_.emplace(tensor_matchings(m, idk), c);
  return r;
}

TLElement multiply(const TLElement& x, const TLElement& y) {
  if (x.n_top() != y.n_bottom()) fail(Errc::ProfileMismatch, "multiply needs x.top == y.bottom");
  if (x.characteristic() != y.characteristic() || !(x.delta() == y.delta()))
    fail(Errc::CharacteristicMismatch, "mixing loop parameters or characteristics");
  TLElement r(x.n_bottom(), y.n_top(), x.delta());
  for (const auto& [mx, cx] : x.terms())
    for (const auto& [my, cy] : y.terms()) {
      int loops = 0;
      Matching m = compose_matchings(mx, my, &loops);
      Scalar c = cx * cy;
      for (int i = 0; i < loops && !c.is_zero(); ++i) c = c * x.delta();
      r.add_term(m, c);
    }
  return r;
}

TLElement compose_diagram_below(const Matching& d, const TLElement& x, int*) {
  if (d.nt != x.n_bottom()) fail(Errc::ProfileMismatch, "diagram top must match element bottom");
  TLElement r(d.nb, x.n_top(), x.delta());
  for (const auto& [m, c] : x.terms()) {
    int loops = 0;
    Matching composite = compose_matchings(d, m, &loops);
    Scalar v = c;
    for (int i = 0; i < loops && !v.is_zero(); ++i) v = v * x.delta();
    r.add_term(composite, v);
  }
  return r;
}

TLElement compose_diagram_above(const TLElement& x, const Matching& d) {
  if (x.n_top() != d.nb) fail(Errc::ProfileMismatch, "element top must match diagram bottom");
  TLElement r(x.n_bottom(), d.nt, x.delta());
  for (const auto& [m, c] : x.terms()) {
    int loops = 0;
    Matching composite = compose_matchings(m, d, &loops);
    Scalar v = c;
    for (int i = 0; i < loops && !v.is_zero(); ++i) v = v * x.delta();
    r.add_term(composite, v);
  }
  return r;
}

TLElement partial_trace_last(const TLElement& x) {
  if (x.n_bottom() != x.n_top()) fail(Errc::NotSquareProfile, "partial trace needs a square profile");
  const int n = x.n_bottom();
  if (n < 1) fail(Errc::SchemaError, "partial trace needs at least one strand");
  TLElement r(n - 1, n - 1, x.delta());
  for (const auto& [m, c] : x.terms()) {
    // wire top n to bottom n around the right side
    const int bot = n - 1, top = 2 * n - 1;
    std::vector<int> partner(2 * (n - 1));
    auto relabel = [&](int pt) { return pt < n ? pt : pt - 1; };
    Scalar v = c;
    if (m.p[bot] == top) {
      // closing a through strand on the last position makes a loop
      v = v * x.delta();
      if (v.is_zero()) continue;
      for (int i = 0; i < 2 * n; ++i) {
        if (i == bot || i == top) continue;
        partner[relabel(i)] = relabel(m.p[i]);
      }
    } else {
      int a = m.p[bot], b = m.p[top];
      for (int i = 0; i < 2 * n; ++i) {
        if (i == bot || i == top) continue;
        partner[relabel(i)] = (i == a) ? relabel(b) : (i == b) ? relabel(a) : relabel(m.p[i]);
      }
    }
    r.add_term(make_matching(n - 1, n - 1, partner), v);
  }
  return r;
}

DeltaRational TLElementQ::coeff(const Matching& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? DeltaRational() : it->second;
}

void TLElementQ::add_term(const Matching& m, const DeltaRational& c) {
  if (m.nb != nb_ || m.nt != nt_) fail(Errc::ProfileMismatch, "matching profile does not match the element");
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.emplace(m, c);
  if (!fresh) {
    it->second = it->second + c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

bool TLElementQ::operator==(const TLElementQ& o) const {
  return nb_ == o.nb_ && nt_ == o.nt_ && terms_ == o.terms_;
}

TLElementQ compose_diagram_below_q(const Matching& d, const TLElementQ& x) {
  if (d.nt != x.n_bottom()) fail(Errc::ProfileMismatch, "diagram top must match element bottom");
  TLElementQ r(d.nb, x.n_top());
  const DeltaRational dval{arith::DeltaPoly::delta()};
  for (const auto& [m, c] : x.terms()) {
    int loops = 0;
    Matching composite = compose_matchings(d, m, &loops);
    DeltaRational v = c;
    for (int i = 0; i < loops; ++i) v = v * dval;
    r.add_term(composite, v);
  }
  return r;
}

GroupElement degree(const Matching& m, const TwoColorDegreeData& data) {
  CupCapCounts c = classify_cups_caps(m);
  return (data.g_s - data.f_t) * (c.even_caps - c.odd_cups) +
         (data.g_t - data.f_s) * (c.odd_caps - c.even_cups);
}

GroupElement degree_single_difference(const Matching& m, const TwoColorDegreeData& data) {
  CupCapCounts c = classify_cups_caps(m);
  return ((data.f_s + data.g_s) - (data.f_t + data.g_t)) * (c.even_caps - c.odd_cups);
}

TLElement theta_rescale(const TLElement& x, const TwoColorDegreeData& data,
                        const std::vector<Scalar>& chi_on_generators) {
  const auto& group = *data.group;
  if (static_cast<int>(chi_on_generators.size()) != group.rank())
    fail(Errc::SchemaError, "chi needs one value per group generator");
  for (const auto& v : chi_on_generators)
    if (v.is_zero()) fail(Errc::ChiNotHomomorphism, "chi must take nonzero values");

  auto chi = [&](const GroupElement& a) {
    Scalar r = Scalar::one(x.characteristic());
    for (int i = 0; i < group.rank(); ++i) {
      const arith::Int& e = a.coords()[i];
      if (e == 0) continue;
      if (!e.fits_slong_p()) fail(Errc::SizeLimit, "chi exponent out of range");
      r = r * chi_on_generators[i].pow(e.get_si());
    }
    return r;
  };

  // well-defined on the quotient: chi must send each relation to 1
  for (int j = 0; j < group.relations().cols(); ++j) {
    Scalar v = Scalar::one(x.characteristic());
    for (int i = 0; i < group.rank(); ++i) {
      const arith::Int& e = group.relations().at(i, j);
      if (e == 0) continue;
      if (!e.fits_slong_p()) fail(Errc::SizeLimit, "chi exponent out of range");
      v = v * chi_on_generators[i].pow(e.get_si());
    }
    if (!(v == Scalar::one(x.characteristic())))
      fail(Errc::ChiNotHomomorphism, "chi does not annihilate the grading relations");
  }

  if (!x.delta().is_zero())
    fail(Errc::SchemaError, "degree-based rescaling is defined on the loop-parameter-zero algebra");

  TLElement r(x.n_bottom(), x.n_top(), x.delta());
  for (const auto& [m, c] : x.terms()) r.add_term(m, c * chi(degree(m, data)));
  return r;
}

}  // namespace tl
