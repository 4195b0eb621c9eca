#include "tlhecke/grading.hpp"

#include <algorithm>
#include <sstream>

#include "tlhecke/jw.hpp"

namespace grading {

using arith::Errc;
using arith::fail;

GroupElement::GroupElement(GroupPtr group, std::vector<Int> coords)
    : group_(std::move(group)), coords_(std::move(coords)) {}

bool GroupElement::is_zero() const {
  for (const auto& x : coords_)
    if (x != 0) return false;
  return true;
}

static void check_same_group(const GroupElement& a, const GroupElement& b) {
  if (a.group().get() != b.group().get())
    fail(Errc::SchemaError, "group elements from different grading groups");
}

GroupElement GroupElement::operator+(const GroupElement& o) const {
  check_same_group(*this, o);
  std::vector<Int> s(coords_.size());
  for (size_t i = 0; i < s.size(); ++i) s[i] = coords_[i] + o.coords_[i];
  return group_->element(std::move(s));
}

GroupElement GroupElement::operator-(const GroupElement& o) const {
  check_same_group(*this, o);
  std::vector<Int> s(coords_.size());
  for (size_t i = 0; i < s.size(); ++i) s[i] = coords_[i] - o.coords_[i];
  return group_->element(std::move(s));
}

GroupElement GroupElement::operator-() const {
  std::vector<Int> s(coords_.size());
  for (size_t i = 0; i < s.size(); ++i) s[i] = -coords_[i];
  return group_->element(std::move(s));
}

GroupElement GroupElement::operator*(long n) const {
  std::vector<Int> s(coords_.size());
  for (size_t i = 0; i < s.size(); ++i) s[i] = coords_[i] * n;
  return group_->element(std::move(s));
}

bool GroupElement::operator==(const GroupElement& o) const {
  check_same_group(*this, o);
  return coords_ == o.coords_;
}

bool GroupElement::operator<(const GroupElement& o) const {
  check_same_group(*this, o);
  return coords_ < o.coords_;
}

std::string GroupElement::str() const {
  std::ostringstream out;
  out << "(";
  for (size_t i = 0; i < coords_.size(); ++i) {
    if (i) out << ",";
    out << coords_[i].get_str();
  }
  out << ")";
  return out.str();
}

GradingGroup::GradingGroup(int rank, IntMat relations)
    : rank_(rank), relations_(std::move(relations)) {
  if (relations_.rows() != rank_)
    fail(Errc::SchemaError, "relation matrix must have one row per generator");
  snf_ = arith::smith_form(relations_);
}

GroupPtr GradingGroup::create(int rank, IntMat relations) {
  return GroupPtr(new GradingGroup(rank, std::move(relations)));
}

GroupPtr GradingGroup::free_group(int rank) {
  return create(rank, IntMat(rank, 0));
}

std::vector<Int> GradingGroup::normal_form(std::vector<Int> x) const {
  if (static_cast<int>(x.size()) != rank_)
    fail(Errc::SchemaError, "coordinate vector has wrong length");
  std::vector<Int> y = snf_.U.mul_vec(x);
  for (size_t i = 0; i < snf_.diag.size(); ++i) {
    if (snf_.diag[i] == 0) continue;
    mpz_fdiv_r(y[i].get_mpz_t(), y[i].get_mpz_t(), snf_.diag[i].get_mpz_t());
  }
  return snf_.Uinv.mul_vec(y);
}

bool GradingGroup::in_relation_lattice(const std::vector<Int>& x) const {
  std::vector<Int> y = snf_.U.mul_vec(x);
  for (int i = 0; i < rank_; ++i) {
    Int d = i < static_cast<int>(snf_.diag.size()) ? snf_.diag[i] : Int(0);
    if (d == 0) {
      if (y[i] != 0) return false;
    } else if (!mpz_divisible_p(y[i].get_mpz_t(), d.get_mpz_t())) {
      return false;
    }
  }
  return true;
}

GroupElement GradingGroup::element(std::vector<Int> coords) const {
  return GroupElement(shared_from_this(), normal_form(std::move(coords)));
}

GroupElement GradingGroup::zero() const {
  return element(std::vector<Int>(rank_, Int(0)));
}

GroupElement GradingGroup::generator(int i) const {
  std::vector<Int> e(rank_, Int(0));
  e[i] = 1;
  return element(std::move(e));
}

GroupElement BarInvolution::apply(const GroupElement& x) const {
  if (m_.rows() == 0) fail(Errc::NoBarInvolution, "bar involution not set");
  return x.group()->element(m_.mul_vec(x.coords()));
}

void BarInvolution::check_well_defined(const GradingGroup& g) const {
  if (m_.rows() != g.rank() || m_.cols() != g.rank())
    fail(Errc::SchemaError, "bar matrix has wrong shape");
  // preserves the relation lattice
  const IntMat& rel = g.relations();
  for (int j = 0; j < rel.cols(); ++j) {
    std::vector<Int> col(g.rank());
    for (int i = 0; i < g.rank(); ++i) col[i] = rel.at(i, j);
    if (!g.in_relation_lattice(m_.mul_vec(col)))
      fail(Errc::SchemaError, "bar involution does not preserve the relation lattice");
  }
  // squares to the identity on normal forms
  for (int i = 0; i < g.rank(); ++i) {
    std::vector<Int> e(g.rank(), Int(0));
    e[i] = 1;
    auto twice = m_.mul_vec(m_.mul_vec(e));
    if (g.normal_form(twice) != g.normal_form(e))
      fail(Errc::SchemaError, "bar involution does not square to the identity");
  }
}

CoxeterMatrix::CoxeterMatrix(int n) : n_(n), m_(static_cast<size_t>(n) * n, 2) {
  for (int i = 0; i < n; ++i) m_[static_cast<size_t>(i) * n + i] = 1;
}

int CoxeterMatrix::entry(int s, int t) const { return m_[static_cast<size_t>(s) * n_ + t]; }

void CoxeterMatrix::set_entry(int s, int t, int m) {
  if (s == t) fail(Errc::SchemaError, "diagonal Coxeter entries are fixed at 1");
  if (m != kInfinity && m < 2) fail(Errc::SchemaError, "off-diagonal Coxeter entries must be >= 2 or infinite");
  m_[static_cast<size_t>(s) * n_ + t] = m;
  m_[static_cast<size_t>(t) * n_ + s] = m;
}

CoxeterMatrix CoxeterMatrix::dihedral(int m) {
  CoxeterMatrix c(2);
  c.set_entry(0, 1, m);
  return c;
}

CoxeterMatrix CoxeterMatrix::symmetric(int n) {
  CoxeterMatrix c(n - 1);
  for (int i = 0; i + 1 < n - 1; ++i) c.set_entry(i, i + 1, 3);
  return c;
}

CartanSpec::CartanSpec(int n, long characteristic)
    : n_(n), p_(characteristic), a_(static_cast<size_t>(n) * n, Scalar::zero(characteristic)) {
  if (characteristic != 0 && !arith::is_prime(characteristic))
    fail(Errc::SchemaError, "characteristic must be 0 or prime");
}

const Scalar& CartanSpec::pairing(int s, int t) const {
  if (s == t) fail(Errc::SchemaError, "diagonal Cartan pairings are not stored");
  return a_[static_cast<size_t>(s) * n_ + t];
}

void CartanSpec::set_pairing(int s, int t, Scalar v) {
  if (s == t) fail(Errc::SchemaError, "diagonal Cartan pairings are not stored");
  if (v.characteristic() != p_) fail(Errc::CharacteristicMismatch, "pairing characteristic mismatch");
  a_[static_cast<size_t>(s) * n_ + t] = std::move(v);
}

bool is_two_p_power(long m, long p) {
  if (p <= 0 || m % 2 != 0) return false;
  long d = m / 2;
  if (d < p) return false;
  while (d % p == 0) d /= p;
  return d == 1;
}

std::optional<std::string> CartanSpec::validity_error(const CoxeterMatrix& m) const {
  if (m.size() != n_) return "Coxeter matrix size mismatch";
  for (int s = 0; s < n_; ++s)
    for (int t = s + 1; t < n_; ++t) {
      bool both_zero = pairing(s, t).is_zero() && pairing(t, s).is_zero();
      int mst = m.entry(s, t);
      if (mst == 2 && !both_zero)
        return "m(" + std::to_string(s) + "," + std::to_string(t) + ") = 2 requires both pairings to vanish";
      if (both_zero && mst != 2 && mst != CoxeterMatrix::kInfinity && !is_two_p_power(mst, p_))
        return "both pairings of (" + std::to_string(s) + "," + std::to_string(t) +
               ") vanish but m = " + std::to_string(mst) + " is not 2, infinity, or 2p^k in characteristic " +
               std::to_string(p_);
    }
  return std::nullopt;
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) {
    for (int i = 0; i < n; ++i) parent[i] = i;
  }
  int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

Partition finish(UnionFind& uf, int n) {
  Partition p;
  p.cls.assign(n, -1);
  std::map<int, int> ids;
  for (int i = 0; i < n; ++i) {
    int r = uf.find(i);
    auto it = ids.find(r);
    if (it == ids.end()) it = ids.emplace(r, p.count++).first;
    p.cls[i] = it->second;
  }
  return p;
}

}  // namespace

Partition equivalence_relation(const CoxeterMatrix& m, RelationKind kind,
                               const CartanSpec* cartan, long characteristic) {
  const int n = m.size();
  UnionFind uf(n);
  for (int s = 0; s < n; ++s)
    for (int t = s + 1; t < n; ++t) {
      int mst = m.entry(s, t);
      bool join = false;
      switch (kind) {
        case RelationKind::component:
          join = mst != 2;
          break;
        case RelationKind::cartan:
          if (!cartan) fail(Errc::SchemaError, "cartan relation requires a CartanSpec");
          join = !cartan->pairing(s, t).is_zero() || !cartan->pairing(t, s).is_zero();
          break;
        case RelationKind::char_p:
          if (characteristic == 0)
            join = mst != 2 && mst != CoxeterMatrix::kInfinity;
          else
            join = mst != CoxeterMatrix::kInfinity && mst != 2 && !is_two_p_power(mst, characteristic);
          break;
        case RelationKind::unequal:
          join = mst != CoxeterMatrix::kInfinity && mst % 2 == 1;
          break;
      }
      if (join) uf.unite(s, t);
    }
  return finish(uf, n);
}

bool refines(const Partition& fine, const Partition& coarse) {
  const int n = static_cast<int>(fine.cls.size());
  for (int s = 0; s < n; ++s)
    for (int t = s + 1; t < n; ++t)
      if (fine.same(s, t) && !coarse.same(s, t)) return false;
  return true;
}

GradingSpec build_bigrading(int num_colors) {
  GradingSpec spec;
  spec.group = GradingGroup::free_group(2);
  GroupElement fs = spec.group->element({Int(1), Int(0)});
  GroupElement gs = spec.group->element({Int(0), Int(1)});
  GroupElement root = fs + gs;
  for (int s = 0; s < num_colors; ++s) {
    spec.f.push_back(fs);
    spec.g.push_back(gs);
    spec.root_degree.push_back(root);
  }
  spec.for_map = std::vector<Int>{Int(1), Int(1)};
  spec.pos_map = spec.for_map;
  IntMat bar(2, 2);
  bar.at(0, 1) = -1;
  bar.at(1, 0) = -1;
  spec.bar = BarInvolution(bar);
  spec.bar->check_well_defined(*spec.group);
  return spec;
}

GradingSpec build_universal_grading(const CoxeterMatrix& m, const CartanSpec& cartan,
                                    const GradingGroup& gamma,
                                    const std::vector<GroupElement>& gamma_root_degrees) {
  if (auto err = cartan.validity_error(m)) fail(Errc::InvalidRealization, *err);
  const int n = m.size();
  if (static_cast<int>(gamma_root_degrees.size()) != n)
    fail(Errc::SchemaError, "need one root degree per generator");

  // generators: gamma's (first) then f_0, g_0, ..., f_{n-1}, g_{n-1}
  const int gr = gamma.rank();
  const int rank = gr + 2 * n;
  auto fi = [&](int s) { return gr + 2 * s; };
  auto gi = [&](int s) { return gr + 2 * s + 1; };

  std::vector<std::vector<Int>> rels;
  // gamma's own relations, embedded
  for (int j = 0; j < gamma.relations().cols(); ++j) {
    std::vector<Int> r(rank, Int(0));
    for (int i = 0; i < gr; ++i) r[i] = gamma.relations().at(i, j);
    rels.push_back(std::move(r));
  }
  // f_s + g_s = f_t + g_t for pairs with a nonzero pairing
  for (int s = 0; s < n; ++s)
    for (int t = s + 1; t < n; ++t) {
      if (cartan.pairing(s, t).is_zero() && cartan.pairing(t, s).is_zero()) continue;
      std::vector<Int> r(rank, Int(0));
      r[fi(s)] = 1; r[gi(s)] = 1;
      r[fi(t)] = -1; r[gi(t)] = -1;
      rels.push_back(std::move(r));
    }
  // the gluing ideal: (-deg alpha_s, f_s + g_s) = 0
  for (int s = 0; s < n; ++s) {
    std::vector<Int> r(rank, Int(0));
    for (int i = 0; i < gr; ++i) r[i] = -gamma_root_degrees[s].coords()[i];
    r[fi(s)] = 1; r[gi(s)] = 1;
    rels.push_back(std::move(r));
  }

  IntMat rel(rank, static_cast<int>(rels.size()));
  for (size_t j = 0; j < rels.size(); ++j)
    for (int i = 0; i < rank; ++i) rel.at(i, static_cast<int>(j)) = rels[j][i];

  GradingSpec spec;
  spec.group = GradingGroup::create(rank, std::move(rel));
  for (int s = 0; s < n; ++s) {
    spec.f.push_back(spec.group->generator(fi(s)));
    spec.g.push_back(spec.group->generator(gi(s)));
    std::vector<Int> rd(rank, Int(0));
    for (int i = 0; i < gr; ++i) rd[i] = gamma_root_degrees[s].coords()[i];
    spec.root_degree.push_back(spec.group->element(std::move(rd)));
  }
  return spec;
}

GroupElement vertex_degree(const GradingSpec& spec, const CoxeterMatrix& m, int s, int t) {
  int mst = m.entry(s, t);
  if (mst == CoxeterMatrix::kInfinity)
    fail(Errc::SchemaError, "2m-valent vertex needs a finite bond");
  if (mst % 2 == 0) return spec.group->zero();
  return spec.g[s] - spec.g[t];
}

GroupElement inner_degree(const GradingSpec& spec, const std::vector<long>& n,
                          const std::vector<long>& k) {
  GroupElement d = spec.group->zero();
  for (int s = 0; s < spec.num_colors(); ++s) {
    long ns = s < static_cast<int>(n.size()) ? n[s] : 0;
    long ks = s < static_cast<int>(k.size()) ? k[s] : 0;
    d = d + spec.f[s] * ns + (spec.f[s] + spec.g[s]) * ks;
  }
  return d;
}

std::vector<GroupElement> GradingSpec::declared_v_degrees() const {
  std::vector<GroupElement> v = root_degree;
  v.insert(v.end(), extra_v_degrees.begin(), extra_v_degrees.end());
  return v;
}

namespace {

bool kills_relations(const GradingGroup& g, const std::vector<Int>& row) {
  for (int j = 0; j < g.relations().cols(); ++j) {
    Int dot(0);
    for (int i = 0; i < g.rank(); ++i) dot += row[i] * g.relations().at(i, j);
    if (dot != 0) return false;
  }
  return true;
}

Int apply_row(const std::vector<Int>& row, const GroupElement& x) {
  Int dot(0);
  for (size_t i = 0; i < row.size(); ++i) dot += row[i] * x.coords()[i];
  return dot;
}

}  // namespace

bool verify_pos(const GradingSpec& spec, const std::vector<Int>& candidate) {
  if (static_cast<int>(candidate.size()) != spec.group->rank())
    fail(Errc::SchemaError, "pos candidate has wrong length");
  if (!kills_relations(*spec.group, candidate))
    fail(Errc::NotAHomomorphism, "candidate does not annihilate the relation lattice");
  for (const auto& v : spec.declared_v_degrees())
    if (apply_row(candidate, v) <= 0) return false;
  return true;
}

std::optional<std::vector<Int>> search_pos(const GradingSpec& spec, long bound) {
  const int r = spec.group->rank();
  if (r > 4) fail(Errc::SizeLimit, "pos search limited to rank <= 4");
  std::vector<long> x(r, -bound);
  for (;;) {
    std::vector<Int> cand(r);
    for (int i = 0; i < r; ++i) cand[i] = x[i];
    if (kills_relations(*spec.group, cand)) {
      bool ok = true;
      for (const auto& v : spec.declared_v_degrees())
        if (apply_row(cand, v) <= 0) { ok = false; break; }
      if (ok) return cand;
    }
    int i = 0;
    while (i < r && x[i] == bound) x[i++] = -bound;
    if (i == r) return std::nullopt;
    ++x[i];
  }
}

ValidationReport validate(const GradingSpec& spec, const CoxeterMatrix& m,
                          const CartanSpec& cartan) {
  ValidationReport rep;
  auto add = [&rep](std::string name, bool pass, std::string detail) {
    rep.clauses.push_back({std::move(name), pass, std::move(detail)});
    if (!pass && rep.first_failed.empty()) rep.first_failed = rep.clauses.back().name;
  };

  const int n = m.size();
  if (spec.num_colors() != n || static_cast<int>(spec.g.size()) != n ||
      static_cast<int>(spec.root_degree.size()) != n)
    fail(Errc::SchemaError, "grading spec size does not match the Coxeter matrix");

  // realization validity
  auto err = cartan.validity_error(m);
  add("realization-validity", !err.has_value(), err.value_or(""));

  // deg alpha_s = f_s + g_s
  {
    bool ok = true;
    std::string detail;
    for (int s = 0; s < n; ++s)
      if (spec.root_degree[s] != spec.f[s] + spec.g[s]) {
        ok = false;
        detail = "root degree of generator " + std::to_string(s) + " differs from f+g";
        break;
      }
    add("root-degree-sum", ok, detail);
  }

  // f_s + g_s = f_t + g_t whenever a pairing is nonzero
  {
    bool ok = true;
    std::string detail;
    for (int s = 0; s < n && ok; ++s)
      for (int t = s + 1; t < n && ok; ++t) {
        if (cartan.pairing(s, t).is_zero() && cartan.pairing(t, s).is_zero()) continue;
        if (spec.f[s] + spec.g[s] != spec.f[t] + spec.g[t]) {
          ok = false;
          detail = "pair (" + std::to_string(s) + "," + std::to_string(t) +
                   ") has a nonzero pairing but unequal dot-degree sums";
        }
      }
    add("equal-sums-on-coupled-pairs", ok, detail);
  }

  // optional For: a homomorphism with For(f) = For(g) = 1, For(root) = 2
  if (spec.for_map) {
    bool ok = kills_relations(*spec.group, *spec.for_map);
    std::string detail = ok ? "" : "For does not annihilate the relations";
    for (int s = 0; ok && s < n; ++s) {
      if (apply_row(*spec.for_map, spec.f[s]) != 1 || apply_row(*spec.for_map, spec.g[s]) != 1) {
        ok = false;
        detail = "For must send every dot degree to 1";
      } else if (apply_row(*spec.for_map, spec.root_degree[s]) != 2) {
        ok = false;
        detail = "For must send every simple-root degree to 2";
      }
    }
    add("for-refines-z-grading", ok, detail);
  }

  // optional pos: positive on all declared V-degrees
  if (spec.pos_map) {
    bool ok = true;
    std::string detail;
    try {
      ok = verify_pos(spec, *spec.pos_map);
      if (!ok) detail = "pos is not positive on every declared V-degree";
    } catch (const arith::MathError& e) {
      ok = false;
      detail = e.what();
    }
    add("pos-positive-on-v", ok, detail);
  }

  // optional bar involution consistency with the dot degrees
  if (spec.bar) {
    bool ok = true;
    std::string detail;
    try {
      spec.bar->check_well_defined(*spec.group);
      for (int s = 0; s < n && ok; ++s) {
        if (spec.bar->apply(spec.f[s]) != -spec.g[s] || spec.bar->apply(spec.g[s]) != -spec.f[s]) {
          ok = false;
          detail = "bar must swap f and g up to sign";
        }
      }
      for (const auto& v : spec.declared_v_degrees())
        if (ok && spec.bar->apply(v) != -v) {
          ok = false;
          detail = "bar must negate declared V-degrees";
        }
    } catch (const arith::MathError& e) {
      ok = false;
      detail = e.what();
    }
    add("bar-involution", ok, detail);
  }

  // Jones-Wenzl homogeneity per finite bond
  {
    tl::JonesWenzl engine;
    for (int s = 0; s < n; ++s)
      for (int t = s + 1; t < n; ++t) {
        int mst = m.entry(s, t);
        if (mst == CoxeterMatrix::kInfinity || mst == 2) continue;
        std::string name = "jw-homogeneity(" + std::to_string(s) + "," + std::to_string(t) + ")";
        if (spec.f[s] + spec.g[s] == spec.f[t] + spec.g[t]) {
          add(name, true, "equal dot-degree sums; the projector relation is homogeneous");
          continue;
        }
        // unequal sums: the projector lives in the loop-parameter-zero
        // Temperley-Lieb algebra, in the base characteristic
        tl::TwoColorDegreeData data{spec.group, spec.f[s], spec.g[s], spec.f[t], spec.g[t]};
        try {
          auto hom = engine.check_homogeneity(mst - 1, cartan.characteristic(), data);
          add(name, hom.homogeneous, hom.detail);
        } catch (const arith::MathError& e) {
          add(name, false, e.what());
        }
      }
  }

  rep.notes.push_back(
      "type H3 Zamolodchikov relations are homogeneous automatically and are not checked separately");
  rep.pass = true;
  for (const auto& c : rep.clauses) rep.pass = rep.pass && c.pass;
  return rep;
}

}  // namespace grading
