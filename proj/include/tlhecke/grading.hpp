#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "tlhecke/arith.hpp"
#include "tlhecke/intmat.hpp"

namespace grading {

using arith::Int;
using arith::IntMat;
using arith::Scalar;

class GradingGroup;
using GroupPtr = std::shared_ptr<const GradingGroup>;

// Element of a finitely generated abelian group, stored as the canonical
// coordinate vector under the group's Smith decomposition.
class GroupElement {
 public:
  GroupElement() = default;
  GroupElement(GroupPtr group, std::vector<Int> coords);

  const GroupPtr& group() const { return group_; }
  const std::vector<Int>& coords() const { return coords_; }
  bool is_zero() const;

  GroupElement operator+(const GroupElement& o) const;
  GroupElement operator-(const GroupElement& o) const;
  GroupElement operator-() const;
  GroupElement operator*(long n) const;
  bool operator==(const GroupElement& o) const;
  bool operator!=(const GroupElement& o) const { return !(*this == o); }
  bool operator<(const GroupElement& o) const;  // on normal-form coordinates

  std::string str() const;

 private:
  GroupPtr group_;
  std::vector<Int> coords_;  // always in normal form
};

// Finitely generated abelian group presented by generators and integer
// relations (columns of the relation matrix generate the relation lattice).
// Normal forms come from the cached Smith decomposition: free coordinates
// are arbitrary integers, torsion coordinates reduced residues.
class GradingGroup : public std::enable_shared_from_this<GradingGroup> {
 public:
  static GroupPtr create(int rank, IntMat relations);
  static GroupPtr free_group(int rank);

  int rank() const { return rank_; }
  const IntMat& relations() const { return relations_; }

  std::vector<Int> normal_form(std::vector<Int> x) const;
  bool in_relation_lattice(const std::vector<Int>& x) const;

  GroupElement element(std::vector<Int> coords) const;
  GroupElement zero() const;
  GroupElement generator(int i) const;

 private:
  GradingGroup(int rank, IntMat relations);
  int rank_;
  IntMat relations_;
  arith::SmithForm snf_;
};

// Integer matrix acting on generator coordinates; must preserve the
// relation lattice and square to the identity on normal forms.
class BarInvolution {
 public:
  BarInvolution() = default;
  explicit BarInvolution(IntMat m) : m_(std::move(m)) {}
  const IntMat& matrix() const { return m_; }
  GroupElement apply(const GroupElement& x) const;
  // Checks lattice preservation and involutivity; throws SchemaError if violated.
  void check_well_defined(const GradingGroup& g) const;

 private:
  IntMat m_;
};

// Coxeter matrix; m = -1 encodes an infinite bond.
class CoxeterMatrix {
 public:
  static constexpr int kInfinity = -1;

  explicit CoxeterMatrix(int n);
  int size() const { return n_; }
  int entry(int s, int t) const;
  void set_entry(int s, int t, int m);
  bool finite(int s, int t) const { return entry(s, t) != kInfinity; }

  static CoxeterMatrix dihedral(int m);       // I2(m), m >= 2 or kInfinity
  static CoxeterMatrix symmetric(int n);      // type A_{n-1} chain

 private:
  int n_;
  std::vector<int> m_;
};

// Cartan pairings <alpha_s^vee, alpha_t> for s != t, plus the base
// characteristic.  Realization validity: whenever both pairings of a pair
// vanish, m_st must be 2 or infinity, or the characteristic is p > 0 and
// m_st = 2 p^k; and m_st = 2 forces both pairings to vanish.
class CartanSpec {
 public:
  CartanSpec(int n, long characteristic);
  int size() const { return n_; }
  long characteristic() const { return p_; }
  const Scalar& pairing(int s, int t) const;
  void set_pairing(int s, int t, Scalar v);

  // nullopt when valid, otherwise a description of the violated clause.
  std::optional<std::string> validity_error(const CoxeterMatrix& m) const;

 private:
  int n_;
  long p_;
  std::vector<Scalar> a_;
};

bool is_two_p_power(long m, long p);  // m == 2 p^k for some k >= 1

struct GradingSpec {
  GroupPtr group;
  std::vector<GroupElement> f;             // startdot degrees, one per generator s
  std::vector<GroupElement> g;             // enddot degrees
  std::vector<GroupElement> root_degree;   // deg alpha_s
  std::vector<GroupElement> extra_v_degrees;
  std::optional<std::vector<Int>> for_map;  // homomorphism A -> Z refining the Z-grading
  std::optional<std::vector<Int>> pos_map;  // homomorphism positive on V-degrees
  std::optional<BarInvolution> bar;

  int num_colors() const { return static_cast<int>(f.size()); }
  std::vector<GroupElement> declared_v_degrees() const;
};

enum class RelationKind { component, cartan, char_p, unequal };

struct Partition {
  std::vector<int> cls;  // class id per generator, ids are 0..count-1 by first occurrence
  int count = 0;
  bool same(int s, int t) const { return cls[s] == cls[t]; }
};

Partition equivalence_relation(const CoxeterMatrix& m, RelationKind kind,
                               const CartanSpec* cartan = nullptr,
                               long characteristic = 0);

// Partition refinement: every class of `fine` lies inside a class of `coarse`.
bool refines(const Partition& fine, const Partition& coarse);

GradingSpec build_bigrading(int num_colors);

// Universal monoidal grading refining a given Gamma-grading on V:
// the quotient of Gamma x (free on {f_s, g_s}) by
//   f_s + g_s = f_t + g_t whenever some Cartan pairing of (s,t) is nonzero,
//   f_s + g_s = image of deg(alpha_s).
GradingSpec build_universal_grading(const CoxeterMatrix& m, const CartanSpec& cartan,
                                    const GradingGroup& gamma,
                                    const std::vector<GroupElement>& gamma_root_degrees);

struct ValidationClause {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct ValidationReport {
  bool pass = false;
  std::vector<ValidationClause> clauses;
  std::vector<std::string> notes;
  std::string first_failed;
};

ValidationReport validate(const GradingSpec& spec, const CoxeterMatrix& m,
                          const CartanSpec& cartan);

// Degree of the 2m-valent vertex: 0 for even m_st, g_s - g_t for odd.
GroupElement vertex_degree(const GradingSpec& spec, const CoxeterMatrix& m, int s, int t);

// Inner-degree formula: sum over s of n_s f_s + k_s (f_s + g_s).
GroupElement inner_degree(const GradingSpec& spec, const std::vector<long>& n,
                          const std::vector<long>& k);

// True iff candidate is a homomorphism A -> Z positive on all declared
// V-degrees.  Throws NotAHomomorphism when it does not kill the relations.
bool verify_pos(const GradingSpec& spec, const std::vector<Int>& candidate);

// Bounded search for a pos homomorphism (rank <= 4, |coefficients| <= bound).
std::optional<std::vector<Int>> search_pos(const GradingSpec& spec, long bound = 10);

}  // namespace grading
