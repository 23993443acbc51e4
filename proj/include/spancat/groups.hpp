#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "spancat/finset.hpp"

namespace spancat {

// A permutation of 0..n-1 given as its image table.
using Perm = std::vector<int>;

Perm identity_perm(int n);
Perm perm_mul(const Perm& a, const Perm& b);  // apply b, then a
Perm perm_inverse(const Perm& a);
bool is_permutation(const Perm& p, int degree);

// One conjugacy class of subgroups.  The representative is the
// lexicographically least sorted element-index list among all conjugates.
struct SubgroupClass {
  std::vector<int> representative;
  int order = 0;
  int index = 0;
};

// A small permutation group given by generators.  The element list, the
// multiplication table, and the subgroup-class lattice are computed lazily
// behind once-flags, so first access is safe under concurrency.  All values
// are immutable after construction.
class PermGroup {
 public:
  PermGroup();  // the trivial group on one point
  PermGroup(int degree, std::vector<Perm> generators, int order_cap = 120);

  int degree() const { return d_->degree; }
  const std::vector<Perm>& generators() const { return d_->generators; }

  const std::vector<Perm>& elements() const;  // sorted lexicographically
  int order() const { return static_cast<int>(elements().size()); }
  int element_index(const Perm& p) const;  // -1 if not an element
  int identity_index() const;
  int mul(int i, int j) const;  // index of elements[i] * elements[j]
  int inv(int i) const;

  // One representative per conjugacy class of subgroups, sorted by order
  // then by representative; includes the trivial and the full subgroup.
  const std::vector<SubgroupClass>& subgroup_classes() const;

  // Index of the class containing the (sub)group with the given sorted
  // element-index list.
  int classify_subgroup(const std::vector<int>& subgroup) const;

  std::vector<int> conjugate_subgroup(const std::vector<int>& subgroup, int g) const;
  std::vector<int> normalizer(const std::vector<int>& subgroup) const;

  friend bool operator==(const PermGroup& a, const PermGroup& b) {
    return a.d_->degree == b.d_->degree && a.d_->generators == b.d_->generators;
  }

 private:
  struct Data {
    int degree = 1;
    std::vector<Perm> generators;
    int cap = 120;
    mutable std::once_flag elements_once, classes_once;
    mutable std::vector<Perm> elements;
    mutable std::vector<int> mul_table, inv_table;
    mutable int id_index = 0;
    mutable std::vector<SubgroupClass> classes;
  };
  std::shared_ptr<const Data> d_;
  const Data& data() const { return *d_; }
  void ensure_elements() const;
};

// Structural display names for subgroup classes ("e", "C2", "V4", ...);
// `group_name` names the full subgroup.  Repeated structures get prime marks.
std::vector<std::string> subgroup_class_names(const PermGroup& g, const std::string& group_name);

// Built-in groups accepted by name: C1, C2, C3, C4, V4, C6, S3, D4.
PermGroup builtin_group(const std::string& name);
const std::vector<std::string>& builtin_group_names();

// A finite set with an action of a permutation group, given on generators and
// validated (at construction) to extend to a group homomorphism.
struct GSet {
  PermGroup group;
  int points = 0;
  std::vector<Perm> gen_action;   // one permutation of the points per generator
  std::vector<Perm> elem_action;  // derived: one per group element

  friend bool operator==(const GSet& a, const GSet& b) {
    return a.group == b.group && a.points == b.points && a.gen_action == b.gen_action;
  }
};

// Throws ValidationError unless the generator assignment extends to a
// homomorphism (verified by full multiplication over the element list).
GSet make_gset(const PermGroup& g, int points, std::vector<Perm> gen_action);

GSet trivial_gset(const PermGroup& g, int points);

// An equivariant map of G-sets over the same group.
struct GMap {
  GSet dom, cod;
  SetMap map;
};

// Throws ValidationError if not equivariant, CompositionMismatch on group mismatch.
GMap make_gmap(const GSet& dom, const GSet& cod, SetMap map);
GMap identity_gmap(const GSet& x);
GMap compose_gmaps(const GMap& g, const GMap& f);

// Orbit partition: each orbit sorted, orbits listed by least element.
std::vector<std::vector<int>> orbits(const GSet& x);

// { g : g.x = x } as sorted element indices.
std::vector<int> stabilizer(const GSet& x, int point);

// { x : h.x = x for all h in H }, H given as element indices.
std::vector<int> fixed_points(const GSet& x, const std::vector<int>& subgroup);

// Multiset (sorted) of stabilizer class indices, one per orbit: a complete
// isomorphism invariant of G-sets over a fixed group.
std::vector<int> gset_canonical(const GSet& x);

struct GSetPullback {
  GSet object;
  GMap p1, p2;
};

// Pullback in G-sets: the set pullback with the diagonal action.
GSetPullback pullback_gsets(const GMap& f, const GMap& g);

GSet gset_coproduct(const GSet& x, const GSet& y);
GSet gset_product(const GSet& x, const GSet& y);

// The transitive G-set G/H together with, per point, the element index of the
// least coset representative.
struct TransitiveGSet {
  GSet gset;
  std::vector<int> coset_rep;
};

TransitiveGSet make_transitive(const PermGroup& g, const std::vector<int>& subgroup);

// Exhaustive search for an equivariant bijection; the independent oracle
// behind gset_canonical.
std::optional<Perm> find_equivariant_bijection(const GSet& x, const GSet& y);
bool equivariant_bijection_exists(const GSet& x, const GSet& y);

}  // namespace spancat
