#pragma once

#include <string>
#include <vector>

#include "spancat/groups.hpp"
#include "spancat/matrix.hpp"
#include "spancat/span.hpp"

namespace spancat {

// A span of G-sets X <- A -> Y over a common group.
struct GSpan {
  GMap left;
  GMap right;

  const GSet& apex() const { return left.dom; }
  const GSet& src() const { return left.cod; }
  const GSet& dst() const { return right.cod; }
};

GSpan identity_gspan(const GSet& x);
GSpan empty_gspan(const GSet& x, const GSet& y);

void validate_gspan(const GSpan& s);

// One basis element of the equivariant hom between fixed G-sets X and Y:
// the simultaneous-conjugation class of (H <= G, (x, y) in (X x Y)^H),
// labelled by the subgroup class index and the least pair in its orbit
// under the normalizer of the class representative.
struct GBurnBasisElem {
  int subgroup_class = 0;
  int x = 0;
  int y = 0;

  friend bool operator==(const GBurnBasisElem&, const GBurnBasisElem&) = default;
  friend auto operator<=>(const GBurnBasisElem&, const GBurnBasisElem&) = default;
};

// The canonical basis of Hom(X, Y), in the fixed order: subgroup class index
// first, then lexicographically least orbit representative.
std::vector<GBurnBasisElem> gburn_basis(const GSet& x, const GSet& y);

// Canonical form of an equivariant span: multiplicities over gburn_basis.
struct GBurnHom {
  std::vector<GBurnBasisElem> basis;
  std::vector<long long> coeffs;

  friend bool operator==(const GBurnHom&, const GBurnHom&) = default;
};

GBurnHom gspan_canonical(const GSpan& s);

// Pullback composition of equivariant spans.
GSpan gspan_compose(const GSpan& s2, const GSpan& s1);

// A concrete span representing one basis element: apex G/H with legs
// gH |-> g.x and gH |-> g.y.
GSpan realize_basis_elem(const GSet& x, const GSet& y, const GBurnBasisElem& e);

// Bilinear composition on canonical forms, computed by realizing basis
// elements as concrete spans and composing them.  `v1_xy` is a hom X -> Y,
// `v2_yz` a hom Y -> Z; the result is their composite X -> Z.
GBurnHom compose_hom_vectors(const GSet& x, const GSet& y, const GSet& z,
                             const GBurnHom& v1_xy, const GBurnHom& v2_yz);

// Forget the group action.
Span forget_gspan(const GSpan& s);

// An element of the Burnside ring A(G): integer coefficients over the
// transitive G-sets G/H, indexed by subgroup class.
using BurnsideRingElement = std::vector<long long>;

struct BurnsideRing {
  PermGroup group;
  std::string group_name;
  std::vector<std::string> class_names;
  // structure[h][k] = coefficients of [G/H][G/K] over the basis
  std::vector<std::vector<BurnsideRingElement>> structure;

  int classes() const { return static_cast<int>(class_names.size()); }
  BurnsideRingElement basis_element(int h) const;
  BurnsideRingElement zero() const { return BurnsideRingElement(classes(), 0); }
  BurnsideRingElement one() const;  // [G/G]
  BurnsideRingElement add(const BurnsideRingElement& a, const BurnsideRingElement& b) const;
  BurnsideRingElement mul(const BurnsideRingElement& a, const BurnsideRingElement& b) const;
};

// Structure constants from orbit decompositions of product G-sets.
BurnsideRing burnside_ring(const PermGroup& g, const std::string& group_name);

// Square matrix M[K][H] = |(G/K)^H| over subgroup classes by increasing order;
// lower triangular with positive diagonal.
struct TableOfMarks {
  std::string group_name;
  std::vector<std::string> class_names;
  IntMatrix matrix;  // rows indexed by K, columns by H
};

TableOfMarks table_of_marks(const PermGroup& g, const std::string& group_name);

// Ghost-ring coordinates: phi(x)[H] = sum_K x[K] * |(G/K)^H|.
std::vector<long long> mark_hom(const BurnsideRingElement& x, const TableOfMarks& marks);

// Equivariant distributivity X x (Y + Z) ~ (X x Y) + (X x Z): the canonical
// bijection, checked to be an isomorphism of G-sets.
struct GDistributivityWitness {
  SetMap bijection;
  bool ok = false;
  std::string detail;
};

GDistributivityWitness check_distributivity(const GSet& x, const GSet& y, const GSet& z);

}  // namespace spancat
