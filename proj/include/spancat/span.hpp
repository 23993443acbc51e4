#pragma once

#include <string>
#include <vector>

#include "spancat/finset.hpp"
#include "spancat/matrix.hpp"

namespace spancat {

// A span X <- A -> Y between finite sets.  Spans are kept concrete
// (apex plus legs) and compared only through their canonical matrices.
struct Span {
  SetMap left;   // apex -> X
  SetMap right;  // apex -> Y

  int apex() const { return left.dom; }
  int src() const { return left.cod; }
  int dst() const { return right.cod; }
};

Span identity_span(int n);
Span empty_span(int x, int y);

// Throws ValidationError unless both legs are valid and share the apex.
void validate_span(const Span& s);

// Complete isomorphism invariant: entry (x, y) is the apex fiber size over (x, y).
NatMatrix span_canonical(const Span& s);

// Pullback composition.  Throws CompositionMismatch unless s1.dst == s2.src.
// Canonically, span_canonical(span_compose(s2, s1)) ==
// mat_mul(span_canonical(s1), span_canonical(s2)).
Span span_compose(const Span& s2, const Span& s1);

// Disjoint union of apexes, i.e. entrywise sum of canonical matrices.
NatMatrix hom_add(const NatMatrix& a, const NatMatrix& b);

// Group completion of a hom-monoid: the formal difference plus - minus.
IntMatrix group_complete_hom(const NatMatrix& plus, const NatMatrix& minus);

// Builds a concrete span whose canonical matrix is `m` (fiberwise apex).
Span span_from_matrix(const NatMatrix& m);

// Elementary matrix E_{x,y}: the canonical basis of the free hom-monoid.
NatMatrix elementary_matrix(int rows, int cols, int x, int y);

struct BiproductReport {
  bool pass = false;
  std::string detail;
  int object = -1;               // the biproduct candidate m + n
  int tested_max_object = 0;     // test objects ranged over 0..tested_max_object
  IntMatrix comparison;          // canonical coproduct -> product map
  bool comparison_is_iso = false;
};

// Verifies that m (+) n is simultaneously a product and a coproduct of m and n
// in the entry-bounded matrix category: every cone over a test object has
// exactly one mediating matrix, found by exhausting all bounded matrices.
// Test objects range over sizes 0..max_test_size.
BiproductReport check_biproduct(int m, int n, int bound, int max_test_size = 2);

// The canonical bijection X x (Y + Z) ~ (X x Y) + (X x Z), verified to be one.
struct DistributivityWitness {
  SetMap bijection;
  bool ok = false;
  std::string detail;
};

DistributivityWitness check_distributivity(FinSet x, FinSet y, FinSet z);

}  // namespace spancat
