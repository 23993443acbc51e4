#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "spancat/common.hpp"
#include "spancat/finset.hpp"

namespace spancat {

// A finite commutative monoid as a Cayley table.
struct CommMonoidTable {
  int size = 0;
  int unit = 0;
  std::vector<int> table;  // row-major, size*size

  int add(int a, int b) const { return table[static_cast<size_t>(a) * size + b]; }

  friend bool operator==(const CommMonoidTable&, const CommMonoidTable&) = default;
  friend bool operator<(const CommMonoidTable& a, const CommMonoidTable& b) {
    if (a.size != b.size) return a.size < b.size;
    if (a.unit != b.unit) return a.unit < b.unit;
    return a.table < b.table;
  }
};

// Exhaustive associativity/commutativity/unit check; first violation reported.
Report check_axioms(const CommMonoidTable& m);

// Throws ValidationError when check_axioms fails.
CommMonoidTable make_comm_monoid(int size, int unit, std::vector<int> table);

CommMonoidTable trivial_monoid();
CommMonoidTable cyclic_monoid(int n);  // Z/n
CommMonoidTable join_semilattice2();   // {0, 1} with 1 + 1 = 1
CommMonoidTable direct_product(const CommMonoidTable& a, const CommMonoidTable& b);
CommMonoidTable direct_product_of_cyclics(const std::vector<long long>& orders);

bool is_grouplike(const CommMonoidTable& m);

// A grouplike commutative monoid.
struct AbGroupTable {
  CommMonoidTable monoid;

  int size() const { return monoid.size; }
  int neg(int a) const;
};

// Throws ValidationError unless the table is a grouplike commutative monoid.
AbGroupTable make_ab_group(CommMonoidTable m);

// Group completion K(M) = (M x M) / ~ with (a,b) ~ (c,d) iff a+d+k = c+b+k
// for some k.  Classes are ordered by their lexicographically least pair, so
// the unit class [(0,0)] always lands at index 0.
struct GrothendieckResult {
  AbGroupTable group;
  SetMap canonical;                            // a |-> [(a, unit)]
  std::vector<std::pair<int, int>> class_reps; // least pair per class
};

GrothendieckResult grothendieck_group(const CommMonoidTable& m);

// A finitely presented commutative monoid.  Relations identify two formal
// sums of generators (coefficient vectors); each generator carries one
// torsion rewrite p*g -> q*g (p > q >= 0) that bounds its normal-form
// coefficient below p.
struct ReductionRule {
  long long p = 0;
  long long q = 0;
};

struct MonoidPresentation {
  int generators = 0;
  std::vector<std::pair<std::vector<long long>, std::vector<long long>>> relations;
  std::vector<ReductionRule> reduction;
};

// Congruence closure over the torsion-reduced coefficient box.  Throws
// ClosureBudgetExceeded if the box outgrows `budget`.  The result's element 0
// is the class of the empty sum.  `class_of_vector`, when supplied, receives
// the class index of every reduced coefficient vector.
CommMonoidTable quotient_monoid(const MonoidPresentation& pres, long long budget = 1000000,
                                std::vector<int>* class_of_vector = nullptr,
                                std::vector<std::vector<long long>>* class_reps = nullptr);

// Tensor product of commutative monoids: the universal recipient of a
// bilinear map M x N -> M (x) N, computed by congruence closure over
// generators drawn from minimal generating sets.  The returned `pairing`,
// when requested, gives the bilinear map beta(m, n) as a table of element
// indices (row-major over M x N).
CommMonoidTable tensor(const CommMonoidTable& m, const CommMonoidTable& n,
                       std::vector<int>* pairing = nullptr, long long budget = 1000000);

// Greedy minimal generating set, in element order.
std::vector<int> generating_set(const CommMonoidTable& m);

// Lexicographically least relabeled table over all unit-preserving
// relabelings.  Sizes up to 8; larger inputs throw SizeTooLarge.
CommMonoidTable canonical_cmon_form(const CommMonoidTable& m);

// Backtracking isomorphism search; works beyond the canonical-form size cap.
std::optional<std::vector<int>> cmon_iso(const CommMonoidTable& a, const CommMonoidTable& b);

// All commutative monoids of size exactly n up to isomorphism, presented with
// unit 0, deduplicated by canonical form, in deterministic order.  n <= 5.
std::vector<CommMonoidTable> enumerate_cmon(int n);

// All abelian groups of order exactly n up to isomorphism, from the
// prime-power partition classification.  n <= 16.
std::vector<AbGroupTable> enumerate_ab(int n);

// Number of abelian groups of order n, as a product of partition counts of
// the prime exponents; independent of enumerate_ab's construction.
long long abelian_group_count(int n);

// Invariant factors d1 | d2 | ... of a finite abelian group, computed by
// Smith normal form of the Cayley relation matrix.
std::vector<long long> invariant_factors(const AbGroupTable& a);

// Tensor product of abelian groups through invariant factors:
// Z/a (x) Z/b = Z/gcd(a,b), extended additively.
AbGroupTable tensor_by_invariant_factors(const AbGroupTable& a, const AbGroupTable& b);

// Multiset of prime-power components of a list of cyclic orders; a canonical
// isomorphism invariant of the direct sum.
std::vector<long long> primary_decomposition(const std::vector<long long>& orders);

// All monoid homomorphisms M -> A, as lookup tables in lexicographic order.
std::vector<SetMap> monoid_homs(const CommMonoidTable& m, const CommMonoidTable& a);

}  // namespace spancat
