#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "spancat/cmon.hpp"
#include "spancat/common.hpp"

namespace spancat {

struct Morphism {
  std::string name;
  int src = 0;
  int dst = 0;
};

// A finite category as explicit tables: named morphisms, per-pair hom lists,
// identities, and a total composition table on composable pairs.
struct FinCat {
  int objects = 0;
  std::vector<Morphism> mors;
  std::vector<std::vector<std::vector<int>>> hom;  // hom[a][b] = morphism ids
  std::vector<int> ids;                            // identity morphism per object
  std::vector<int> comp;                           // comp[g * M + f] = g.f, -1 if not composable

  int mor_count() const { return static_cast<int>(mors.size()); }
  int compose(int g, int f) const { return comp[static_cast<size_t>(g) * mors.size() + f]; }
  int src(int m) const { return mors[m].src; }
  int dst(int m) const { return mors[m].dst; }
};

// Incremental construction; build() checks structural well-formedness
// (identities present, composition total and well-typed on composables).
class FinCatBuilder {
 public:
  explicit FinCatBuilder(int objects);
  int add_morphism(std::string name, int src, int dst);
  void set_identity(int obj, int mor);
  void set_compose(int g, int f, int gf);
  FinCat build();

 private:
  FinCat c_;
  std::map<std::pair<int, int>, int> pending_;
};

// Exhaustive identity/associativity laws; first violation reported.
Report check_category(const FinCat& c);

std::optional<int> find_terminal(const FinCat& c);
std::optional<int> find_initial(const FinCat& c);
std::optional<int> find_zero_object(const FinCat& c);

struct Cone {
  int apex = -1;
  int leg1 = -1;
  int leg2 = -1;
};

// Exhaustive universal-property search; first witness in canonical order
// (apex ascending, legs in hom-list order), or absent.
std::optional<Cone> find_product(const FinCat& c, int a, int b);
std::optional<Cone> find_coproduct(const FinCat& c, int a, int b);
std::vector<Cone> all_products(const FinCat& c, int a, int b);
std::vector<Cone> all_coproducts(const FinCat& c, int a, int b);

// Per-pair biproduct data.  In an entry-bounded truncation the biproduct
// object of a boundary pair may fall outside the category; such pairs are
// `skipped` and do not count against semiadditivity.
struct PairBiproduct {
  bool skipped = true;
  Cone product, coproduct;
  int comparison = -1;          // coproduct apex -> product apex
  int comparison_inverse = -1;  // witness that the comparison is an iso
};

struct SemiadditiveInfo {
  bool ok = false;
  std::string detail;
  int zero = -1;
  std::vector<int> zero_map;           // objects x objects -> morphism id
  std::vector<PairBiproduct> pairs;    // objects x objects, row-major
  int skipped_pairs = 0;

  const PairBiproduct& pair(int a, int b, int objects) const {
    return pairs[static_cast<size_t>(a) * objects + b];
  }
};

// Zero object exists; every pair either has both a product and a coproduct
// with the canonical comparison map an isomorphism, or (at a truncation
// boundary) has neither.
SemiadditiveInfo is_semiadditive(const FinCat& c);

// The commutative monoid on Hom(a, b): f + g = [f, id] . comparison^-1 . <id, g>
// through the biproduct of (a, b); unit is the zero map.  Throws
// NotSemiadditive when the pair is skipped or the laws fail.
CommMonoidTable hom_cmon(const FinCat& c, const SemiadditiveInfo& info, int a, int b);

// Semiadditive with every computable hom-monoid grouplike.
bool is_additive(const FinCat& c);

// Hom-wise group completion on the largest biproduct-closed object window
// (objects in ascending order whose pairwise biproducts are all present).
// Composition is induced through pair representatives; bilinearity of the
// original composition is verified first and CompositionNotBilinear is thrown
// if it fails.  `kept_objects` and `eta` (per ordered pair over the window,
// old hom index -> new hom index) are filled when supplied.
FinCat group_complete_cat(const FinCat& c,
                          std::vector<int>* kept_objects = nullptr,
                          std::vector<std::vector<std::vector<int>>>* eta = nullptr);

// The object-level monoid carried by a symmetric monoidal structure.
struct ObjMonoid {
  int unit = 0;
  std::vector<int> oplus;  // objects x objects

  int sum(int a, int b, int objects) const {
    return oplus[static_cast<size_t>(a) * objects + b];
  }
};

Report check_obj_monoid(const ObjMonoid& m, int objects);

// Closure of {unit, x} under the object sum, ascending.
std::vector<int> skeleton_objects(const ObjMonoid& act, int objects, int x);

// Full subcategory on the listed objects (ascending, deduplicated).
FinCat full_subcategory(const FinCat& c, const std::vector<int>& objects);

// Full subcategory on the oplus-closure of {unit, x}.
FinCat cyclic_skeleton(const FinCat& c, const ObjMonoid& act, int x,
                       std::vector<int>* kept = nullptr);

// --- matrix categories over finite commutative semirings --------------------

struct FiniteSemiring {
  std::string name;
  int size = 0;
  int zero = 0;
  int one = 0;
  std::vector<int> add, mul;  // size x size tables

  int plus(int a, int b) const { return add[static_cast<size_t>(a) * size + b]; }
  int times(int a, int b) const { return mul[static_cast<size_t>(a) * size + b]; }
};

Report check_semiring(const FiniteSemiring& r);

FiniteSemiring boolean_semiring();
FiniteSemiring zmod_semiring(int k);
// {0..cap} with sums and products clamped at cap; boolean_semiring() == cap 1.
// These are the entry-bounded shadows of the natural-number hom-monoids.
FiniteSemiring saturating_nat_semiring(int cap);

// Mat(R) truncated to objects 0..objects-1; morphism a -> b is an a x b
// matrix over R, composed by matrix product.  Carries a decode table from
// morphism ids back to entries.
struct MatCategory {
  FinCat cat;
  FiniteSemiring semiring;
  std::vector<std::vector<int>> entries;  // per morphism id, row-major
};

MatCategory make_mat_category(const FiniteSemiring& r, int objects);

// Exact natural-number matrices with entries <= bound are not closed under
// composition; this constructor demonstrates that by throwing
// TruncationNotClosed at the first escaping product.
FinCat make_exact_nat_mat_category(int bound, int objects);

// The object monoid of a matrix truncation: sum clamped at the last object.
ObjMonoid mat_obj_monoid(int objects);

// The poset category 0 -> 1.
FinCat arrow_category();

// One-object category with endomorphism monoid M.
FinCat one_object_category(const CommMonoidTable& m);

// Discrete category on n objects.
FinCat discrete_category(int n);

struct CatProperties {
  bool cocartesian = false;  // initial object and all binary coproducts
  bool cartesian = false;    // terminal object and all binary products
  bool semiadditive = false;
  bool additive = false;
  int skipped_pairs = 0;     // truncation-boundary pairs in the (semi)additive checks
};

CatProperties category_properties(const FinCat& c);

}  // namespace spancat
