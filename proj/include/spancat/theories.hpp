#pragma once

#include <optional>
#include <string>
#include <vector>

#include "spancat/cmon.hpp"
#include "spancat/groups.hpp"
#include "spancat/matrix.hpp"

namespace spancat {

// Built-in algebraic theories, each truncated to the objects x^0, x^1, ...
// with an entry-bounded hom provider.
enum class TheoryTag { Sets, PtdSets, CMon, Ab, GSets };

struct TheoryPreset {
  TheoryTag tag = TheoryTag::Sets;
  std::optional<PermGroup> group;  // GSets only
  std::string group_name;
};

TheoryPreset sets_theory();
TheoryPreset ptdsets_theory();
TheoryPreset cmon_theory();
TheoryPreset ab_theory();
TheoryPreset gsets_theory(const PermGroup& g, const std::string& name);

std::string theory_name(const TheoryPreset& p);
TheoryPreset theory_by_name(const std::string& name, const std::string& group = "");

// A theory morphism x^m -> x^n.  The payload depends on the preset:
//   Sets     a reindexing map n -> m;
//   PtdSets  a based map n -> m + {*}, entry m meaning the basepoint;
//   CMon     an m x n natural matrix;
//   Ab       an m x n integer matrix;
//   GSets    per output slot a source slot and a translating group element
//            (the transfer-free fragment of the equivariant homs).
struct GSlot {
  int source = 0;
  int element = 0;  // index into group.elements()

  friend bool operator==(const GSlot&, const GSlot&) = default;
};

struct TheoryMorphism {
  int dom = 0;
  int cod = 0;
  SetMap reindex;            // Sets / PtdSets
  IntMatrix matrix;          // CMon / Ab
  std::vector<GSlot> slots;  // GSets

  friend bool operator==(const TheoryMorphism&, const TheoryMorphism&) = default;
};

TheoryMorphism theory_identity(const TheoryPreset& p, int m);

// psi after phi; computed exactly, so composites may leave any entry bound.
TheoryMorphism compose_theory(const TheoryPreset& p, const TheoryMorphism& psi,
                              const TheoryMorphism& phi);

// The entry-bounded truncation of Hom(x^m, x^n), in lexicographic order.
std::vector<TheoryMorphism> enumerate_theory_homs(const TheoryPreset& p, int m, int n, int bound);

// Convenience constructors.
TheoryMorphism morphism_from_matrix(const TheoryPreset& p, IntMatrix m);
TheoryMorphism morphism_from_reindex(const TheoryPreset& p, SetMap reindex);
TheoryMorphism projection_morphism(const TheoryPreset& p, int m, int slot);  // x^m -> x

// A finite model: a carrier with interpretations of the theory's generating
// operations.
struct ModelTable {
  TheoryTag tag = TheoryTag::Sets;
  int size = 0;
  int basepoint = -1;       // PtdSets
  CommMonoidTable monoid;   // CMon / Ab
  std::optional<GSet> gset; // GSets
};

ModelTable sets_model(int n);
ModelTable ptd_model(int n, int basepoint);
ModelTable cmon_model(CommMonoidTable m);
ModelTable ab_model(CommMonoidTable m);
ModelTable gset_model(GSet x);

// The theory's defining equations, checked exhaustively.
Report check_model(const TheoryPreset& p, const ModelTable& m);

// A total function carrier^m -> carrier^n, tabulated over tuple codes
// (slot 0 is the least significant base-carrier digit).
struct TupleMap {
  int dom_arity = 0;
  int cod_arity = 0;
  int carrier = 0;
  std::vector<int> table;  // cod tuple code per dom tuple code

  friend bool operator==(const TupleMap&, const TupleMap&) = default;
};

long long tuple_count(int carrier, int arity);
long long tuple_code(const std::vector<int>& tuple, int carrier);
std::vector<int> tuple_decode(long long code, int carrier, int arity);

// Pointwise evaluation of a theory morphism on a model.
// Throws ArityMismatch if the morphism and model disagree.
TupleMap eval_morphism(const TheoryPreset& p, const ModelTable& model, const TheoryMorphism& phi);

TupleMap compose_tuple_maps(const TupleMap& g, const TupleMap& f);

// eval(psi . phi) == eval(psi) . eval(phi), exactly.
bool functoriality_check(const TheoryPreset& p, const ModelTable& model,
                         const TheoryMorphism& phi, const TheoryMorphism& psi);

// All models with carrier exactly `size`, up to isomorphism, deterministic
// order.  CMon uses a direct interpretation search (independent of
// enumerate_cmon) for size <= 4; Ab uses the partition classification.
std::vector<ModelTable> enumerate_models(const TheoryPreset& p, int size);

// Brute-force search for a structure-preserving carrier bijection.
std::optional<std::vector<int>> model_iso(const TheoryPreset& p, const ModelTable& a,
                                          const ModelTable& b);

// The set-level fixed-point presheaf of a G-set on the orbit category of
// subgroup classes, with one value map per orbit-category morphism.
struct OrbitMorphism {
  int coset_rep = 0;  // group element index g with g^-1 K g <= H
  SetMap value_map;   // X^H -> X^K, over positions in the sorted fixed lists
};

struct OrbitPresheaf {
  std::vector<std::vector<int>> values;  // per subgroup class: sorted fixed points
  // morphisms[k][h]: orbit-category maps G/K -> G/H with induced value maps
  std::vector<std::vector<std::vector<OrbitMorphism>>> morphisms;
  Report functoriality;
};

OrbitPresheaf fixed_point_model(const GSet& x);

// Object inventory of a truncated theory; cyclic when every object is a
// power of the generator reachable from the unit and x itself.
struct TheoryShape {
  int max_arity = 0;
  std::vector<std::optional<int>> object_powers;
};

TheoryShape builtin_theory_shape(int max_arity);
bool theory_is_cyclic(const TheoryShape& shape);

}  // namespace spancat
