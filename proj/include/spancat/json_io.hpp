#pragma once

#include <string>

#include <json.hpp>

#include "spancat/cat.hpp"
#include "spancat/cmon.hpp"
#include "spancat/finset.hpp"
#include "spancat/groups.hpp"
#include "spancat/gspan.hpp"
#include "spancat/matrix.hpp"
#include "spancat/span.hpp"
#include "spancat/theories.hpp"

namespace spancat {

// Insertion-ordered JSON keeps emitted documents byte-stable.
using Json = nlohmann::ordered_json;

// Parse with a located ParseError on malformed input.
Json parse_json(const std::string& text, const std::string& where = "input");

std::string dump_json(const Json& j);

Json to_json(const FinSet& x);
Json to_json(const SetMap& f);
Json to_json(const Span& s);
Json to_json(const NatMatrix& m);
Json to_json(const IntMatrix& m);
Json to_json(const PermGroup& g);
Json to_json(const GSet& x);
Json to_json(const CommMonoidTable& m);
Json to_json(const TableOfMarks& t);
Json to_json(const BurnsideRing& r);
Json to_json(const FinCat& c);
Json to_json(const TupleMap& f);
Json model_to_json(const ModelTable& m);

FinSet finset_from_json(const Json& j);
SetMap setmap_from_json(const Json& j);
Span span_from_json(const Json& j);
NatMatrix nat_matrix_from_json(const Json& j);
IntMatrix int_matrix_from_json(const Json& j);
PermGroup group_from_json(const Json& j, int order_cap = 120);
GSet gset_from_json(const Json& j, int order_cap = 120);
CommMonoidTable cmon_from_json(const Json& j);
FinCat fincat_from_json(const Json& j);
ObjMonoid obj_monoid_from_json(const Json& j, int objects);
ModelTable model_from_json(const Json& j, const TheoryPreset& preset);

// Minimal JSON-schema subset: type, properties, required, items, enum, minimum.
Report validate_schema(const Json& schema, const Json& value);

}  // namespace spancat
