#ifndef DELTAKIT_JSON_IO_HPP
#define DELTAKIT_JSON_IO_HPP

#include <string>

#include "json.hpp"

#include "deltakit/complex.hpp"
#include "deltakit/instances.hpp"
#include "deltakit/monotone.hpp"
#include "deltakit/squares.hpp"
#include "deltakit/sset.hpp"
#include "deltakit/vee.hpp"

namespace deltakit {

using Json = nlohmann::json;

// MonotoneMap: {"dom": m, "cod": n, "values": [...]}, with the shorthands
// {"id": n}, {"d": [n, i]}, {"s": [n, i]} accepted on input.
Json map_to_json(const MonotoneMap& f);
MonotoneMap map_from_json(const Json& j);

Json span_to_json(const Span& s);
Span span_from_json(const Json& j);

Json square_to_json(const Square& q);
Square square_from_json(const Json& j);

Json grid_to_json(const Grid& g);
Grid grid_from_json(const Json& j);

Json decomposition_to_json(const VeeDecomposition& dec);
VeeDecomposition decomposition_from_json(const Json& j);

Json family_to_json(const VeeFamily& fam);
VeeFamily family_from_json(const Json& j);

// Complex: {"ground": n_plus_1, "facets": [[...]], "directed": bool}
Json complex_to_json(const SimplicialComplex& S, bool directed);
std::pair<SimplicialComplex, bool> complex_from_json(const Json& j);

Json rip_order_to_json(const RipOrder& order);

// TruncatedSSet: {"dim": N, "cells": {"0": [...]}, "faces": {"n,i": {...}},
// "degeneracies": {"n,i": {...}}}
Json sset_to_json(const TruncatedSSet& X);
TruncatedSSet sset_from_json(const Json& j);

// FinCategory: {"objects": [...], "morphisms": [{"name","src","dst"}],
// "identities": {...}, "compose": {"first,then": result}}
Json category_to_json(const FinCategory& C);
FinCategory category_from_json(const Json& j);

// Tables additionally round-trip through CSV; the header row lists column
// indices 0..n.
std::string table_to_csv(const Table& T);
Table table_from_csv(const std::string& text);

}  // namespace deltakit

#endif
