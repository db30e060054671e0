#pragma once

#include "steenrod/limits.hpp"
#include "steenrod/simplicial.hpp"

#include <json.hpp>

#include <string>

namespace steenrod {

using Json = nlohmann::json;

// Matrices are arrays of rows of integer strings (plain JSON integers are
// accepted on input). Shapes always come from the surrounding object, so an
// empty array is a valid 0 x n matrix.
Json to_json(const IntMatrix& m);
IntMatrix matrix_from_json(const Json& j, std::size_t rows, std::size_t cols, const std::string& where);

Json to_json(const ChainComplex& c);
ChainComplex complex_from_json(const Json& j);

// Components only; the endpoints live in the enclosing document.
Json components_json(const GradedMap& f);
GradedMap graded_map_from_json(const Json& components, const ChainComplex& source, const ChainComplex& target,
                               int degree, const std::string& where);

Json to_json(const ChainMap& f);
ChainMap chain_map_from_json(const Json& j);

Json to_json(const Tower& t);
Tower tower_from_json(const Json& j);

Json to_json(const MapTower& f);
MapTower map_tower_from_json(const Json& j);

Json to_json(const SimplicialComplex& k);
SimplicialComplex simplicial_from_json(const Json& j);

Json to_json(const SimplicialMap& f);
SimplicialMap simplicial_map_from_json(const Json& j);

// Presentation: {"generators": n, "relators": [[...], ...]}.
Json to_json(const FgAbGroup& g);
FgAbGroup group_from_json(const Json& j);

Json to_json(const GroupTower& t);
GroupTower group_tower_from_json(const Json& j);

// Report forms: canonical invariants, and maps on canonical generators.
Json invariants_json(const FgAbGroup& g);
Json homomorphism_json(const Homomorphism& h);

// Parses text and checks the top-level `kind`. Throws ParseError.
Json parse_document(const std::string& text);
std::string document_kind(const Json& j);

}  // namespace steenrod
