#pragma once

// JSON interchange. Every parser throws FormatError on schema violations and
// never returns partially validated data.

#include <cstdint>
#include <json.hpp>
#include <vector>

#include "normgraph/ext_field.hpp"
#include "normgraph/int_poly.hpp"
#include "normgraph/norm_graph.hpp"
#include "normgraph/poly.hpp"
#include "normgraph/witness_general.hpp"

namespace normgraph {

using Json = nlohmann::json;

Json to_json(const ExtElement& x);
ExtElement ext_element_from_json(const Json& j, const ExtField& field);

/// {"p", "k", "modulus"}
Json to_json(const ExtField& field);
ExtField ext_field_from_json(const Json& j);

/// {"domain": "fp" | "ext" | "int", "coeffs": [...]}; ext coefficients are
/// themselves coefficient arrays.
Json to_json(const FpPoly& h);
Json to_json(const ExtPoly& h);
Json to_json(const IntPoly& h);
FpPoly fp_poly_from_json(const Json& j, const PrimeField& f);
ExtPoly ext_poly_from_json(const Json& j, const ExtField& field);
IntPoly int_poly_from_json(const Json& j);

/// {"alpha": [ints], "a": int}
Json to_json(const Vertex& v);
Vertex vertex_from_json(const Json& j, const ExtField& field);

struct StoredBiclique {
  std::uint64_t p = 0;
  int t = 0;
  FpPoly modulus{std::vector<FpElement>{}};
  std::vector<Vertex> L;
  std::vector<Vertex> R;
  bool verified = false;
};

/// {"p", "t", "modulus", "L", "R", "verified"}
Json biclique_to_json(std::uint64_t p, int t, const FpPoly& modulus, const std::vector<Vertex>& L,
                      const std::vector<Vertex>& R, bool verified);
StoredBiclique biclique_from_json(const Json& j);

struct StoredGeneral {
  GeneralParams params;
  std::vector<Vertex> A;
  std::vector<Vertex> B;
  bool verified = false;
};

/// {"t", "m", "p", "r", "thetas", "zeta", "A", "B", "verified"}
Json general_to_json(const GeneralWitness& w, bool verified);
StoredGeneral general_from_json(const Json& j);

}  // namespace normgraph
