#pragma once

#include <string>

#include "json.hpp"
#include "sgm/algebra/graded_module.hpp"
#include "sgm/chain/chain_complex.hpp"
#include "sgm/chain/simplicial.hpp"
#include "sgm/dga/dga.hpp"
#include "sgm/image/sgm.hpp"
#include "sgm/invariants/holes.hpp"
#include "sgm/ring/cohomology_ring.hpp"
#include "sgm/term/atom.hpp"

namespace sgm {

using Json = nlohmann::ordered_json;

/// {"<degree>": {"rank": r, "torsion": [..]}}
Json to_json(const GradedModule& m);
GradedModule graded_module_from_json(const Json& j, const Coefficients& coeffs);

/// {"ranks": [..], "boundaries": [M_1, M_2, ..]} with M_d a list of rows.
/// Without "ranks" they are read off the matrix shapes.
Json to_json(const ChainComplex& c);
ChainComplex chain_complex_from_json(const Json& j);

/// {"simplices": [[v, ..], ..]} or a bare array of vertex lists.
Json to_json(const OrderedSimplicialComplex& k);
OrderedSimplicialComplex simplicial_complex_from_json(const Json& j);

/// {"coefficients", "n", "basis": [{name, degree}], "unit",
///  "products": [{"a", "b", "result": {label: coef}}]}
Json to_json(const CohomologyRing& r);
CohomologyRing ring_from_json(const Json& j);

/// {"coefficients", "basis": [{name, degree}], "unit", "d": {name: {name: coef}},
///  "mul": {"a*b": {name: coef}}, "allow_noncommutative"}
Json to_json(const FiniteDGA& a);
FiniteDGA dga_from_json(const Json& j);

/// {"holes": [[..]], "linking": [{"a": [h, i], "b": [h, i], "value": v}]}
Json to_json(const HoleSpec& h);
HoleSpec hole_spec_from_json(const Json& j);

/// {"kind": "handles", "n", "l": [..]} or {"kind": "holes", "n", "holes", "linking"},
/// optional "mode": "embedded" | "immersed".
Json to_json(const SgmImage& img);
SgmImage sgm_image_from_json(const Json& j);

/// AtomType fields by name; "homology" as a graded module over Z.
Json to_json(const AtomType& a);
AtomType atom_from_json(const Json& j);
/// An array of atoms or {"atoms": [..]}, added on top of the built-in table.
AtomTable atom_table_from_json(const Json& j, AtomTable base = AtomTable::builtin());

/// "2:1,3:1,5:2" or a JSON object {"2": 1, ...}.
RankVector parse_rank_vector(const std::string& text);
RankVector rank_vector_from_json(const Json& j);
Json to_json(const RankVector& r);

Json combination_json(const CohomologyRing& r, const Combination& c);
Json combination_json(const FiniteDGA& a, const Combination& c);

Json read_json_file(const std::string& path);

}  // namespace sgm
