#pragma once

#include "cf/cocycle.hpp"
#include "json.hpp"

namespace cf {

using Json = nlohmann::ordered_json;

// Real scalars as "p/q", others as {"re": "p/q", "im": "r/s"}. Reading also
// accepts plain integers and an object without "im".
Json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const Json& j);
// Row-major nested arrays. `cols` is needed only for a matrix with no rows.
Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j, int cols = -1);

Json space_to_json(const AntiinvolutiveSpace& h);
SpacePtr space_from_json(const Json& j, const std::string& name);

// {subset: coefficient} with keys like "[0,2]"; bit k of the basis index is e_k.
Json element_to_json(const Vec& v);
Vec element_from_json(const Json& j, int n_gens);

Json algebra_to_json(const SuperAlgebra& a);
Json bimodule_to_json(const SuperBimodule& m);
Json hom_space_to_json(const HomSpace& h);

// {objects, morphisms: [{id, src, dst}], compose: {"f,g": h}, identities}, with
// objects and morphisms referred to by name.
Json category_to_json(const FiniteCategory& c);
FiniteCategory category_from_json(const Json& j);

// {diagram_id, verdict, failing_pair?, witness_entry?, note?}
Json report_to_json(const CoherenceReport& r);
CoherenceReport report_from_json(const Json& j);

}  // namespace cf
