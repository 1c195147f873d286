#pragma once

#include <vector>

#include "alphadet/alpha_poly.hpp"
#include "alphadet/mat_poly.hpp"
#include "alphadet/partition.hpp"
#include "alphadet/permutation.hpp"
#include "alphadet/report.hpp"
#include "alphadet/tableaux.hpp"

namespace alphadet {

// {"coeffs": ["1","3","2"]}
json to_json(const AlphaPoly& p);
AlphaPoly alpha_poly_from_json(const json& j);

// [{"monomial": [[i,j,e],...], "coeff": {"coeffs": [...]}}, ...] in canonical term order.
json to_json(const MatPoly& f);
json to_json(const RatMatPoly& f);  // coeff is a plain rational string
MatPoly mat_poly_from_json(const json& j, int n);

json to_json(const Partition& p);  // [3,1]
Partition partition_from_json(const json& j);
json to_json(const Permutation& p);  // one-line array
Permutation permutation_from_json(const json& j);
json to_json(const Numbering& t);  // {"shape":[2,1], "rows":[[1,2],[3]]}
Numbering numbering_from_json(const json& j);
json to_json(const SemiStandardTableau& s);
json to_json(const std::vector<Rational>& values);  // list of rational strings

// Square matrix of rational strings (or integers); throws Input when malformed.
std::vector<std::vector<Rational>> matrix_from_json(const json& j);

}  // namespace alphadet
