#pragma once

#include <stdexcept>

#include <json.hpp>

#include "hive/cone.hpp"
#include "hive/counting.hpp"
#include "hive/hive.hpp"
#include "hive/polynomial.hpp"
#include "hive/shapes.hpp"
#include "hive/tableau.hpp"
#include "hive/tensor_algebra.hpp"

namespace hive {

using json = nlohmann::ordered_json;

/// Malformed or out-of-schema JSON input.
class JsonSchemaError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Schemas (all integers are JSON numbers except polynomial coefficients and
// series coefficients, which are decimal strings):
//   partition   [3, 2, 1]
//   boundary    {"lambda": partition, "mu": partition, "nu": partition}
//   hive        {"n": 3, "rows": [[0], [0, 2], ...]}   rows of length 1..n+1
//   tableau     {"n": 3, "outer": partition, "inner": partition,
//                "rows": [[0, 0, 1], [0, 2], [1]]}      0 marks an inner box
//   polynomial  {"rank": 3, "terms": [{"coeff": "-1", "exps": {"x11": 2}}]}
//               rank 0 names its variables "v<id>"
//   hwv         {"boundary", "hive", "decomposition": [3, 4, 8],
//                "polynomial", "initial": {"x11": 2, ...}}
//   presentation {"n", "basis": [hive], "degrees": [..],
//                 "relations": [{"name", "left": [..], "right": [..]}]}
//   series      {"n": 4, "coefficients": ["1", "2", ...]}
//   check       {"name", "passed", "detail"}

json to_json(const Partition& p);
Partition partition_from_json(const json& j);

json to_json(const Boundary& b);
Boundary boundary_from_json(const json& j);

json to_json(const Hive& h);
/// Validates the array; throws JsonSchemaError for shape problems and
/// InvalidHive when the entries do not form a hive.
Hive hive_from_json(const json& j);

json to_json(const LRTableau& t);
LRTableau tableau_from_json(const json& j);

json monomial_to_json(const Monomial& m, int rank);
Monomial monomial_from_json(const json& j, int rank);

json to_json(const Polynomial& p);
Polynomial polynomial_from_json(const json& j);

json to_json(const HighestWeightVector& v);
/// Rebuilds the vector and checks that its fields agree with each other.
HighestWeightVector hwv_from_json(const json& j);

json to_json(const ConePresentation& p);
ConePresentation presentation_from_json(const json& j);

json series_to_json(int n, const SeriesPrefix& s);
SeriesPrefix series_from_json(const json& j);

json to_json(const CheckResult& r);

} // namespace hive
