#pragma once

#include "json.hpp"

#include "foulkes/class_function.hpp"
#include "foulkes/numeric.hpp"
#include "foulkes/partition.hpp"
#include "foulkes/schur_vector.hpp"

namespace foulkes {

using Json = nlohmann::ordered_json;

// Integers are emitted as JSON numbers while they fit in 64 bits and as
// decimal strings beyond that, so nothing silently loses precision.
Json int_to_json(const Int& x);

// SchurVector: {"n": n, "coeffs": {"[lambda]": c, ...}} in canonical
// partition order.
Json to_json(const SchurVector& v);

// BipartiteDecomposition: {"k":, "m":, "coeffs": [{"mu":, "lambda":,
// "c":}, ...]} ordered by (mu, lambda).
Json to_json(const BipartiteDecomposition& v);

// ClassFunction: {"n":, "values": {"[rho]": v, ...}} over all classes.
Json to_json(const ClassFunction& f);

// PairClassFunction: {"k":, "m":, "values": [{"rho":, "sigma":,
// "value":}, ...]} dense over class pairs.
Json to_json(const PairClassFunction& f);

SchurVector schur_vector_from_json(const Json& j);

}  // namespace foulkes
