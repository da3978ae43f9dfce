#pragma once

#include <json.hpp>

#include "susy/geometry.hpp"
#include "susy/laurent.hpp"
#include "susy/partitions.hpp"
#include "susy/polynomial.hpp"
#include "susy/supersym.hpp"

namespace susy {

using Json = nlohmann::ordered_json;

// Polynomial wire format:
//   {"m":2,"n":2,"laurent":false,
//    "terms":[{"c":"3","x":[2,0],"y":[0,0]}, ...]}
// Coefficients are decimal strings, optionally "num/den". Terms are emitted
// leading term first; readers accept any order and accumulate duplicates.
// An optional "names" annotation records display names for the blocks.
Json poly_to_json(const Polynomial& p);
Json poly_to_json(const Polynomial& p, const std::string& xname, const std::string& yname);
Polynomial poly_from_json(const Json& j);

Json partition_to_json(const Partition& p);          // plain integer array
Partition partition_from_json(const Json& j);

Json signature_to_json(const IntegerSignature& s);   // {"entries":[...]}
IntegerSignature signature_from_json(const Json& j);

Json signature_pair_to_json(const SignaturePair& s); // {"lambda":[...],"mu":[...]}
SignaturePair signature_pair_from_json(const Json& j);

Json decomposition_to_json(const BasisDecomposition& d);
BasisDecomposition decomposition_from_json(const Json& j);

// {"x":["3","1/2"],"y":["-3","5"],"multiplicative":false}
Json point_to_json(const Point& p);
Point point_from_json(const Json& j);

Json point_set_to_json(const PointSet& v);           // array of points
PointSet point_set_from_json(const Json& j);

Json parse_json_text(const std::string& text);       // parse_error on bad input

}  // namespace susy
