#pragma once

// JSON encodings of the library's values. Integers that fit in 64 bits are
// written as numbers, larger ones as decimal strings; readers accept both.
// Label 0 (the gluing leg) is written as "*".

#include <json.hpp>

#include "m0n/chow.hpp"
#include "m0n/configurations.hpp"
#include "m0n/multilinear.hpp"
#include "m0n/operads.hpp"
#include "m0n/trees.hpp"

namespace m0n {

using Json = nlohmann::json;

Json integer_to_json(const Integer& v);
Integer integer_from_json(const Json& j);

Json label_to_json(Label l);
Label label_from_json(const Json& j);

/// { "markings": [..], "vertices": [ { "id": 0, "marks": { "1": "0", .. } } ],
///   "edges": [ { "v": 0, "w": 1, "pos_v": "inf", "pos_w": "0" } ] }
Json tree_to_json(const DecoratedStableTree& t);
/// Combinatorial form: marks as a label array, edges without positions.
Json tree_to_json(const StableTree& t);
/// Accepts marks either as an object of positions or as a label array, and
/// edges with or without positions. Missing positions are filled by
/// decorate_default. Throws ParseError or InvalidTree.
DecoratedStableTree decorated_tree_from_json(const Json& j);
StableTree tree_from_json(const Json& j);

/// { "vars": [..], "terms": [ { "subset": [..], "coeff": c } ] }
Json poly_to_json(const MultilinearPoly& p);
MultilinearPoly poly_from_json(const Json& j);

/// { "coeffs": { "<mask>": c } } with zero slots omitted.
Json form_to_json(const SectionForm& f);
SectionForm form_from_json(const Json& j);

/// { "ambient": [..], "grade": g, "terms": [ { "subset": [..], "coeff": c } ] }
Json chow_to_json(const ChowClass& c);
ChowClass chow_from_json(const Json& j);

/// { "1,2,3,4": "interior 2", "1,2,3,5": "boundary 1,2|3,5", .. }
Json signature_to_json(const Signature& s);
Signature signature_from_json(const Json& j);

Json partition_to_json(const SetPartition& p);

}  // namespace m0n
