#pragma once

#include "json.hpp"

#include "tlbasis/coxeter.hpp"
#include "tlbasis/laurent.hpp"
#include "tlbasis/noncross.hpp"
#include "tlbasis/tl_core.hpp"
#include "tlbasis/zinno.hpp"

// JSON forms of the library types. Readers throw FormatError on structurally
// bad input and PreconditionError when the decoded object is mathematically
// invalid (crossing blocks, inadmissible (J, I), ...).
namespace tlbasis::json_io {

using nlohmann::json;

// {"-1":"1","1":"1"}: exponent -> decimal coefficient.
json to_json(const LaurentPoly& p);
LaurentPoly laurent_from_json(const json& j);

// {"n":5,"window":[6,3,5,4,2,1]}
json to_json(const Permutation& p);
Permutation permutation_from_json(const json& j);

// {"n":5,"J":[1,2,3],"I":[2,4,5]}
json to_json(const FullyCommutative& w);
FullyCommutative fc_from_json(const json& j);

// {"n":5,"blocks":[[1,6],[2,3,5],[4]]}
json to_json(const NoncrossingPartition& x);
NoncrossingPartition nc_from_json(const json& j);

// {"letters":[[2,1],[4,-1]]}
json to_json(const SignedWord& m);
SignedWord signed_word_from_json(const json& j);

// {"n":3,"terms":[{"J":[1],"I":[1],"coeff":{"0":"1"}}]}
json to_json(const TLElement& t);
TLElement tl_element_from_json(const json& j);

// {"n":1,"pairs":[["T1","T2"],["B1","B2"]]}
json to_json(const TLDiagram& d);
TLDiagram diagram_from_json(const json& j);

// Array of rows, each an array of LaurentPoly objects.
json to_json(const LaurentMatrix& m);

// Parses text, mapping parse errors to FormatError.
json parse(const std::string& text);

}  // namespace tlbasis::json_io
