#pragma once

#include <json.hpp>

#include "pcp/groupoid.hpp"
#include "pcp/nest.hpp"
#include "pcp/suites.hpp"

namespace pcp {

// Insertion-ordered JSON keeps reports byte-stable for a fixed config.
using Json = nlohmann::ordered_json;

Json to_json(const NAdic& v);                            // "p/n^e"
NAdic nadic_from_json(int base, const Json& j);

Json to_json(const ClopenSet& s);                        // [["a","b"], ...]
ClopenSet clopen_from_json(int base, const Json& j);

Json to_json(const StepFunction& f);                     // [{interval, re, im}, ...]
StepFunction step_from_json(int base, const Json& j);

Json to_json(const GElem& g);                            // {"r": "p/n^e", "k": int}
GElem gelem_from_json(int base, const Json& j);

Json to_json(const HElem& h);                            // adds {"p": int}
HElem helem_from_json(int base, const Json& j);

Json to_json(const PartialMap& m);                       // {"g", "domain"}
PartialMap partial_map_from_json(int base, const Json& j);

Json to_json(const SlotSet& s);                          // array of ClopenSet
SlotSet slotset_from_json(int base, const Json& j);

Json to_json(const GroupoidElement& g);                  // {"lambda", "mu", "tail"}
GroupoidElement groupoid_from_json(int base, const Json& j);

Json to_json(const YGroupoidElement& g);                 // adds {"i", "q"}
YGroupoidElement y_groupoid_from_json(int base, int slots, const Json& j);

// {"session": {"n","k"}, "terms": [{"g", "f"}]}; k = 1 uses the GElem form
// with a bare StepFunction coefficient, k > 1 the HElem form with a
// slot-indexed coefficient array.
Json to_json(const AlgebraElement& a);
AlgebraElement element_from_json(const Json& j);

Json to_json(const GroupPredicate& p);                   // {"name"} | {"custom"}
GroupPredicate predicate_from_json(int base, const Json& j);

Json to_json(const SessionConfig& cfg);
Json to_json(const RelationReport& rep, const SessionConfig& cfg);

}  // namespace pcp
