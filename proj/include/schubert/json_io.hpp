#pragma once

// JSON forms of the library's values. Every to_json has a matching
// from_json so exports re-parse into equal values; sets are written sorted.

#include <json.hpp>

#include "schubert/classify.hpp"
#include "schubert/permutation.hpp"
#include "schubert/polynomial.hpp"
#include "schubert/polytope.hpp"
#include "schubert/sweep.hpp"
#include "schubert/tower.hpp"

namespace schubert {

using Json = nlohmann::ordered_json;

void to_json(Json& j, const Permutation& w);
void from_json(const Json& j, Permutation& w);
void to_json(Json& j, const Word& word);
void from_json(const Json& j, Word& word);
void to_json(Json& j, const PatternCount& p);
void from_json(const Json& j, PatternCount& p);
void to_json(Json& j, const FactorWitness& f);
void from_json(const Json& j, FactorWitness& f);

void to_json(Json& j, const Facet& f);
void from_json(const Json& j, Facet& f);
/// Adds "f_vector" for readers; it is recomputed, not read back.
void to_json(Json& j, const LatticePolytope& p);
void from_json(const Json& j, LatticePolytope& p);

void to_json(Json& j, const Polynomial& p);
void from_json(const Json& j, Polynomial& p);
void to_json(Json& j, const BottMatrix& m);
void from_json(const Json& j, BottMatrix& m);
void to_json(Json& j, const IntervalSequence& s);
void from_json(const Json& j, IntervalSequence& s);
void to_json(Json& j, const FlagTowerData& t);
void from_json(const Json& j, FlagTowerData& t);
/// Carries the generators also as text under "raw_text"/"normalized_text".
void to_json(Json& j, const CohomologyPresentation& c);
void from_json(const Json& j, CohomologyPresentation& c);

void to_json(Json& j, const ClassificationReport& r);
void from_json(const Json& j, ClassificationReport& r);
void to_json(Json& j, const Counterexample& c);
void from_json(const Json& j, Counterexample& c);
void to_json(Json& j, const SuiteReport& r);
void from_json(const Json& j, SuiteReport& r);

}  // namespace schubert
