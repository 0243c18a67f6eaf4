#include "schubert/json_io.hpp"

#include <stdexcept>

namespace schubert {

namespace {

FactorKind factor_kind_from(const std::string& s) {
  for (auto k : {FactorKind::Braid321, FactorKind::Braid3412})
    if (to_string(k) == s) return k;
  throw std::invalid_argument("unknown factor kind '" + s + "'");
}

PosetVerdict poset_verdict_from(const std::string& s) {
  for (auto v : {PosetVerdict::Boolean, PosetVerdict::S3TimesBoolean, PosetVerdict::P3412TimesBoolean,
                 PosetVerdict::None})
    if (to_string(v) == s) return v;
  throw std::invalid_argument("unknown poset verdict '" + s + "'");
}

PolytopeVerdict polytope_verdict_from(const std::string& s) {
  for (auto v : {PolytopeVerdict::Cube, PolytopeVerdict::HexagonTimesCube, PolytopeVerdict::Q3412TimesCube,
                 PolytopeVerdict::None})
    if (to_string(v) == s) return v;
  throw std::invalid_argument("unknown polytope verdict '" + s + "'");
}

template <typename T>
Json optional_json(const std::optional<T>& value) {
  return value ? Json(*value) : Json(nullptr);
}

template <typename T>
std::optional<T> optional_from(const Json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<T>();
}

std::vector<std::string> texts(const std::vector<Polynomial>& ps, const std::vector<std::string>& names) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(p.to_string(names));
  return out;
}

}  // namespace

void to_json(Json& j, const Permutation& w) { j = w.to_string(); }
void from_json(const Json& j, Permutation& w) { w = parse_permutation(j.get<std::string>()); }

void to_json(Json& j, const Word& word) { j = word.letters; }
void from_json(const Json& j, Word& word) { word.letters = j.get<std::vector<int>>(); }

void to_json(Json& j, const PatternCount& p) {
  j = Json{{"count_321", p.count_321}, {"count_3412", p.count_3412}, {"combined", p.combined}};
}
void from_json(const Json& j, PatternCount& p) {
  p.count_321 = j.at("count_321").get<long long>();
  p.count_3412 = j.at("count_3412").get<long long>();
  p.combined = j.at("combined").get<long long>();
}

void to_json(Json& j, const FactorWitness& f) {
  j = Json{{"word", f.word}, {"position", f.position}, {"base", f.base}, {"kind", to_string(f.kind)}};
}
void from_json(const Json& j, FactorWitness& f) {
  f.word = j.at("word").get<Word>();
  f.position = j.at("position").get<int>();
  f.base = j.at("base").get<int>();
  f.kind = factor_kind_from(j.at("kind").get<std::string>());
}

void to_json(Json& j, const Facet& f) {
  j = Json{{"normal", f.normal}, {"offset", f.offset}, {"vertices", f.vertices}};
}
void from_json(const Json& j, Facet& f) {
  f.normal = j.at("normal").get<IntVector>();
  f.offset = j.at("offset").get<Integer>();
  f.vertices = j.at("vertices").get<std::vector<int>>();
}

void to_json(Json& j, const LatticePolytope& p) {
  j = Json{{"ambient_dim", p.ambient_dim}, {"dim", p.dim},           {"vertices", p.vertices},
           {"facets", p.facets},           {"chart", p.chart},       {"non_vertices", p.non_vertices},
           {"f_vector", f_vector(p)}};
}
void from_json(const Json& j, LatticePolytope& p) {
  p.ambient_dim = j.at("ambient_dim").get<int>();
  p.dim = j.at("dim").get<int>();
  p.vertices = j.at("vertices").get<std::vector<Point>>();
  p.facets = j.at("facets").get<std::vector<Facet>>();
  p.chart = j.at("chart").get<std::vector<int>>();
  p.non_vertices = j.at("non_vertices").get<std::vector<Point>>();
}

void to_json(Json& j, const Polynomial& p) {
  Json terms = Json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back(Json{{"exponents", e}, {"coefficient", c}});
  j = Json{{"variables", p.variables()}, {"terms", terms}};
}
void from_json(const Json& j, Polynomial& p) {
  p = Polynomial(j.at("variables").get<std::size_t>());
  for (const auto& t : j.at("terms"))
    p.add_term(t.at("exponents").get<Polynomial::Exponents>(), t.at("coefficient").get<Integer>());
}

void to_json(Json& j, const BottMatrix& m) { j = Json{{"word", m.word}, {"entries", m.entries}}; }
void from_json(const Json& j, BottMatrix& m) {
  m.word = j.at("word").get<Word>();
  m.entries = j.at("entries").get<std::vector<std::vector<int>>>();
}

void to_json(Json& j, const IntervalSequence& s) {
  j = Json{{"w", s.w},
           {"sets", s.sets},
           {"block", s.block},
           {"kind", to_string(s.kind)},
           {"block_word", s.block_word},
           {"witness", s.witness},
           {"factors", s.factors},
           {"product_matches", s.product_matches}};
}
void from_json(const Json& j, IntervalSequence& s) {
  s.w = j.at("w").get<Permutation>();
  s.sets = j.at("sets").get<std::vector<std::vector<int>>>();
  s.block = j.at("block").get<int>();
  s.kind = factor_kind_from(j.at("kind").get<std::string>());
  s.block_word = j.at("block_word").get<Word>();
  s.witness = j.at("witness").get<FactorWitness>();
  s.factors = j.at("factors").get<std::vector<Permutation>>();
  s.product_matches = j.at("product_matches").get<bool>();
}

void to_json(Json& j, const FlagTowerData& t) {
  Json vectors = Json::array();
  for (const auto& v : t.vectors) vectors.push_back(Json{{"j", v.j}, {"k", v.k}, {"m", v.m}, {"values", v.values}});
  j = Json{{"sets", t.sets}, {"fiber_sizes", t.fiber_sizes}, {"vectors", vectors}};
}
void from_json(const Json& j, FlagTowerData& t) {
  t.sets = j.at("sets").get<std::vector<std::vector<int>>>();
  t.fiber_sizes = j.at("fiber_sizes").get<std::vector<int>>();
  t.vectors.clear();
  for (const auto& v : j.at("vectors"))
    t.vectors.push_back({v.at("j").get<int>(), v.at("k").get<int>(), v.at("m").get<int>(),
                         v.at("values").get<std::vector<int>>()});
}

void to_json(Json& j, const CohomologyPresentation& c) {
  j = Json{{"sequence", c.sequence},
           {"tower", c.tower},
           {"variables", c.variables},
           {"raw", c.raw},
           {"raw_text", texts(c.raw, c.variables)},
           {"relations", c.relations},
           {"relations_text", texts(c.relations, c.variables)},
           {"normalized_variables", c.normalized_variables},
           {"normalized", c.normalized},
           {"normalized_text", texts(c.normalized, c.normalized_variables)}};
}
void from_json(const Json& j, CohomologyPresentation& c) {
  c.sequence = j.at("sequence").get<IntervalSequence>();
  c.tower = j.at("tower").get<FlagTowerData>();
  c.variables = j.at("variables").get<std::vector<std::string>>();
  c.raw = j.at("raw").get<std::vector<Polynomial>>();
  c.relations = j.at("relations").get<std::vector<Polynomial>>();
  c.normalized_variables = j.at("normalized_variables").get<std::vector<std::string>>();
  c.normalized = j.at("normalized").get<std::vector<Polynomial>>();
}

void to_json(Json& j, const ClassificationReport& r) {
  j = Json{{"w", r.w},
           {"length", r.length},
           {"complexity", r.complexity},
           {"smooth", r.smooth},
           {"profile", r.profile},
           {"distinct_letters", r.distinct_letters},
           {"witness", optional_json(r.witness)},
           {"poset", to_string(r.poset)},
           {"polytope", r.polytope ? Json(to_string(*r.polytope)) : Json(nullptr)},
           {"tower", optional_json(r.tower)},
           {"consistent", r.consistent},
           {"disagreements", r.disagreements}};
}
void from_json(const Json& j, ClassificationReport& r) {
  r.w = j.at("w").get<Permutation>();
  r.length = j.at("length").get<int>();
  r.complexity = j.at("complexity").get<int>();
  r.smooth = j.at("smooth").get<bool>();
  r.profile = j.at("profile").get<PatternCount>();
  r.distinct_letters = j.at("distinct_letters").get<bool>();
  r.witness = optional_from<FactorWitness>(j.at("witness"));
  r.poset = poset_verdict_from(j.at("poset").get<std::string>());
  const auto& poly = j.at("polytope");
  r.polytope = poly.is_null() ? std::nullopt : std::optional(polytope_verdict_from(poly.get<std::string>()));
  r.tower = optional_from<IntervalSequence>(j.at("tower"));
  r.consistent = j.at("consistent").get<bool>();
  r.disagreements = j.at("disagreements").get<std::vector<std::string>>();
}

void to_json(Json& j, const Counterexample& c) { j = Json{{"subject", c.subject}, {"detail", c.detail}}; }
void from_json(const Json& j, Counterexample& c) {
  c.subject = j.at("subject").get<std::string>();
  c.detail = j.at("detail").get<std::string>();
}

void to_json(Json& j, const SuiteReport& r) {
  j = Json{{"suite", r.suite},   {"n", r.n},           {"checked", r.checked},
           {"passed", r.passed}, {"failed", r.failed}, {"counterexamples", r.counterexamples},
           {"summary", r.summary}};
}
void from_json(const Json& j, SuiteReport& r) {
  r.suite = j.at("suite").get<std::string>();
  r.n = j.at("n").get<int>();
  r.checked = j.at("checked").get<long long>();
  r.passed = j.at("passed").get<long long>();
  r.failed = j.at("failed").get<long long>();
  r.counterexamples = j.at("counterexamples").get<std::vector<Counterexample>>();
  r.summary = j.at("summary").get<std::map<std::string, std::string>>();
}

}  // namespace schubert
