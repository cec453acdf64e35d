#include "mcgh/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "mcgh/error.hpp"

namespace mcgh::io {

namespace {

const json& field(const json& j, const char* name) {
  if (!j.is_object() || !j.contains(name))
    throw Error(ErrorCode::ParseError, std::string("missing field '") + name + "'");
  return j.at(name);
}

std::vector<std::string> string_list(const json& j, const char* what) {
  if (!j.is_array()) throw Error(ErrorCode::ParseError, std::string(what) + " must be an array");
  std::vector<std::string> out;
  for (const auto& x : j) {
    if (!x.is_string()) throw Error(ErrorCode::ParseError, std::string(what) + " entries must be strings");
    out.push_back(x.get<std::string>());
  }
  return out;
}

std::size_t parse_index(const json& j) {
  Int v = parse_int(j);
  if (v < 0) throw Error(ErrorCode::ParseError, "index must be non-negative");
  return static_cast<std::size_t>(v);
}

json optional_symbol(const std::optional<Symbol>& s) {
  return s ? json(s->str()) : json(nullptr);
}

json entry_json(const SupportEntry& e) {
  return {{"stage", e.stage}, {"symbol", e.symbol.str()}, {"level", e.level},
          {"value", int_string(e.value)}};
}

}  // namespace

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, path.string() + ": " + e.what());
  }
}

json read_json_arg(const std::string& text) {
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && (text[first] == '{' || text[first] == '[')) {
    try {
      return json::parse(text);
    } catch (const json::exception& e) {
      throw Error(ErrorCode::ParseError, e.what());
    }
  }
  return read_json_file(text);
}

std::string int_string(Int v) { return std::to_string(v); }

Int parse_int(const json& j) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned() && j.get<std::uint64_t>() > static_cast<std::uint64_t>(INT64_MAX))
      throw Error(ErrorCode::Overflow, "integer exceeds 64 bits");
    return j.get<Int>();
  }
  if (j.is_string()) {
    const auto& s = j.get_ref<const std::string&>();
    Int v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec == std::errc::result_out_of_range)
      throw Error(ErrorCode::Overflow, "integer '" + s + "' exceeds 64 bits");
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size())
      throw Error(ErrorCode::ParseError, "not an integer: '" + s + "'");
    return v;
  }
  throw Error(ErrorCode::ParseError, "expected an integer, got " + j.dump());
}

json to_json(const SurfaceSig& sig) {
  return {{"genus", sig.genus}, {"punctures", sig.punctures}, {"boundaries", sig.boundaries}};
}

SurfaceSig surface_from_json(const json& j) {
  SurfaceSig sig;
  sig.genus = static_cast<int>(parse_int(field(j, "genus")));
  sig.punctures = j.contains("punctures") ? string_list(j.at("punctures"), "punctures")
                                          : std::vector<std::string>{};
  sig.boundaries = j.contains("boundaries") ? string_list(j.at("boundaries"), "boundaries")
                                            : std::vector<std::string>{};
  sig.validate();
  return sig;
}

json to_json(const GluingOp& op) {
  json j{{"kind", std::string(to_string(op.kind))},
         {"target", op.target},
         {"new_boundaries", op.new_boundaries}};
  if (op.new_puncture) j["new_puncture"] = *op.new_puncture;
  return j;
}

GluingOp gluing_from_json(const json& j) {
  GluingOp op;
  op.kind = parse_gluing_kind(field(j, "kind").get<std::string>());
  op.target = field(j, "target").get<std::string>();
  if (j.contains("new_puncture") && !j.at("new_puncture").is_null())
    op.new_puncture = j.at("new_puncture").get<std::string>();
  if (j.contains("new_boundaries"))
    op.new_boundaries = string_list(j.at("new_boundaries"), "new_boundaries");
  return op;
}

json to_json(const Exhaustion& exh) {
  json ops = json::array();
  for (const auto& op : exh.ops) ops.push_back(to_json(op));
  return {{"base", to_json(exh.base)}, {"ops", ops}};
}

Exhaustion exhaustion_from_json(const json& j) {
  Exhaustion exh;
  exh.base = surface_from_json(field(j, "base"));
  if (j.contains("ops"))
    for (const auto& op : j.at("ops")) exh.ops.push_back(gluing_from_json(op));
  return exh;
}

json to_json(const HomologyClass& c) {
  json j = json::object();
  for (const auto& [s, k] : c.terms()) j[s.str()] = int_string(k);
  return j;
}

HomologyClass class_from_json(const json& j) {
  if (!j.is_object()) throw Error(ErrorCode::ParseError, "class must be an object");
  HomologyClass c;
  for (const auto& [key, v] : j.items()) c.add(Symbol::parse(key), parse_int(v));
  return c;
}

json to_json(const Assignment& a) {
  json j = json::object();
  for (const auto& [s, v] : a) j[s.str()] = int_string(v);
  return j;
}

Assignment assignment_from_json(const json& j) {
  if (!j.is_object()) throw Error(ErrorCode::ParseError, "assignment must be an object");
  Assignment a;
  for (const auto& [key, v] : j.items()) a[Symbol::parse(key)] = parse_int(v);
  return a;
}

json to_json(const Relation& r) {
  return {{"lhs", to_json(r.lhs)}, {"rhs", to_json(r.rhs)}, {"text", r.str()}};
}

json to_json(const H1Presentation& p) {
  json basis = json::array();
  for (const auto& s : p.basis) basis.push_back(s.str());
  json relations = json::array();
  for (const auto& r : p.relations) relations.push_back(to_json(r));
  return {{"genus", p.genus},
          {"basis", basis},
          {"rank", int_string(static_cast<Int>(p.free_rank()))},
          {"torsion", p.torsion ? json("Z/" + int_string(*p.torsion) + " on tau") : json(nullptr)},
          {"omitted", optional_symbol(p.omitted)},
          {"relations", relations}};
}

json to_json(const StarConfig& cfg) {
  return {{"c", {cfg.c1.str(), cfg.c2.str(), cfg.c3.str()}},
          {"b", cfg.b.str()},
          {"d", {optional_symbol(cfg.d1), optional_symbol(cfg.d2), optional_symbol(cfg.d3)}}};
}

StarConfig star_from_json(const json& j) {
  StarConfig cfg;
  if (j.contains("c")) {
    auto c = string_list(j.at("c"), "c");
    if (c.size() != 3) throw Error(ErrorCode::ParseError, "star needs three c curves");
    cfg.c1 = Symbol::parse(c[0]);
    cfg.c2 = Symbol::parse(c[1]);
    cfg.c3 = Symbol::parse(c[2]);
  }
  if (j.contains("b")) cfg.b = Symbol::parse(j.at("b").get<std::string>());
  const auto& d = field(j, "d");
  if (!d.is_array() || d.size() != 3)
    throw Error(ErrorCode::ParseError, "star needs three d entries (null for trivial)");
  std::optional<Symbol>* slots[] = {&cfg.d1, &cfg.d2, &cfg.d3};
  for (std::size_t i = 0; i < 3; ++i)
    if (!d[i].is_null()) *slots[i] = Symbol::parse(d[i].get<std::string>());
  return cfg;
}

json to_json(const BoundarySumDerivation& d) {
  json steps = json::array();
  for (const auto& s : d.steps)
    steps.push_back({{"coefficient", int_string(s.coefficient)},
                     {"star", to_json(s.star)},
                     {"relation", to_json(star_relation_abelianized(s.star))},
                     {"note", s.note}});
  return {{"relation", to_json(d.relation)}, {"steps", steps}};
}

json to_json(const TransitionMap& t) {
  json rules = json::object();
  for (const auto& [s, c] : t.rules) rules[s.str()] = to_json(c);
  json ext = json::object();
  for (const auto& [s, c] : t.extended_rules) ext[s.str()] = to_json(c);
  return {{"kind", std::string(to_string(t.kind))},
          {"affected", t.affected},
          {"source", to_json(t.source)},
          {"target", to_json(t.target)},
          {"rules", rules},
          {"extended_rules", ext}};
}

SubsetSpec subset_from_json(const json& j) {
  SubsetSpec s;
  auto mode = field(j, "mode").get<std::string>();
  if (mode == "listed_in_A") s.mode = SubsetSpec::Mode::ListedInA;
  else if (mode == "listed_out_of_A") s.mode = SubsetSpec::Mode::ListedOutOfA;
  else throw Error(ErrorCode::ParseError, "unknown subset mode '" + mode + "'");
  if (j.contains("members"))
    for (const auto& m : j.at("members")) s.members.insert(parse_int(m));
  return s;
}

json to_json(const SubsetSpec& s) {
  json members = json::array();
  for (Int m : s.members) members.push_back(m);
  return {{"mode", s.mode == SubsetSpec::Mode::ListedInA ? "listed_in_A" : "listed_out_of_A"},
          {"members", members}};
}

HomSpec homspec_from_json(const json& j, const std::filesystem::path& base_dir) {
  const auto& ref = field(j, "exhaustion");
  Exhaustion exh;
  if (ref.is_string()) {
    std::filesystem::path p = ref.get<std::string>();
    if (p.is_relative() && !base_dir.empty()) p = base_dir / p;
    exh = exhaustion_from_json(read_json_file(p));
  } else {
    exh = exhaustion_from_json(ref);
  }
  std::vector<Assignment> stages;
  for (const auto& st : field(j, "stages"))
    stages.push_back(st.contains("assign") ? assignment_from_json(st.at("assign")) : Assignment{});
  return HomSpec(std::move(exh), std::move(stages));
}

json to_json(const HomSpec& h) {
  json stages = json::array();
  for (std::size_t n = 0; n <= h.depth(); ++n)
    stages.push_back({{"assign", to_json(h.stage(n).values)}});
  return {{"exhaustion", to_json(h.domain())}, {"stages", stages}};
}

PlanarCurve curve_from_json(const json& j) {
  PlanarCurve c;
  for (auto& l : string_list(field(j, "enclosed"), "enclosed")) c.enclosed.insert(std::move(l));
  return c;
}

json to_json(const PlanarCurve& c) {
  return {{"enclosed", std::vector<std::string>(c.enclosed.begin(), c.enclosed.end())}};
}

std::vector<StagedCurve> staged_curves_from_json(const json& j) {
  const json& list = j.is_object() ? field(j, "curves") : j;
  if (!list.is_array()) throw Error(ErrorCode::ParseError, "curves must be an array");
  std::vector<StagedCurve> out;
  for (const auto& c : list) out.push_back({curve_from_json(c), parse_index(field(c, "stage"))});
  return out;
}

TwistWord twist_word_from_json(const json& j) {
  TwistWord w;
  w.stage = parse_index(field(j, "stage"));
  for (const auto& l : field(j, "letters")) {
    Int e = l.contains("exponent") ? parse_int(l.at("exponent")) : 1;
    if (e == 0) throw Error(ErrorCode::ParseError, "twist exponents must be nonzero");
    w.letters.emplace_back(curve_from_json(l), e);
  }
  return w;
}

json to_json(const ConsistencyVerdict& v) {
  json j{{"verdict", v.ok() ? "ok" : (v.violation ? "inconsistent" : "relation_violated")}};
  if (v.violation)
    j["violation"] = {{"stage", v.violation->stage},
                      {"symbol", v.violation->symbol.str()},
                      {"lhs", int_string(v.violation->lhs)},
                      {"rhs", int_string(v.violation->rhs)}};
  if (v.relation_failure)
    j["relation_failure"] = {{"stage", v.relation_failure->stage},
                             {"relation", to_json(v.relation_failure->relation)},
                             {"lhs", int_string(v.relation_failure->lhs)},
                             {"rhs", int_string(v.relation_failure->rhs)}};
  return j;
}

json to_json(const SupportReport& r) {
  json family = json::array();
  for (const auto& e : r.escaping_family) family.push_back(entry_json(e));
  return {{"anchor", r.anchor},
          {"stage_anchors", r.stage_anchors},
          {"escaping", r.escaping},
          {"escaping_family", family}};
}

json to_json(const ProductReport& r) {
  json summands = json::array(), partial = json::array();
  for (Int v : r.summands) summands.push_back(int_string(v));
  for (Int v : r.partial_sums) partial.push_back(int_string(v));
  return {{"value", int_string(r.value)},
          {"summands", summands},
          {"partial_sums", partial},
          {"stabilization_index", r.stabilization_index},
          {"stabilized", r.stabilized},
          {"last_meeting_base", r.last_meeting_base ? json(*r.last_meeting_base) : json(nullptr)},
          {"meeting_base_count", r.meeting_base_count}};
}

json to_json(const FactorReport& r) {
  return {{"factors", r.factors}, {"witness", r.witness ? entry_json(*r.witness) : json(nullptr)}};
}

json to_json(const ObstructionTrace& t) {
  json steps = json::array();
  for (const auto& s : t.steps)
    steps.push_back({{"stage", s.stage}, {"boundary", s.boundary},
                     {"value", int_string(s.value)}, {"op", s.op}});
  json witness = json::array();
  for (const auto& w : t.witness)
    witness.push_back({{"stage", w.stage}, {"boundary", w.boundary}, {"value", int_string(w.value)}});
  json j{{"outcome", std::string(to_string(t.outcome))},
         {"seed_stage", t.seed_stage},
         {"seed", to_json(t.seed)},
         {"completed", to_json(t.completed)},
         {"sign", t.sign},
         {"steps", steps},
         {"witness", witness},
         {"notes", t.notes}};
  j["capped"] = t.capped ? json{{"stage", t.capped->stage}, {"boundary", t.capped->boundary}}
                         : json(nullptr);
  j["stalled_since"] = t.stalled_since ? json(*t.stalled_since) : json(nullptr);
  return j;
}

}  // namespace mcgh::io
