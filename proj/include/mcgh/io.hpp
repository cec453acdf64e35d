#pragma once

#include <filesystem>
#include <string>

#include "json.hpp"
#include "mcgh/homs.hpp"
#include "mcgh/obstruction.hpp"

// JSON encodings of the file formats and reports. Integers are written as
// decimal strings; readers accept either strings or JSON integers.
namespace mcgh::io {

using nlohmann::json;

json read_json_file(const std::filesystem::path& path);
// Parses `text` as JSON when it looks like an object, otherwise reads the
// file it names.
json read_json_arg(const std::string& text);

std::string int_string(Int v);
Int parse_int(const json& j);

json to_json(const SurfaceSig& sig);
SurfaceSig surface_from_json(const json& j);

json to_json(const GluingOp& op);
GluingOp gluing_from_json(const json& j);

json to_json(const Exhaustion& exh);
Exhaustion exhaustion_from_json(const json& j);

json to_json(const HomologyClass& c);
HomologyClass class_from_json(const json& j);

json to_json(const Assignment& a);
Assignment assignment_from_json(const json& j);

json to_json(const Relation& r);
json to_json(const H1Presentation& p);
json to_json(const StarConfig& cfg);
StarConfig star_from_json(const json& j);
json to_json(const BoundarySumDerivation& d);
json to_json(const TransitionMap& t);

SubsetSpec subset_from_json(const json& j);
json to_json(const SubsetSpec& s);

// {"exhaustion": <inline object or path>, "stages": [{"assign": {...}}]}.
// Relative exhaustion paths resolve against `base_dir`.
HomSpec homspec_from_json(const json& j, const std::filesystem::path& base_dir = {});
// Writes the exhaustion inline.
json to_json(const HomSpec& h);

PlanarCurve curve_from_json(const json& j);
json to_json(const PlanarCurve& c);
std::vector<StagedCurve> staged_curves_from_json(const json& j);
TwistWord twist_word_from_json(const json& j);

json to_json(const ConsistencyVerdict& v);
json to_json(const SupportReport& r);
json to_json(const ProductReport& r);
json to_json(const FactorReport& r);
json to_json(const ObstructionTrace& t);

}  // namespace mcgh::io
