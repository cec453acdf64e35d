#include "mcgh/surface.hpp"

#include <algorithm>
#include <charconv>

#include "mcgh/error.hpp"

namespace mcgh {

namespace {

bool contains(const std::vector<std::string>& v, std::string_view x) {
  return std::find(v.begin(), v.end(), x) != v.end();
}

std::size_t arity(GluingKind kind) {
  switch (kind) {
    case GluingKind::PuncturedDisk: return 0;
    case GluingKind::PuncturedAnnulus: return 1;
    case GluingKind::PairOfPants: return 2;
  }
  return 0;
}

}  // namespace

bool SurfaceSig::has_puncture(std::string_view label) const {
  return contains(punctures, label);
}

bool SurfaceSig::has_boundary(std::string_view label) const {
  return contains(boundaries, label);
}

bool SurfaceSig::has_label(std::string_view label) const {
  return has_puncture(label) || has_boundary(label);
}

void SurfaceSig::validate() const {
  if (genus != 0 && genus != 1)
    throw Error(ErrorCode::InvalidSurface,
                "genus must be 0 or 1, got " + std::to_string(genus));
  if (genus == 0 && boundaries.size() > 1)
    throw Error(ErrorCode::Unsupported,
                "planar stages must have at most one boundary component");
  std::set<std::string_view> seen;
  for (const auto* list : {&punctures, &boundaries}) {
    for (const auto& l : *list) {
      if (!is_valid_label(l))
        throw Error(ErrorCode::InvalidLabel, "bad label '" + l + "'");
      if (!seen.insert(l).second)
        throw Error(ErrorCode::LabelCollision, "label '" + l + "' repeated");
    }
  }
}

std::string_view to_string(GluingKind kind) {
  switch (kind) {
    case GluingKind::PuncturedDisk: return "disk";
    case GluingKind::PuncturedAnnulus: return "annulus";
    case GluingKind::PairOfPants: return "pants";
  }
  return {};
}

GluingKind parse_gluing_kind(std::string_view text) {
  if (text == "disk") return GluingKind::PuncturedDisk;
  if (text == "annulus") return GluingKind::PuncturedAnnulus;
  if (text == "pants") return GluingKind::PairOfPants;
  throw Error(ErrorCode::ParseError, "unknown gluing kind '" + std::string(text) + "'");
}

GluingOp GluingOp::disk(std::string target, std::string puncture) {
  return {GluingKind::PuncturedDisk, std::move(target), std::move(puncture), {}};
}

GluingOp GluingOp::annulus(std::string target, std::string new_boundary,
                           std::string puncture) {
  return {GluingKind::PuncturedAnnulus, std::move(target), std::move(puncture),
          {std::move(new_boundary)}};
}

GluingOp GluingOp::pants(std::string target, std::string first,
                         std::string second) {
  return {GluingKind::PairOfPants, std::move(target), std::nullopt,
          {std::move(first), std::move(second)}};
}

SurfaceSig apply_gluing(const SurfaceSig& sig, const GluingOp& op) {
  auto pos = std::find(sig.boundaries.begin(), sig.boundaries.end(), op.target);
  if (pos == sig.boundaries.end())
    throw Error(ErrorCode::UnknownBoundary,
                "no boundary '" + op.target + "' to glue onto");
  if (op.new_boundaries.size() != arity(op.kind))
    throw Error(ErrorCode::InvalidOp,
                std::string(to_string(op.kind)) + " gluing needs " +
                    std::to_string(arity(op.kind)) + " new boundaries");
  bool wants_puncture = op.kind != GluingKind::PairOfPants;
  if (wants_puncture != op.new_puncture.has_value())
    throw Error(ErrorCode::InvalidOp,
                std::string(to_string(op.kind)) +
                    (wants_puncture ? " gluing needs a new puncture"
                                    : " gluing adds no puncture"));
  if (sig.genus == 0 && op.kind == GluingKind::PairOfPants)
    throw Error(ErrorCode::Unsupported,
                "pants gluing would give a planar stage with two boundaries");

  std::vector<std::string> fresh = op.new_boundaries;
  if (op.new_puncture) fresh.push_back(*op.new_puncture);
  for (std::size_t i = 0; i < fresh.size(); ++i) {
    if (!is_valid_label(fresh[i]))
      throw Error(ErrorCode::InvalidLabel, "bad label '" + fresh[i] + "'");
    if (sig.has_label(fresh[i]) ||
        std::find(fresh.begin(), fresh.begin() + i, fresh[i]) != fresh.begin() + i)
      throw Error(ErrorCode::LabelCollision,
                  "fresh label '" + fresh[i] + "' already in use");
  }

  SurfaceSig out = sig;
  auto at = out.boundaries.erase(out.boundaries.begin() + (pos - sig.boundaries.begin()));
  out.boundaries.insert(at, op.new_boundaries.begin(), op.new_boundaries.end());
  if (op.new_puncture) out.punctures.push_back(*op.new_puncture);
  return out;
}

std::vector<SurfaceSig> validate_exhaustion(const Exhaustion& exh) {
  exh.base.validate();
  std::vector<SurfaceSig> stages{exh.base};
  stages.reserve(exh.ops.size() + 1);
  for (std::size_t i = 0; i < exh.ops.size(); ++i) {
    try {
      stages.push_back(apply_gluing(stages.back(), exh.ops[i]));
    } catch (const Error& e) {
      throw Error(e.code(), "op " + std::to_string(i) + ": " + e.detail(), i);
    }
  }
  return stages;
}

std::string flute_puncture(std::size_t index) { return std::to_string(index); }

std::string flute_boundary(std::size_t index) {
  return "∂" + std::to_string(index);
}

std::optional<std::size_t> flute_index(std::string_view label) {
  if (label.empty() || label[0] == '0') return std::nullopt;
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(label.data(), label.data() + label.size(), value);
  if (ec != std::errc{} || ptr != label.data() + label.size()) return std::nullopt;
  return value;
}

Exhaustion flute_exhaustion(std::size_t depth) {
  Exhaustion exh;
  exh.base = SurfaceSig{0, {"a", "b"}, {flute_boundary(0)}};
  exh.ops.reserve(depth);
  for (std::size_t k = 1; k <= depth; ++k)
    exh.ops.push_back(GluingOp::annulus(flute_boundary(k - 1), flute_boundary(k),
                                        flute_puncture(k)));
  return exh;
}

bool is_flute(const Exhaustion& exh) {
  if (exh.base != flute_exhaustion(0).base) return false;
  std::string boundary = flute_boundary(0);
  for (std::size_t k = 0; k < exh.ops.size(); ++k) {
    const auto& op = exh.ops[k];
    if (op.kind != GluingKind::PuncturedAnnulus || op.target != boundary ||
        op.new_puncture != flute_puncture(k + 1) || op.new_boundaries.size() != 1)
      return false;
    boundary = op.new_boundaries[0];
  }
  return true;
}

std::map<std::string, std::size_t> label_births(const Exhaustion& exh) {
  std::map<std::string, std::size_t> births;
  for (const auto& l : exh.base.punctures) births.emplace(l, 0);
  for (const auto& l : exh.base.boundaries) births.emplace(l, 0);
  for (std::size_t i = 0; i < exh.ops.size(); ++i) {
    const auto& op = exh.ops[i];
    if (op.new_puncture) births.emplace(*op.new_puncture, i + 1);
    for (const auto& l : op.new_boundaries) births.emplace(l, i + 1);
  }
  return births;
}

HomologyClass curve_twist_class(const PlanarCurve& curve,
                                const SurfaceSig& stage) {
  if (stage.genus != 0)
    throw Error(ErrorCode::WrongGenus, "planar curves live on genus-0 stages");
  if (stage.boundaries.size() != 1)
    throw Error(ErrorCode::Unsupported, "planar curves need a disk stage");
  for (const auto& p : curve.enclosed)
    if (!stage.has_puncture(p))
      throw Error(ErrorCode::UnknownPuncture, "stage has no puncture '" + p + "'");

  HomologyClass out;
  for (auto i = curve.enclosed.begin(); i != curve.enclosed.end(); ++i)
    for (auto j = std::next(i); j != curve.enclosed.end(); ++j)
      out.add(Symbol::pair(*i, *j), 1);
  return out;
}

bool curve_meets(const PlanarCurve& curve,
                 const std::vector<std::string>& inner) {
  std::size_t inside = 0;
  for (const auto& p : inner) inside += curve.enclosed.count(p);
  return inside > 0 && inside < inner.size();
}

}  // namespace mcgh
