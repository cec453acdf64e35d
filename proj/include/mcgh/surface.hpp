#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "mcgh/homology_class.hpp"

namespace mcgh {

// Finite-type surface signature. Labels are opaque and persist across
// gluings; punctures and boundaries keep their insertion order.
//
// Genus-one signatures may have any number of boundaries. Genus-zero
// signatures are disks with punctures (one boundary) or, as the target of a
// forgetful map, punctured spheres (no boundary).
struct SurfaceSig {
  int genus = 0;
  std::vector<std::string> punctures;
  std::vector<std::string> boundaries;

  bool has_puncture(std::string_view label) const;
  bool has_boundary(std::string_view label) const;
  bool has_label(std::string_view label) const;

  // Throws InvalidSurface / InvalidLabel / LabelCollision.
  void validate() const;

  bool operator==(const SurfaceSig&) const = default;
};

enum class GluingKind { PuncturedDisk, PuncturedAnnulus, PairOfPants };

std::string_view to_string(GluingKind kind);  // "disk" | "annulus" | "pants"
GluingKind parse_gluing_kind(std::string_view text);

struct GluingOp {
  GluingKind kind = GluingKind::PuncturedAnnulus;
  std::string target;
  std::optional<std::string> new_puncture;
  std::vector<std::string> new_boundaries;

  static GluingOp disk(std::string target, std::string puncture);
  static GluingOp annulus(std::string target, std::string new_boundary,
                          std::string puncture);
  static GluingOp pants(std::string target, std::string first,
                        std::string second);

  bool operator==(const GluingOp&) const = default;
};

struct Exhaustion {
  SurfaceSig base;
  std::vector<GluingOp> ops;

  bool operator==(const Exhaustion&) const = default;
};

// A simple closed curve on a planar stage, recorded by the finite set of
// punctures on the side away from the boundary.
struct PlanarCurve {
  std::set<std::string> enclosed;

  bool operator==(const PlanarCurve&) const = default;
};

SurfaceSig apply_gluing(const SurfaceSig& sig, const GluingOp& op);

// Stage signatures sig_0 .. sig_k. Errors carry the failing op's index.
std::vector<SurfaceSig> validate_exhaustion(const Exhaustion& exh);

// Disk with punctures {a, b}, then `depth` punctured annuli adding
// punctures "1", "2", ... and boundaries "∂1", "∂2", ...
Exhaustion flute_exhaustion(std::size_t depth);

std::string flute_puncture(std::size_t index);
std::string flute_boundary(std::size_t index);

// Index i of a flute puncture label "i" (i >= 1), nullopt for "a", "b" or
// anything else.
std::optional<std::size_t> flute_index(std::string_view label);

// Structural check that `exh` is a (prefix of the) flute exhaustion.
bool is_flute(const Exhaustion& exh);

// Stage at which each label (puncture or boundary) first appears.
std::map<std::string, std::size_t> label_births(const Exhaustion& exh);

// Homology class of the twist about `curve`: the sum of the pair twists of
// all pairs of enclosed punctures.
HomologyClass curve_twist_class(const PlanarCurve& curve,
                                const SurfaceSig& stage);

// True when the planar curve cannot be isotoped off the subsurface whose
// punctures are `inner`: it encloses some but not all of them.
bool curve_meets(const PlanarCurve& curve,
                 const std::vector<std::string>& inner);

}  // namespace mcgh
