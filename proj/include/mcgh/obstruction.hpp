#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "mcgh/homs.hpp"

namespace mcgh {

// Completes a genus-one basis assignment to every boundary twist using
// 12 f(tau) = sum f(boundaries).
Assignment forced_values(const Assignment& partial, const SurfaceSig& sig);

enum class TraceOutcome { EscapingWitness, CappedContradiction, ZeroConsistent };

std::string_view to_string(TraceOutcome outcome);  // "escaping" | "capped" | "zero"

struct TraceStep {
  std::size_t stage;
  std::string boundary;
  Int value;
  std::string op;  // seed, annulus, pants, disk, or idle:<kind>
};

struct WitnessEntry {
  std::size_t stage;
  std::string boundary;
  Int value;
};

struct ObstructionTrace {
  std::size_t seed_stage = 0;
  Assignment seed;
  Assignment completed;  // after sign normalisation
  int sign = 1;
  std::vector<TraceStep> steps;
  TraceOutcome outcome = TraceOutcome::ZeroConsistent;
  // Boundaries the tracked value is handed to; the seed boundary is steps[0].
  std::vector<WitnessEntry> witness;
  std::optional<WitnessEntry> capped;
  // Stage of the last gluing onto the tracked boundary, when the trace ends
  // on a boundary the exhaustion has stopped touching.
  std::optional<std::size_t> stalled_since;
  std::vector<std::string> notes;
};

// Follows a nonzero boundary twist along the exhaustion: capping it is a
// contradiction, annuli and pants hand its positive value to a new boundary.
ObstructionTrace trace_obstruction(const Assignment& seed, const Exhaustion& exh,
                                   std::size_t depth, std::size_t seed_stage = 0);

// The cochain the trace follows: seed values carried forward (pants give the
// whole value to the first child) and restricted backward. Throws
// RelationViolation if a gluing caps a boundary with a nonzero value.
HomSpec minimal_extension(const Assignment& seed, const Exhaustion& exh,
                          std::size_t depth, std::size_t seed_stage = 0);

}  // namespace mcgh
