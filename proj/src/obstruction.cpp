#include "mcgh/obstruction.hpp"

#include <algorithm>

#include "mcgh/error.hpp"

namespace mcgh {

namespace {

constexpr Int kTauTorsion = 12;

// Full values over tau and every boundary of the next stage. Pants hand the
// whole value to the first child.
Assignment carry_forward(const Assignment& full, const GluingOp& op, std::size_t stage) {
  Assignment next;
  for (const auto& [s, v] : full) {
    if (s.kind() != Symbol::Kind::Boundary || s.labels()[0] != op.target) {
      next.emplace(s, v);
      continue;
    }
    if (op.kind == GluingKind::PuncturedDisk)
      throw Error(ErrorCode::RelationViolation,
                  "stage " + std::to_string(stage) + " caps " + s.str() +
                      " which carries value " + std::to_string(v),
                  stage);
    next.emplace(Symbol::boundary(op.new_boundaries[0]), v);
  }
  return next;
}

Assignment basis_part(const Assignment& full, const H1Presentation& p) {
  Assignment out;
  for (const auto& [s, v] : full)
    if (p.in_basis(s)) out.emplace(s, v);
  return out;
}

Int eval_assignment(const Assignment& basis_values, const HomologyClass& reduced) {
  Int total = 0;
  for (const auto& [s, k] : reduced.terms())
    if (auto it = basis_values.find(s); it != basis_values.end())
      total = checked_add(total, checked_mul(k, it->second));
  return total;
}

}  // namespace

std::string_view to_string(TraceOutcome outcome) {
  switch (outcome) {
    case TraceOutcome::EscapingWitness: return "escaping";
    case TraceOutcome::CappedContradiction: return "capped";
    case TraceOutcome::ZeroConsistent: return "zero";
  }
  return {};
}

Assignment forced_values(const Assignment& partial, const SurfaceSig& sig) {
  if (sig.genus != 1) throw Error(ErrorCode::WrongGenus, "forced values need a genus-one stage");
  auto p = h1_presentation(sig);
  for (const auto& [s, v] : partial)
    if (!p.knows(s)) throw Error(ErrorCode::BasisMismatch, "stage has no symbol " + s.str());
  Assignment full;
  for (const auto& s : p.basis) {
    auto it = partial.find(s);
    if (it == partial.end())
      throw Error(ErrorCode::IncompleteAssignment, "no value for basis symbol " + s.str());
    if (it->second != 0) full.emplace(s, it->second);
  }
  Int tau = partial.at(Symbol::tau());
  if (!p.omitted) {
    if (checked_mul(kTauTorsion, tau) != 0)
      throw Error(ErrorCode::RelationViolation, "12 f(tau) must vanish without boundary");
    return full;
  }
  Int forced = checked_mul(kTauTorsion, tau);
  for (const auto& s : p.basis)
    if (s.kind() == Symbol::Kind::Boundary) forced = checked_sub(forced, partial.at(s));
  if (auto it = partial.find(*p.omitted); it != partial.end() && it->second != forced)
    throw Error(ErrorCode::RelationViolation,
                "f(" + p.omitted->str() + ") = " + std::to_string(it->second) +
                    " but 12 f(tau) - (other boundaries) = " + std::to_string(forced));
  if (forced != 0) full.emplace(*p.omitted, forced);
  return full;
}

ObstructionTrace trace_obstruction(const Assignment& seed, const Exhaustion& exh,
                                   std::size_t depth, std::size_t seed_stage) {
  auto stages = validate_exhaustion(exh);
  if (depth >= stages.size())
    throw Error(ErrorCode::InsufficientStages,
                "exhaustion has " + std::to_string(exh.ops.size()) + " ops, depth " +
                    std::to_string(depth) + " requested");
  if (seed_stage > depth)
    throw Error(ErrorCode::Usage, "seed stage beyond depth");

  ObstructionTrace trace;
  trace.seed_stage = seed_stage;
  trace.seed = seed;
  Assignment full = forced_values(seed, stages[seed_stage]);
  if (full.empty()) {
    trace.outcome = TraceOutcome::ZeroConsistent;
    return trace;
  }

  // Least boundary label carrying a nonzero value; one exists because
  // 12 f(tau) equals the boundary sum.
  std::optional<std::string> tracked;
  for (const auto& l : stages[seed_stage].boundaries) {
    auto it = full.find(Symbol::boundary(l));
    if (it != full.end() && (!tracked || l < *tracked)) tracked = l;
  }
  if (!tracked)
    throw Error(ErrorCode::RelationViolation, "nonzero seed with no nonzero boundary twist");
  if (full.at(Symbol::boundary(*tracked)) < 0) {
    trace.sign = -1;
    for (auto& [s, v] : full) v = checked_neg(v);
    trace.notes.push_back("seed negated so the tracked twist is positive");
  }
  trace.completed = full;

  const Int value = full.at(Symbol::boundary(*tracked));
  trace.steps.push_back({seed_stage, *tracked, value, "seed"});
  std::size_t last_touch = seed_stage;
  trace.outcome = TraceOutcome::EscapingWitness;

  for (std::size_t k = seed_stage; k < depth; ++k) {
    const auto& op = exh.ops[k];
    const std::size_t stage = k + 1;
    if (op.target != *tracked) {
      trace.steps.push_back({stage, *tracked, value, "idle:" + std::string(to_string(op.kind))});
      continue;
    }
    if (op.kind == GluingKind::PuncturedDisk) {
      trace.steps.push_back({stage, *tracked, value, "disk"});
      trace.capped = WitnessEntry{stage, *tracked, value};
      trace.outcome = TraceOutcome::CappedContradiction;
      trace.witness.clear();
      return trace;
    }
    if (op.kind == GluingKind::PairOfPants)
      trace.notes.push_back("stage " + std::to_string(stage) + ": " + *tracked + " splits into " +
                            op.new_boundaries[0] + " + " + op.new_boundaries[1] +
                            "; minimal extension puts the whole value on " +
                            op.new_boundaries[0]);
    tracked = op.new_boundaries[0];
    trace.steps.push_back({stage, *tracked, value, std::string(to_string(op.kind))});
    trace.witness.push_back({stage, *tracked, value});
    last_touch = stage;
  }
  if (last_touch < depth) trace.stalled_since = last_touch;
  return trace;
}

HomSpec minimal_extension(const Assignment& seed, const Exhaustion& exh,
                          std::size_t depth, std::size_t seed_stage) {
  auto stages = validate_exhaustion(exh);
  if (depth >= stages.size())
    throw Error(ErrorCode::InsufficientStages, "exhaustion shorter than requested depth");
  if (seed_stage > depth) throw Error(ErrorCode::Usage, "seed stage beyond depth");

  std::vector<Assignment> values(depth + 1);
  Assignment full = forced_values(seed, stages[seed_stage]);
  values[seed_stage] = basis_part(full, h1_presentation(stages[seed_stage]));
  for (std::size_t k = seed_stage; k < depth; ++k) {
    full = carry_forward(full, exh.ops[k], k + 1);
    values[k + 1] = basis_part(full, h1_presentation(stages[k + 1]));
  }
  // Earlier stages get the restriction along the transition maps.
  for (std::size_t k = seed_stage; k-- > 0;) {
    auto tmap = transition_map(stages[k], exh.ops[k]);
    for (const auto& s : tmap.source.basis)
      if (Int v = eval_assignment(values[k + 1], tmap.rules.at(s)); v != 0) values[k].emplace(s, v);
  }
  return HomSpec(exh, std::move(values));
}

}  // namespace mcgh
