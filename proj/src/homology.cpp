#include "mcgh/homology.hpp"

#include <algorithm>

#include "mcgh/error.hpp"

namespace mcgh {

namespace {

constexpr Int kStarMultiplier = 3;
constexpr Int kTauTorsion = 12;

using Group = std::vector<std::string>;

HomologyClass twelve_tau() { return HomologyClass::of(Symbol::tau(), kTauTorsion); }

std::optional<Symbol> group_twist(const Group& g) { return enclosing_twist(g); }

Group merged(const Group& x, const Group& y) {
  Group out = x;
  out.insert(out.end(), y.begin(), y.end());
  return out;
}

// Literal unwinding of the induction on the number of boundary curves.
void derive(const std::vector<Group>& curves, std::vector<DerivationStep>& out) {
  const std::size_t m = curves.size();
  if (m == 0) {
    out.push_back({StarConfig::genus_one(), 1, "fully degenerate star"});
    return;
  }
  if (m == 1) {
    out.push_back({StarConfig::genus_one(group_twist(curves[0])), 1,
                   "doubly degenerate star"});
    return;
  }
  if (m == 2) {
    out.push_back({StarConfig::genus_one(group_twist(curves[0]),
                                         group_twist(curves[1])),
                   1, "degenerate star"});
    return;
  }
  const Group& last = curves[m - 1];
  const Group& second_last = curves[m - 2];
  Group peeled = merged(second_last, last);

  std::vector<Group> smaller(curves.begin(), curves.end() - 2);
  Group rest;
  for (const auto& g : smaller) rest = merged(rest, g);
  smaller.push_back(peeled);
  derive(smaller, out);

  // Pants identity: the curve around the peeled pair equals the sum of the
  // two twists it splits into, from two stars sharing the complementary
  // curve.
  out.push_back({StarConfig::genus_one(group_twist(rest), group_twist(peeled)),
                 -1, "pants identity, degenerate side"});
  out.push_back({StarConfig::genus_one(group_twist(rest), group_twist(second_last),
                                       group_twist(last)),
                 1, "pants identity, split side"});
}

// Drop pairs of steps whose relations agree and whose coefficients cancel.
void cancel_opposites(std::vector<DerivationStep>& steps) {
  std::vector<bool> dead(steps.size(), false);
  for (std::size_t i = 0; i < steps.size(); ++i) {
    if (dead[i]) continue;
    auto ri = star_relation_abelianized(steps[i].star);
    for (std::size_t j = i + 1; j < steps.size(); ++j) {
      if (dead[j] || steps[i].coefficient != -steps[j].coefficient) continue;
      if (star_relation_abelianized(steps[j].star) == ri) {
        dead[i] = dead[j] = true;
        break;
      }
    }
  }
  std::vector<DerivationStep> kept;
  for (std::size_t i = 0; i < steps.size(); ++i)
    if (!dead[i]) kept.push_back(std::move(steps[i]));
  steps = std::move(kept);
}

}  // namespace

bool H1Presentation::in_basis(const Symbol& s) const {
  return std::find(basis.begin(), basis.end(), s) != basis.end();
}

bool H1Presentation::knows(const Symbol& s) const {
  return std::find(extended.begin(), extended.end(), s) != extended.end();
}

HomologyClass H1Presentation::reduce(const HomologyClass& c) const {
  HomologyClass out;
  for (const auto& [s, k] : c.terms()) {
    if (!knows(s))
      throw Error(ErrorCode::BasisMismatch, "symbol " + s.str() + " not in presentation");
    if (omitted && s == *omitted) {
      // omitted = 12 tau - (sum of the other boundary twists)
      out.add(Symbol::tau(), checked_mul(k, kTauTorsion));
      for (const auto& b : basis)
        if (b.kind() == Symbol::Kind::Boundary) out.add(b, checked_neg(k));
    } else {
      out.add(s, k);
    }
  }
  if (torsion) {
    Int t = out.coefficient(Symbol::tau());
    out.erase(Symbol::tau());
    out.add(Symbol::tau(), mod_floor(t, *torsion));
  }
  return out;
}

H1Presentation h1_presentation(const SurfaceSig& sig) {
  sig.validate();
  H1Presentation p;
  p.genus = sig.genus;
  if (sig.genus == 0) {
    if (sig.boundaries.size() != 1)
      throw Error(ErrorCode::Unsupported,
                  "planar stages must be disks with punctures");
    for (std::size_t i = 0; i < sig.punctures.size(); ++i)
      for (std::size_t j = i + 1; j < sig.punctures.size(); ++j)
        p.basis.push_back(Symbol::pair(sig.punctures[i], sig.punctures[j]));
    p.extended = p.basis;
    return p;
  }

  p.basis.push_back(Symbol::tau());
  p.extended.push_back(Symbol::tau());
  Relation boundary_sum{twelve_tau(), {}};
  if (sig.boundaries.empty()) {
    p.torsion = kTauTorsion;
  } else {
    const auto& last = *std::max_element(sig.boundaries.begin(), sig.boundaries.end());
    p.omitted = Symbol::boundary(last);
    for (const auto& l : sig.boundaries) {
      auto s = Symbol::boundary(l);
      p.extended.push_back(s);
      boundary_sum.rhs.add(s, 1);
      if (l != last) p.basis.push_back(s);
    }
  }
  p.relations.push_back(std::move(boundary_sum));
  return p;
}

StarConfig StarConfig::genus_one(std::optional<Symbol> d1,
                                 std::optional<Symbol> d2,
                                 std::optional<Symbol> d3) {
  StarConfig cfg;
  cfg.d1 = std::move(d1);
  cfg.d2 = std::move(d2);
  cfg.d3 = std::move(d3);
  return cfg;
}

std::size_t StarConfig::trivial_count() const {
  return std::size_t{!d1} + std::size_t{!d2} + std::size_t{!d3};
}

Relation star_relation_abelianized(const StarConfig& cfg) {
  // The group word is (T_c1 T_c2 T_c3 T_b)^3; each letter contributes once
  // per repetition.
  Relation r;
  for (const auto* s : {&cfg.c1, &cfg.c2, &cfg.c3, &cfg.b}) r.lhs.add(*s, kStarMultiplier);
  for (const auto* d : {&cfg.d1, &cfg.d2, &cfg.d3})
    if (*d) r.rhs.add(**d, 1);
  return r;
}

std::optional<Symbol> enclosing_twist(std::vector<std::string> boundaries) {
  if (boundaries.empty()) return std::nullopt;
  if (boundaries.size() == 1) return Symbol::boundary(std::move(boundaries[0]));
  return Symbol::separating(std::move(boundaries));
}

BoundarySumDerivation boundary_sum_relation(const SurfaceSig& sig) {
  sig.validate();
  if (sig.genus != 1)
    throw Error(ErrorCode::WrongGenus, "boundary sum relation needs genus one");
  std::vector<Group> curves;
  for (const auto& l : sig.boundaries) curves.push_back({l});

  BoundarySumDerivation out;
  derive(curves, out.steps);
  cancel_opposites(out.steps);

  out.relation.lhs = twelve_tau();
  for (const auto& l : sig.boundaries) out.relation.rhs.add(Symbol::boundary(l), 1);
  return out;
}

HomologyClass fold_derivation(std::span<const DerivationStep> steps) {
  HomologyClass total;
  for (const auto& step : steps)
    total += step.coefficient * star_relation_abelianized(step.star).as_class();
  return total;
}

TransitionMap transition_map(const SurfaceSig& sig, const GluingOp& op) {
  SurfaceSig next = apply_gluing(sig, op);
  TransitionMap t;
  t.source = h1_presentation(sig);
  t.target = h1_presentation(next);
  t.kind = op.kind;
  t.affected = op.target;

  if (sig.genus == 0) {
    for (const auto& s : t.source.basis) t.extended_rules.emplace(s, HomologyClass::of(s));
  } else {
    t.extended_rules.emplace(Symbol::tau(), HomologyClass::of(Symbol::tau()));
    for (const auto& l : sig.boundaries) {
      HomologyClass image;
      if (l != op.target) {
        image.add(Symbol::boundary(l), 1);
      } else {
        // disk: killed; annulus: homologous to the new boundary;
        // pants: sum of the two new boundaries.
        for (const auto& fresh : op.new_boundaries) image.add(Symbol::boundary(fresh), 1);
      }
      t.extended_rules.emplace(Symbol::boundary(l), std::move(image));
    }
  }
  for (const auto& s : t.source.basis)
    t.rules.emplace(s, t.target.reduce(t.extended_rules.at(s)));
  return t;
}

HomologyClass push_forward_raw(const HomologyClass& c, const TransitionMap& t) {
  HomologyClass out;
  for (const auto& [s, k] : c.terms()) {
    auto it = t.extended_rules.find(s);
    if (it == t.extended_rules.end())
      throw Error(ErrorCode::BasisMismatch, "symbol " + s.str() + " not in source presentation");
    out += k * it->second;
  }
  return out;
}

HomologyClass push_forward(const HomologyClass& c, const TransitionMap& t) {
  HomologyClass out;
  for (const auto& [s, k] : c.terms()) {
    if (auto it = t.rules.find(s); it != t.rules.end()) {
      out += k * it->second;
    } else if (auto ext = t.extended_rules.find(s); ext != t.extended_rules.end()) {
      out += k * ext->second;
    } else {
      throw Error(ErrorCode::BasisMismatch, "symbol " + s.str() + " not in source presentation");
    }
  }
  return t.target.reduce(out);
}

}  // namespace mcgh
