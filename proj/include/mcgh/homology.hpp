#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mcgh/homology_class.hpp"
#include "mcgh/surface.hpp"

namespace mcgh {

// lhs = rhs in H_1.
struct Relation {
  HomologyClass lhs;
  HomologyClass rhs;

  HomologyClass as_class() const { return lhs - rhs; }
  std::string str() const { return lhs.str() + " = " + rhs.str(); }
  bool operator==(const Relation&) const = default;
};

// First homology of the pure mapping class group of a finite-type stage.
//
// Genus one with m > 0 boundaries: free on tau and m-1 boundary twists, the
// lexicographically last boundary label being omitted. The relation
// 12 tau = sum of all m boundary twists is kept explicitly so the omitted
// twist can always be rewritten; `reduce` performs that rewriting.
//
// Genus one without boundary: Z/12 generated by tau.
//
// Genus zero disk with n punctures: free on the n(n-1)/2 pair twists.
struct H1Presentation {
  int genus = 0;
  std::vector<Symbol> basis;
  std::vector<Symbol> extended;  // every symbol a class may mention
  std::optional<Symbol> omitted;
  std::optional<Int> torsion;    // modulus of the tau coordinate
  std::vector<Relation> relations;

  std::size_t free_rank() const { return torsion ? 0 : basis.size(); }
  bool in_basis(const Symbol& s) const;
  bool knows(const Symbol& s) const;

  // Normal form over the basis. Throws BasisMismatch on foreign symbols.
  HomologyClass reduce(const HomologyClass& c) const;
  bool is_zero(const HomologyClass& c) const { return reduce(c).is_zero(); }
};

H1Presentation h1_presentation(const SurfaceSig& sig);

// Curves of a star relation: the interior curves c1, c2, c3, b and the
// boundary curves d1, d2, d3. Null-homotopic d's are nullopt.
struct StarConfig {
  Symbol c1 = Symbol::tau();
  Symbol c2 = Symbol::tau();
  Symbol c3 = Symbol::tau();
  Symbol b = Symbol::tau();
  std::optional<Symbol> d1, d2, d3;

  static StarConfig genus_one(std::optional<Symbol> d1 = std::nullopt,
                              std::optional<Symbol> d2 = std::nullopt,
                              std::optional<Symbol> d3 = std::nullopt);
  std::size_t trivial_count() const;
  bool operator==(const StarConfig&) const = default;
};

// 3(c1 + c2 + c3 + b) = sum of the nontrivial d's.
Relation star_relation_abelianized(const StarConfig& cfg);

struct DerivationStep {
  StarConfig star;
  Int coefficient = 1;
  std::string note;
};

struct BoundarySumDerivation {
  Relation relation;
  std::vector<DerivationStep> steps;
};

// 12 tau = sum of all boundary twists, built by peeling off the last two
// boundaries behind a separating curve and applying the pants identity.
BoundarySumDerivation boundary_sum_relation(const SurfaceSig& sig);

// Sum over steps of coefficient * (lhs - rhs).
HomologyClass fold_derivation(std::span<const DerivationStep> steps);

// Twist about a curve cutting off exactly the given boundaries: nullopt for
// none, the boundary twist for one, a separating symbol otherwise.
std::optional<Symbol> enclosing_twist(std::vector<std::string> boundaries);

// Induced map H_1(P_n) -> H_1(P_{n+1}) for one gluing.
struct TransitionMap {
  H1Presentation source;
  H1Presentation target;
  GluingKind kind = GluingKind::PuncturedAnnulus;
  std::string affected;
  // Image of each source basis symbol, reduced over the target basis.
  std::map<Symbol, HomologyClass> rules;
  // Unreduced image of every source symbol, including the omitted one.
  std::map<Symbol, HomologyClass> extended_rules;
};

TransitionMap transition_map(const SurfaceSig& sig, const GluingOp& op);

// Linear extension of the extended rules; the result is not reduced.
HomologyClass push_forward_raw(const HomologyClass& c, const TransitionMap& t);

// Linear extension of the rules, reduced over the target basis.
HomologyClass push_forward(const HomologyClass& c, const TransitionMap& t);

}  // namespace mcgh
