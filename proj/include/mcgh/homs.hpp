#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "mcgh/homology.hpp"
#include "mcgh/surface.hpp"

namespace mcgh {

using Assignment = std::map<Symbol, Int>;

// Finite description of a set A of positive integers: either A itself
// (finite, so its complement is infinite) or its complement.
struct SubsetSpec {
  enum class Mode { ListedInA, ListedOutOfA };
  Mode mode = Mode::ListedInA;
  std::set<Int> members;

  bool contains(Int i) const;
};

// A cochain on every stage 0..depth of an exhaustion. Each stage stores
// values on (a subset of) its extended symbols; unlisted basis symbols are
// zero and the omitted genus-one boundary twist is forced through
// 12 f(tau) = sum f(boundaries) unless listed explicitly.
class HomSpec {
 public:
  struct Stage {
    SurfaceSig sig;
    H1Presentation presentation;
    Assignment values;
  };

  HomSpec(Exhaustion domain, std::vector<Assignment> assignments);

  const Exhaustion& domain() const noexcept { return domain_; }
  std::size_t depth() const noexcept { return stages_.size() - 1; }
  const Stage& stage(std::size_t n) const;

  Int value(std::size_t n, const Symbol& s) const;
  // Values on every extended symbol of stage n, zeros dropped.
  Assignment completed(std::size_t n) const;

 private:
  Exhaustion domain_;
  std::vector<Stage> stages_;
};

HomSpec zero_hom(const Exhaustion& exh, std::size_t depth);

// e_ab -> 0, e_ai -> 1 and e_bi -> -1 for i outside A, everything else 0.
HomSpec make_phi(const SubsetSpec& subset, const Exhaustion& exh);

Int eval_on_class(const HomSpec& h, const HomologyClass& c, std::size_t stage);

struct TwistWord {
  std::size_t stage = 0;
  std::vector<std::pair<PlanarCurve, Int>> letters;
};

Int eval_on_twist_word(const HomSpec& h, const TwistWord& w);

struct ConsistencyViolation {
  std::size_t stage;  // the restriction from stage + 1 to stage fails
  Symbol symbol;
  Int lhs;            // value at `stage`
  Int rhs;            // value of the pushed-forward class at `stage + 1`
};

struct RelationFailure {
  std::size_t stage;
  Relation relation;
  Int lhs;
  Int rhs;
};

struct ConsistencyVerdict {
  std::optional<ConsistencyViolation> violation;
  std::optional<RelationFailure> relation_failure;
  bool ok() const { return !violation && !relation_failure; }
};

ConsistencyVerdict check_consistency(const HomSpec& h, const Exhaustion& exh,
                                     std::size_t depth);

struct SupportEntry {
  std::size_t stage;
  Symbol symbol;
  std::size_t level;  // earliest stage containing one of its labels
  Int value;
};

// `anchor` is the least k such that every nonzero twist up to `depth`
// touches stage k. A finite prefix cannot certify a support, so the family
// is reported as escaping when the anchor at `depth` still exceeds the
// anchor at depth / 2.
struct SupportReport {
  std::size_t anchor = 0;
  std::vector<std::size_t> stage_anchors;
  bool escaping = false;
  std::vector<SupportEntry> escaping_family;
};

SupportReport escaping_support(const HomSpec& h, const Exhaustion& exh,
                               std::size_t depth);

struct StagedCurve {
  PlanarCurve curve;
  std::size_t stage = 0;
};

struct ProductReport {
  Int value = 0;
  std::vector<Int> summands;
  std::vector<Int> partial_sums;
  // Index of the last nonzero summand (0 if none): every later summand is 0.
  std::size_t stabilization_index = 0;
  // False when the prefix ends on a nonzero summand, i.e. nothing about the
  // tail is certified.
  bool stabilized = true;
  std::optional<std::size_t> last_meeting_base;
  std::size_t meeting_base_count = 0;
};

// Partial sums of h over a prefix of an infinite product of twists. With
// `require_escape` a prefix whose final curve still meets stage 0 raises
// NotEscaping; otherwise non-escaping prefixes are only reported.
ProductReport eval_truncated_infinite_product(const HomSpec& h,
                                              std::span<const StagedCurve> curves,
                                              bool require_escape = false);

struct FactorReport {
  bool factors = true;
  std::optional<SupportEntry> witness;
};

FactorReport factors_through_forgetful(const HomSpec& h,
                                       const std::set<std::string>& kept);

}  // namespace mcgh
