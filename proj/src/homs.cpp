#include "mcgh/homs.hpp"

#include <algorithm>

#include "mcgh/error.hpp"

namespace mcgh {

namespace {

std::size_t symbol_level(const Symbol& s, const std::map<std::string, std::size_t>& births) {
  if (s.kind() == Symbol::Kind::Tau) return 0;
  std::size_t level = SIZE_MAX;
  for (const auto& l : s.labels()) {
    auto it = births.find(l);
    level = std::min(level, it == births.end() ? SIZE_MAX : it->second);
  }
  return level;
}

void require_prefix(const HomSpec& h, const Exhaustion& exh, std::size_t depth) {
  if (depth > h.depth())
    throw Error(ErrorCode::InsufficientStages,
                "cochain defined to depth " + std::to_string(h.depth()) +
                    ", asked for " + std::to_string(depth));
  if (exh.ops.size() < depth || exh.base != h.domain().base ||
      !std::equal(exh.ops.begin(), exh.ops.begin() + depth, h.domain().ops.begin()))
    throw Error(ErrorCode::WrongExhaustion, "exhaustion differs from the cochain's domain");
}

}  // namespace

bool SubsetSpec::contains(Int i) const {
  bool listed = members.count(i) > 0;
  return mode == Mode::ListedInA ? listed : !listed;
}

HomSpec::HomSpec(Exhaustion domain, std::vector<Assignment> assignments)
    : domain_(std::move(domain)) {
  auto sigs = validate_exhaustion(domain_);
  if (assignments.empty()) assignments.emplace_back();
  if (assignments.size() > sigs.size())
    throw Error(ErrorCode::InsufficientStages,
                std::to_string(assignments.size()) + " stage assignments for an exhaustion with " +
                    std::to_string(sigs.size()) + " stages");
  stages_.reserve(assignments.size());
  for (std::size_t n = 0; n < assignments.size(); ++n) {
    Stage st{sigs[n], h1_presentation(sigs[n]), {}};
    for (const auto& [s, v] : assignments[n]) {
      if (!st.presentation.knows(s))
        throw Error(ErrorCode::BasisMismatch,
                    "stage " + std::to_string(n) + " has no symbol " + s.str(), n);
      if (v != 0) st.values.emplace(s, v);
    }
    stages_.push_back(std::move(st));
  }
}

const HomSpec::Stage& HomSpec::stage(std::size_t n) const {
  if (n >= stages_.size())
    throw Error(ErrorCode::InsufficientStages,
                "no stage " + std::to_string(n) + " (depth " + std::to_string(depth()) + ")");
  return stages_[n];
}

Int HomSpec::value(std::size_t n, const Symbol& s) const {
  const Stage& st = stage(n);
  if (!st.presentation.knows(s))
    throw Error(ErrorCode::BasisMismatch, "stage " + std::to_string(n) + " has no symbol " + s.str());
  if (auto it = st.values.find(s); it != st.values.end()) return it->second;
  if (st.presentation.omitted && s == *st.presentation.omitted)
    return eval_on_class(*this, HomologyClass::of(s), n);
  return 0;
}

Assignment HomSpec::completed(std::size_t n) const {
  Assignment out;
  for (const auto& s : stage(n).presentation.extended)
    if (Int v = value(n, s); v != 0) out.emplace(s, v);
  return out;
}

HomSpec zero_hom(const Exhaustion& exh, std::size_t depth) {
  if (depth > exh.ops.size())
    throw Error(ErrorCode::InsufficientStages, "exhaustion shorter than requested depth");
  return HomSpec(exh, std::vector<Assignment>(depth + 1));
}

HomSpec make_phi(const SubsetSpec& subset, const Exhaustion& exh) {
  if (subset.mode != SubsetSpec::Mode::ListedInA)
    throw Error(ErrorCode::InfiniteComplementViolation,
                "A given by a finite complement; the family needs A with infinite complement");
  for (Int m : subset.members)
    if (m < 1) throw Error(ErrorCode::ParseError, "members of A must be positive integers");
  if (!is_flute(exh))
    throw Error(ErrorCode::WrongExhaustion, "phi_A is defined on the flute exhaustion");

  auto sigs = validate_exhaustion(exh);
  std::vector<Assignment> stages;
  stages.reserve(sigs.size());
  Assignment current;
  for (std::size_t n = 0; n < sigs.size(); ++n) {
    if (n > 0) {
      // Stage n adds puncture n; only its pairs with a and b can be nonzero.
      auto i = static_cast<Int>(n);
      if (!subset.contains(i)) {
        current.emplace(Symbol::pair("a", flute_puncture(n)), 1);
        current.emplace(Symbol::pair("b", flute_puncture(n)), -1);
      }
    }
    stages.push_back(current);
  }
  return HomSpec(exh, std::move(stages));
}

Int eval_on_class(const HomSpec& h, const HomologyClass& c, std::size_t stage) {
  const auto& st = h.stage(stage);
  HomologyClass reduced = st.presentation.reduce(c);
  Int total = 0;
  for (const auto& [s, k] : reduced.terms()) {
    auto it = st.values.find(s);
    if (it != st.values.end()) total = checked_add(total, checked_mul(k, it->second));
  }
  return total;
}

Int eval_on_twist_word(const HomSpec& h, const TwistWord& w) {
  const auto& sig = h.stage(w.stage).sig;
  HomologyClass c;
  for (const auto& [curve, exponent] : w.letters) c += exponent * curve_twist_class(curve, sig);
  return eval_on_class(h, c, w.stage);
}

ConsistencyVerdict check_consistency(const HomSpec& h, const Exhaustion& exh,
                                     std::size_t depth) {
  require_prefix(h, exh, depth);
  ConsistencyVerdict verdict;
  for (std::size_t n = 0; n <= depth; ++n) {
    const auto& st = h.stage(n);
    for (const auto& r : st.presentation.relations) {
      Int lhs = 0, rhs = 0;
      for (const auto& [s, k] : r.lhs.terms()) lhs = checked_add(lhs, checked_mul(k, h.value(n, s)));
      for (const auto& [s, k] : r.rhs.terms()) rhs = checked_add(rhs, checked_mul(k, h.value(n, s)));
      if (lhs != rhs) {
        verdict.relation_failure = RelationFailure{n, r, lhs, rhs};
        return verdict;
      }
    }
    if (n == depth) break;
    auto tmap = transition_map(st.sig, exh.ops[n]);
    for (const auto& s : st.presentation.basis) {
      Int here = h.value(n, s);
      Int there = eval_on_class(h, push_forward(HomologyClass::of(s), tmap), n + 1);
      if (here != there) {
        verdict.violation = ConsistencyViolation{n, s, here, there};
        return verdict;
      }
    }
  }
  return verdict;
}

SupportReport escaping_support(const HomSpec& h, const Exhaustion& exh, std::size_t depth) {
  require_prefix(h, exh, depth);
  auto births = label_births(exh);
  SupportReport report;
  std::vector<SupportEntry> record;  // first symbol reaching each new level
  std::size_t best = 0;
  bool any = false;
  for (std::size_t n = 0; n <= depth; ++n) {
    std::size_t stage_anchor = 0;
    for (const auto& [s, v] : h.completed(n)) {
      std::size_t level = symbol_level(s, births);
      stage_anchor = std::max(stage_anchor, level);
      if (!any || level > best) {
        record.push_back({n, s, level, v});
        best = level;
        any = true;
      }
    }
    report.stage_anchors.push_back(stage_anchor);
    report.anchor = std::max(report.anchor, stage_anchor);
  }
  report.escaping = report.stage_anchors[depth] > report.stage_anchors[depth / 2];
  if (report.escaping) report.escaping_family = std::move(record);
  return report;
}

ProductReport eval_truncated_infinite_product(const HomSpec& h,
                                              std::span<const StagedCurve> curves,
                                              bool require_escape) {
  const auto& base = h.domain().base.punctures;
  ProductReport report;
  std::optional<std::size_t> last_nonzero;
  for (std::size_t i = 0; i < curves.size(); ++i) {
    const auto& [curve, stage] = curves[i];
    Int v = eval_on_class(h, curve_twist_class(curve, h.stage(stage).sig), stage);
    report.summands.push_back(v);
    report.value = checked_add(report.value, v);
    report.partial_sums.push_back(report.value);
    if (v != 0) last_nonzero = i;
    if (curve_meets(curve, base)) {
      report.last_meeting_base = i;
      ++report.meeting_base_count;
    }
  }
  report.stabilization_index = last_nonzero.value_or(0);
  report.stabilized = !last_nonzero || *last_nonzero + 1 < curves.size();
  if (require_escape && report.last_meeting_base &&
      *report.last_meeting_base + 1 == curves.size())
    throw Error(ErrorCode::NotEscaping,
                "curve " + std::to_string(curves.size() - 1) +
                    " still meets the base stage; the prefix has not left it",
                curves.size() - 1);
  return report;
}

FactorReport factors_through_forgetful(const HomSpec& h, const std::set<std::string>& kept) {
  FactorReport report;
  for (std::size_t n = 0; n <= h.depth(); ++n) {
    const auto& st = h.stage(n);
    if (st.sig.genus != 0)
      throw Error(ErrorCode::WrongGenus, "forgetful maps are analysed on planar stages");
    for (const auto& s : st.presentation.basis) {
      bool forgotten = std::any_of(s.labels().begin(), s.labels().end(),
                                   [&](const std::string& l) { return !kept.count(l); });
      if (!forgotten) continue;
      if (Int v = h.value(n, s); v != 0) {
        report.factors = false;
        report.witness = SupportEntry{n, s, n, v};
        return report;
      }
    }
  }
  return report;
}

}  // namespace mcgh
