#include <deque>
#include <random>

#include "doctest.h"
#include "mcgh/error.hpp"
#include "mcgh/obstruction.hpp"

using namespace mcgh;

namespace {

Symbol bd(const std::string& l) { return Symbol::boundary(l); }

Exhaustion annuli(std::size_t depth) {
  Exhaustion exh{SurfaceSig{1, {}, {"x0"}}, {}};
  for (std::size_t k = 1; k <= depth; ++k)
    exh.ops.push_back(GluingOp::annulus("x" + std::to_string(k - 1), "x" + std::to_string(k),
                                        "p" + std::to_string(k)));
  return exh;
}

// Glues onto the oldest open boundary each time, so every boundary is
// eventually consumed.
Exhaustion fifo(SurfaceSig base, std::size_t depth, std::mt19937_64& rng) {
  Exhaustion exh{base, {}};
  std::deque<std::string> open(base.boundaries.begin(), base.boundaries.end());
  std::size_t fresh = 0;
  auto next = [&] { return "y" + std::to_string(fresh++); };
  for (std::size_t k = 0; k < depth; ++k) {
    auto target = open.front();
    open.pop_front();
    if (rng() % 2) {
      auto n = next();
      exh.ops.push_back(GluingOp::annulus(target, n, "q" + std::to_string(k)));
      open.push_back(n);
    } else {
      auto n1 = next(), n2 = next();
      exh.ops.push_back(GluingOp::pants(target, n1, n2));
      open.push_back(n1);
      open.push_back(n2);
    }
  }
  return exh;
}

}  // namespace

TEST_CASE("forced_values") {
  SurfaceSig two{1, {}, {"b1", "b2"}};
  auto f = forced_values({{Symbol::tau(), 1}, {bd("b1"), 0}}, two);
  CHECK(f == Assignment{{Symbol::tau(), 1}, {bd("b2"), 12}});
  CHECK(forced_values({{Symbol::tau(), 0}, {bd("b1"), 0}}, two).empty());

  SurfaceSig three{1, {}, {"b1", "b2", "b3"}};
  auto g = forced_values({{Symbol::tau(), 1}, {bd("b1"), 5}, {bd("b2"), 7}}, three);
  CHECK(g.count(bd("b3")) == 0);
  CHECK(g.at(bd("b1")) == 5);

  CHECK(forced_values({{Symbol::tau(), 1}, {bd("b1"), 5}, {bd("b2"), 7}, {bd("b3"), 0}}, three).size() == 3);
  try {
    forced_values({{Symbol::tau(), 1}, {bd("b1"), 5}, {bd("b2"), 7}, {bd("b3"), 1}}, three);
    FAIL("expected RelationViolation");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::RelationViolation);
  }
  try {
    forced_values({}, SurfaceSig{0, {"a"}, {"d"}});
    FAIL("expected WrongGenus");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::WrongGenus);
  }
  try {
    forced_values({{Symbol::tau(), 1}}, two);
    FAIL("expected IncompleteAssignment");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::IncompleteAssignment);
  }
  CHECK_THROWS_AS(forced_values({{Symbol::tau(), 1}, {bd("zz"), 0}}, two), Error);

  SurfaceSig closed{1, {}, {}};
  CHECK(forced_values({{Symbol::tau(), 0}}, closed).empty());
  CHECK_THROWS_AS(forced_values({{Symbol::tau(), 1}}, closed), Error);
}

TEST_CASE("trace along punctured annuli") {
  auto exh = annuli(30);
  auto t = trace_obstruction({{Symbol::tau(), 1}}, exh, 30);
  CHECK(t.outcome == TraceOutcome::EscapingWitness);
  CHECK(t.sign == 1);
  REQUIRE(t.witness.size() == 30);
  for (std::size_t k = 0; k < 30; ++k) {
    CHECK(t.witness[k].value == 12);
    CHECK(t.witness[k].stage == k + 1);
    CHECK(t.witness[k].boundary == "x" + std::to_string(k + 1));
  }
  REQUIRE(t.steps.size() == 31);
  CHECK(t.steps[0].op == "seed");
  CHECK(t.steps[0].boundary == "x0");
  CHECK(t.steps[5].op == "annulus");
  CHECK_FALSE(t.stalled_since);
  CHECK(to_string(t.outcome) == "escaping");
}

TEST_CASE("trace capped by a disk") {
  Exhaustion exh{SurfaceSig{1, {}, {"x0"}}, {GluingOp::disk("x0", "p")}};
  auto t = trace_obstruction({{Symbol::tau(), 1}}, exh, 1);
  CHECK(t.outcome == TraceOutcome::CappedContradiction);
  REQUIRE(t.capped);
  CHECK(t.capped->stage == 1);
  CHECK(t.capped->boundary == "x0");
  CHECK(t.witness.empty());
  CHECK(to_string(t.outcome) == "capped");
}

TEST_CASE("zero seed") {
  auto t = trace_obstruction({{Symbol::tau(), 0}}, annuli(5), 5);
  CHECK(t.outcome == TraceOutcome::ZeroConsistent);
  CHECK(t.steps.empty());
  CHECK(t.witness.empty());
  CHECK(to_string(t.outcome) == "zero");
}

TEST_CASE("sign normalisation and tie-breaking") {
  Exhaustion exh{SurfaceSig{1, {}, {"u", "v", "w"}}, {GluingOp::annulus("v", "v2", "p")}};
  // f(u) = 0, f(v) = -3, f(tau) = 0 forces f(w) = 3; v is the least nonzero.
  auto t = trace_obstruction({{Symbol::tau(), 0}, {bd("u"), 0}, {bd("v"), -3}}, exh, 1);
  CHECK(t.sign == -1);
  CHECK(t.completed.at(bd("v")) == 3);
  CHECK(t.completed.at(bd("w")) == -3);
  REQUIRE(t.witness.size() == 1);
  CHECK(t.witness[0].boundary == "v2");
  CHECK(t.witness[0].value == 3);
  CHECK_FALSE(t.notes.empty());
}

TEST_CASE("pants follow the first child") {
  Exhaustion exh{SurfaceSig{1, {}, {"x"}}, {GluingOp::pants("x", "l", "r"), GluingOp::annulus("r", "r2", "p"),
                                             GluingOp::annulus("l", "l2", "q")}};
  auto t = trace_obstruction({{Symbol::tau(), 2}}, exh, 3);
  CHECK(t.outcome == TraceOutcome::EscapingWitness);
  REQUIRE(t.witness.size() == 2);
  CHECK(t.witness[0].boundary == "l");
  CHECK(t.witness[1].boundary == "l2");
  CHECK(t.witness[1].value == 24);
  CHECK(t.steps[2].op == "idle:annulus");
  CHECK(t.steps[1].op == "pants");
}

TEST_CASE("relation violations and errors") {
  SurfaceSig sig{1, {}, {"x", "y"}};
  Exhaustion exh{sig, {}};
  CHECK_THROWS_AS(trace_obstruction({{Symbol::tau(), 1}, {bd("x"), 1}, {bd("y"), 1}}, exh, 0), Error);
  CHECK_THROWS_AS(trace_obstruction({{Symbol::tau(), 1}}, annuli(2), 3), Error);

  Exhaustion capped{SurfaceSig{1, {}, {"x0"}}, {GluingOp::disk("x0", "p")}};
  try {
    minimal_extension({{Symbol::tau(), 1}}, capped, 1);
    FAIL("expected RelationViolation");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::RelationViolation);
  }
}

TEST_CASE("stalled boundary diagnostic") {
  Exhaustion exh{SurfaceSig{1, {}, {"x", "y"}},
                 {GluingOp::annulus("x", "x1", "p"), GluingOp::annulus("y", "y1", "q"),
                  GluingOp::annulus("y1", "y2", "r")}};
  auto t = trace_obstruction({{Symbol::tau(), 1}, {bd("x"), 1}}, exh, 3);
  CHECK(t.outcome == TraceOutcome::EscapingWitness);
  REQUIRE(t.stalled_since);
  CHECK(*t.stalled_since == 1);
  REQUIRE(t.witness.size() == 1);
  CHECK(t.witness[0].boundary == "x1");
}

TEST_CASE("random seeds on fair exhaustions") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t m = 1 + rng() % 3;
    SurfaceSig base{1, {}, {}};
    for (std::size_t i = 0; i < m; ++i) base.boundaries.push_back("c" + std::to_string(i));
    auto p = h1_presentation(base);
    Assignment seed;
    for (const auto& s : p.basis) seed[s] = static_cast<Int>(rng() % 11) - 5;
    auto exh = fifo(base, 12, rng);
    auto t = trace_obstruction(seed, exh, 12);
    bool zero = forced_values(seed, base).empty();
    CHECK((t.outcome == TraceOutcome::ZeroConsistent) == zero);
    if (zero) continue;
    REQUIRE(t.outcome == TraceOutcome::EscapingWitness);
    for (const auto& w : t.witness) CHECK(w.value > 0);

    // The minimal extension realises the trace and its support escapes.
    auto ext = minimal_extension(seed, exh, 12);
    CHECK(check_consistency(ext, exh, 12).ok());
    // The extension carries the seed's own sign.
    const auto& w = t.witness.empty() ? WitnessEntry{0, t.steps[0].boundary, t.steps[0].value} : t.witness.back();
    CHECK(ext.value(12, bd(w.boundary)) == t.sign * w.value);
    CHECK(escaping_support(ext, exh, 12).escaping);
  }
}
