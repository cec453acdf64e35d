#include <random>

#include "doctest.h"
#include "mcgh/error.hpp"
#include "mcgh/homology.hpp"
#include "mcgh/surface.hpp"

using namespace mcgh;

namespace {

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return ErrorCode::Usage;
}

}  // namespace

TEST_CASE("apply_gluing: the three gluing kinds") {
  SurfaceSig torus{1, {}, {"b0"}};
  CHECK(apply_gluing(torus, GluingOp::pants("b0", "b1", "b2")) == SurfaceSig{1, {}, {"b1", "b2"}});

  SurfaceSig s{1, {"p1"}, {"b1", "b2"}};
  CHECK(apply_gluing(s, GluingOp::annulus("b1", "b1'", "p2")) ==
        SurfaceSig{1, {"p1", "p2"}, {"b1'", "b2"}});

  SurfaceSig disk_target{1, {}, {"b1"}};
  CHECK(apply_gluing(disk_target, GluingOp::disk("b1", "p1")) == SurfaceSig{1, {"p1"}, {}});
}

TEST_CASE("apply_gluing: errors") {
  SurfaceSig s{1, {"p"}, {"x", "y"}};
  CHECK(code_of([&] { apply_gluing(s, GluingOp::disk("z", "q")); }) == ErrorCode::UnknownBoundary);
  CHECK(code_of([&] { apply_gluing(s, GluingOp::annulus("x", "y", "q")); }) == ErrorCode::LabelCollision);
  CHECK(code_of([&] { apply_gluing(s, GluingOp::disk("x", "p")); }) == ErrorCode::LabelCollision);
  CHECK(code_of([&] { apply_gluing(s, GluingOp::pants("x", "u", "u")); }) == ErrorCode::LabelCollision);

  GluingOp bad_arity = GluingOp::pants("x", "u", "v");
  bad_arity.new_boundaries.pop_back();
  CHECK(code_of([&] { apply_gluing(s, bad_arity); }) == ErrorCode::InvalidOp);

  SurfaceSig disk{0, {"a", "b"}, {"d"}};
  CHECK(code_of([&] { apply_gluing(disk, GluingOp::pants("d", "u", "v")); }) == ErrorCode::Unsupported);
}

TEST_CASE("validate_exhaustion") {
  auto flute = flute_exhaustion(3);
  auto stages = validate_exhaustion(flute);
  REQUIRE(stages.size() == 4);
  for (std::size_t k = 0; k < stages.size(); ++k) CHECK(stages[k].punctures.size() == k + 2);

  Exhaustion bad{SurfaceSig{1, {}, {"b"}}, {GluingOp::disk("nope", "p")}};
  try {
    validate_exhaustion(bad);
    FAIL("expected failure");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UnknownBoundary);
    CHECK(e.index() == 0);
  }

  Exhaustion empty{SurfaceSig{1, {}, {"b"}}, {}};
  CHECK(validate_exhaustion(empty) == std::vector<SurfaceSig>{empty.base});
}

TEST_CASE("flute_exhaustion") {
  auto stages = validate_exhaustion(flute_exhaustion(0));
  REQUIRE(stages.size() == 1);
  CHECK(stages[0].punctures == std::vector<std::string>{"a", "b"});
  CHECK(stages[0].boundaries.size() == 1);

  stages = validate_exhaustion(flute_exhaustion(2));
  CHECK(stages[1].punctures == std::vector<std::string>{"a", "b", "1"});
  CHECK(stages[2].punctures == std::vector<std::string>{"a", "b", "1", "2"});

  CHECK(validate_exhaustion(flute_exhaustion(1)).back().boundaries.size() == 1);

  for (std::size_t d : {0u, 5u, 20u}) {
    auto all = validate_exhaustion(flute_exhaustion(d));
    CHECK(all.back().punctures.size() == d + 2);
    CHECK(all.back().boundaries.size() == 1);
  }
  CHECK(is_flute(flute_exhaustion(7)));
  auto tampered = flute_exhaustion(3);
  tampered.ops[1].new_puncture = "9";
  CHECK_FALSE(is_flute(tampered));
}

TEST_CASE("gluing bookkeeping holds on random exhaustions") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    Exhaustion exh{SurfaceSig{1, {}, {"b0"}}, {}};
    SurfaceSig cur = exh.base;
    int fresh = 1;
    for (int k = 0; k < 15 && !cur.boundaries.empty(); ++k) {
      const auto& target = cur.boundaries[rng() % cur.boundaries.size()];
      GluingOp op;
      switch (rng() % 3) {
        case 0: op = GluingOp::disk(target, "p" + std::to_string(fresh++)); break;
        case 1: op = GluingOp::annulus(target, "b" + std::to_string(fresh), "p" + std::to_string(fresh)); ++fresh; break;
        default: op = GluingOp::pants(target, "b" + std::to_string(fresh), "b" + std::to_string(fresh + 1)); fresh += 2;
      }
      auto next = apply_gluing(cur, op);
      long db = static_cast<long>(next.boundaries.size()) - static_cast<long>(cur.boundaries.size());
      long dp = static_cast<long>(next.punctures.size()) - static_cast<long>(cur.punctures.size());
      switch (op.kind) {
        case GluingKind::PuncturedDisk: CHECK(db == -1); CHECK(dp == 1); break;
        case GluingKind::PuncturedAnnulus: CHECK(db == 0); CHECK(dp == 1); break;
        case GluingKind::PairOfPants: CHECK(db == 1); CHECK(dp == 0); break;
      }
      CHECK(next.genus == 1);
      exh.ops.push_back(op);
      cur = next;
    }
    CHECK(validate_exhaustion(exh).back() == cur);
  }
}

TEST_CASE("curve_twist_class") {
  auto stage = validate_exhaustion(flute_exhaustion(3)).back();
  CHECK(curve_twist_class({{"a", "1"}}, stage) == HomologyClass::of(Symbol::pair("a", "1")));

  HomologyClass abc = HomologyClass::of(Symbol::pair("a", "b")) +
                      HomologyClass::of(Symbol::pair("a", "1")) +
                      HomologyClass::of(Symbol::pair("b", "1"));
  CHECK(curve_twist_class({{"a", "b", "1"}}, stage) == abc);

  // Boundary-parallel curve: every pair once.
  PlanarCurve all{{stage.punctures.begin(), stage.punctures.end()}};
  auto c = curve_twist_class(all, stage);
  CHECK(c.terms().size() == 10);
  for (const auto& [s, k] : c.terms()) CHECK(k == 1);

  CHECK(curve_twist_class({{}}, stage).is_zero());
  CHECK(curve_twist_class({{"2"}}, stage).is_zero());

  CHECK(code_of([&] { curve_twist_class({{"a", "9"}}, stage); }) == ErrorCode::UnknownPuncture);
  CHECK(code_of([&] { curve_twist_class({{"a"}}, SurfaceSig{1, {"a"}, {"x"}}); }) == ErrorCode::WrongGenus);
}

TEST_CASE("curve_twist_class is monotone and pairs give basis vectors") {
  auto stage = validate_exhaustion(flute_exhaustion(6)).back();
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    PlanarCurve small, large;
    for (const auto& p : stage.punctures) {
      auto r = rng() % 3;
      if (r == 0) small.enclosed.insert(p);
      if (r <= 1) large.enclosed.insert(p);
    }
    auto cs = curve_twist_class(small, stage);
    auto cl = curve_twist_class(large, stage);
    for (const auto& [s, k] : cs.terms()) CHECK(cl.coefficient(s) != 0);
  }
  auto basis = h1_presentation(stage).basis;
  for (const auto& s : basis)
    CHECK(curve_twist_class({{s.labels()[0], s.labels()[1]}}, stage) == HomologyClass::of(s));
}

TEST_CASE("curve_meets") {
  std::vector<std::string> k0{"a", "b"};
  CHECK(curve_meets({{"a", "1"}}, k0));
  CHECK_FALSE(curve_meets({{"1", "2"}}, k0));
  CHECK_FALSE(curve_meets({{"a", "b", "1"}}, k0));
}

TEST_CASE("label_births") {
  auto births = label_births(flute_exhaustion(3));
  CHECK(births.at("a") == 0);
  CHECK(births.at("3") == 3);
  CHECK(births.at(flute_boundary(2)) == 2);
}

TEST_CASE("signature validation") {
  CHECK(code_of([] { SurfaceSig{2, {}, {}}.validate(); }) == ErrorCode::InvalidSurface);
  CHECK(code_of([] { SurfaceSig{1, {"x"}, {"x"}}.validate(); }) == ErrorCode::LabelCollision);
  CHECK(code_of([] { SurfaceSig{0, {}, {"u", "v"}}.validate(); }) == ErrorCode::Unsupported);
  CHECK(code_of([] { SurfaceSig{1, {"a:b"}, {}}.validate(); }) == ErrorCode::InvalidLabel);
  CHECK_NOTHROW(SurfaceSig{0, {"a", "b"}, {}}.validate());
}
