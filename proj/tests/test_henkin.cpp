#include <doctest.h>

#include <algorithm>

#include "glprover/error.hpp"
#include "glprover/henkin.hpp"
#include "support/generators.hpp"

using namespace glprover;
using F = Formula;

namespace {

const F a = F::atom("a");
const F box_false = F::box(F::falsum());

bool is_subsequence(const FormulaList& xs, const FormulaList& ys) {
  auto it = ys.begin();
  for (const auto& x : xs) {
    it = std::find(it, ys.end(), x);
    if (it == ys.end()) return false;
    ++it;
  }
  return true;
}

}  // namespace

TEST_CASE("consistency") {
  CHECK(consistent({}));
  CHECK_FALSE(consistent({a, F::neg(a)}));
  CHECK_FALSE(consistent({F::falsum()}));
  CHECK(consistent({a, F::box(F::neg(a))}));
  CHECK_FALSE(consistent({parse("Box (Box a --> a)"), F::neg(F::box(a))}));
}

TEST_CASE("maximal extension") {
  const auto m = extend_maximal_consistent(a, {});
  CHECK((m == FormulaList{a} || m == FormulaList{F::neg(a)}));

  const F refl = parse("Box a --> a");
  const auto w = extend_maximal_consistent(refl, {F::neg(refl)});
  CHECK(std::find(w.begin(), w.end(), F::neg(refl)) != w.end());
  CHECK(is_maximal_consistent(refl, w));

  CHECK_THROWS_AS(extend_maximal_consistent(a, {F::atom("b")}), PreconditionError);
  CHECK_THROWS_AS(extend_maximal_consistent(a, {a, F::neg(a)}), PreconditionError);
}

TEST_CASE("maximality predicate") {
  CHECK_FALSE(is_maximal_consistent(a, {}));
  CHECK_FALSE(is_maximal_consistent(a, {a, F::neg(a)}));
  CHECK_FALSE(is_maximal_consistent(a, {a, a}));
  CHECK(is_maximal_consistent(a, {F::neg(a)}));
}

TEST_CASE("extension properties over random targets") {
  testing::FormulaGen gen(31, {2, 5, 2});
  for (int i = 0; i < 60; ++i) {
    const F p = gen.any();
    INFO(to_string(p));
    const FormulaList start = provable(p) ? FormulaList{} : FormulaList{F::neg(p)};
    const auto m = extend_maximal_consistent(p, start);
    CHECK(is_maximal_consistent(p, m));
    CHECK(is_subsequence(start, m));
    CHECK(m.size() <= subformulas(p).size() + start.size());
    const auto subs = subsentences(p);
    for (const auto& x : m) CHECK(subs.contains(x));
  }
}

TEST_CASE("standard relation") {
  const FormulaList lo = {F::neg(F::falsum()), box_false};
  const FormulaList hi = {F::neg(F::falsum()), F::neg(box_false)};
  CHECK(gl_standard_rel(box_false, hi, lo));
  CHECK_FALSE(gl_standard_rel(box_false, lo, hi));
  CHECK_FALSE(gl_standard_rel(box_false, hi, hi));
  CHECK_FALSE(gl_standard_rel(box_false, lo, lo));
  CHECK_FALSE(gl_standard_rel(box_false, hi, {box_false}));
}

TEST_CASE("standard model for Box False") {
  const auto res = build_standard_model(box_false);
  REQUIRE(res.has_value());
  const StandardModel& sm = res->standard;
  CHECK(sm.worlds.size() == 2);
  CHECK(is_itf(sm.model.frame));
  CHECK(sm.model.frame.rel.size() == 1);
  CHECK_FALSE(holds(sm.model, box_false, res->world));
  const auto& w = sm.worlds[res->world];
  CHECK(std::find(w.begin(), w.end(), F::neg(box_false)) != w.end());
  CHECK(truth_lemma_check(box_false, sm));
}

TEST_CASE("theorems have no standard countermodel") {
  CHECK_FALSE(build_standard_model(parse("Box (Box p --> p) --> Box p")).has_value());
  CHECK_FALSE(build_standard_model(parse("Box (Box False --> False) --> Box False")).has_value());
  CHECK_FALSE(build_standard_model(F::verum()).has_value());
}

TEST_CASE("reflection principle via the standard model") {
  const F f = parse("Box (Box p || Box (Not p)) --> (Box p || Box (Not p))");
  const auto res = build_standard_model(f);
  REQUIRE(res.has_value());
  CHECK_FALSE(holds(res->standard.model, f, res->world));
  CHECK(std::holds_alternative<Refuted>(search(f)));
}

TEST_CASE("truth lemma detects a flipped atom") {
  const F f = parse("p --> Box p");
  const auto res = build_standard_model(f);
  REQUIRE(res.has_value());
  StandardModel sm = res->standard;
  CHECK(truth_lemma_check(f, sm));
  auto& pset = sm.model.val["p"];
  if (pset.contains(0)) {
    pset.erase(0);
  } else {
    pset.insert(0);
  }
  CHECK_FALSE(truth_lemma_check(f, sm));
}

TEST_CASE("box-free targets are bivalent") {
  const F f = parse("(p --> q) || (q && Not p)");
  const auto res = build_standard_model(f);
  REQUIRE(res.has_value());
  CHECK(res->standard.model.frame.rel.empty());
  CHECK(truth_lemma_check(f, res->standard));
}

TEST_CASE("budget") {
  HenkinOptions opts;
  opts.max_assignments = 8;
  CHECK_THROWS_AS(build_standard_model(parse("Box p --> Box q --> p"), opts), BudgetExceeded);
}

TEST_CASE("agreement with the sequent search") {
  std::size_t checked = 0;
  for (const auto& f : testing::desk_corpus()) {
    if (subformulas(f).size() > 6) continue;
    ++checked;
    INFO(to_string(f));
    const auto res = build_standard_model(f);
    CHECK(res.has_value() == !provable(f));
    if (res) {
      const StandardModel& sm = res->standard;
      CHECK(is_itf(sm.model.frame));
      CHECK(truth_lemma_check(f, sm));
      CHECK_FALSE(holds(sm.model, f, res->world));
      for (const auto& [x, y] : sm.model.frame.rel) {
        CHECK(gl_standard_rel(f, sm.worlds[x], sm.worlds[y]));
      }
    }
  }
  CHECK(checked >= 20);
}
