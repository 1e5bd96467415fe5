#include <doctest.h>

#include "glprover/hilbert.hpp"
#include "glprover/semantics.hpp"
#include "support/generators.hpp"

using namespace glprover;
using F = Formula;

namespace {

const F p = F::atom("p");
const F q = F::atom("q");

HilbertProof prefix(const HilbertProof& pf, std::size_t n) {
  return {{pf.steps.begin(), pf.steps.begin() + static_cast<std::ptrdiff_t>(n)}};
}

}  // namespace

TEST_CASE("match_axiom returns the least schema") {
  CHECK(match_axiom(F::imp(p, F::imp(q, p))) == 1);
  CHECK(match_axiom(F::iff(F::verum(), F::imp(F::falsum(), F::falsum()))) == 7);
  CHECK_FALSE(match_axiom(p).has_value());
  CHECK(match_axiom(parse("Box (Box False --> False) --> Box False")) == 12);
  CHECK(match_axiom(parse("Box (p && q --> r) --> Box (p && q) --> Box r")) == 11);
  // Metavariables bind consistently.
  CHECK_FALSE(match_axiom(parse("p --> q --> q")).has_value());
  for (int id = 1; id <= kSchemaCount; ++id) {
    CHECK(instantiates(id, schema_pattern(id)));
    CHECK(match_axiom(schema_pattern(id)).value() <= id);
  }
  CHECK_FALSE(instantiates(0, p));
  CHECK_FALSE(instantiates(13, p));
}

TEST_CASE("axiom instances are valid on small ITF frames") {
  testing::FormulaGen gen(17, {3, 12, 3});
  for (int i = 0; i < 150; ++i) {
    const F f = gen.axiom_instance();
    INFO(to_string(f));
    REQUIRE(match_axiom(f).has_value());
    CHECK(std::holds_alternative<ValidUpTo>(oracle_valid(f, 3)));
  }
}

TEST_CASE("shipped proofs are accepted") {
  const auto verum = check_proof(proof_of_verum());
  REQUIRE(verum);
  CHECK(*verum.conclusion == F::verum());

  const auto self = check_proof(proof_of_self_implication(F::box(q)));
  REQUIRE(self);
  CHECK(*self.conclusion == F::imp(F::box(q), F::box(q)));
  CHECK(proof_of_self_implication(p).steps.size() == 5);

  const F lob_false = parse("Box (Box False --> False) --> Box False");
  const auto lob = check_proof({{HilbertStep::axiom(12, lob_false)}});
  REQUIRE(lob);
  CHECK(*lob.conclusion == lob_false);

  const F k = parse("Box (p --> q) --> Box p --> Box q");
  CHECK(check_proof({{HilbertStep::axiom(11, k)}}));
}

TEST_CASE("necessitation and modus ponens") {
  HilbertProof pf = proof_of_self_implication(p);
  pf.steps.push_back(HilbertStep::necessitation(4, F::box(F::imp(p, p))));
  CHECK(check_proof(pf));
  pf.steps.push_back(HilbertStep::necessitation(4, F::imp(p, p)));
  const auto bad = check_proof(pf);
  CHECK_FALSE(bad);
  CHECK(bad.failed_step == 6);
}

TEST_CASE("bad proofs report the first offending step") {
  CHECK_FALSE(check_proof({}));
  CHECK(check_proof({{HilbertStep::axiom(2, F::imp(p, F::imp(q, p)))}}).failed_step == 0);
  CHECK(check_proof({{HilbertStep::modus_ponens(0, 1, p)}}).failed_step == 0);

  HilbertProof forward = proof_of_verum();
  forward.steps[2].refs = {5, 1};
  CHECK(check_proof(forward).failed_step == 2);

  HilbertProof out_of_range = proof_of_verum();
  out_of_range.steps.back().refs = {99, 0};
  CHECK(check_proof(out_of_range).failed_step == out_of_range.steps.size() - 1);
}

TEST_CASE("replacing any formula by a fresh atom breaks the proof") {
  for (const HilbertProof& pf : {proof_of_verum(), proof_of_self_implication(p)}) {
    for (std::size_t i = 0; i < pf.steps.size(); ++i) {
      HilbertProof m = pf;
      m.steps[i].formula = F::atom("z");
      const auto res = check_proof(m);
      CHECK_FALSE(res);
      CHECK(res.failed_step.value() <= i + 1);
    }
  }
}

TEST_CASE("valid prefixes stay valid") {
  const HilbertProof pf = proof_of_verum();
  for (std::size_t n = 1; n <= pf.steps.size(); ++n) {
    const auto res = check_proof(prefix(pf, n));
    REQUIRE(res);
    CHECK(*res.conclusion == pf.steps[n - 1].formula);
  }
}

TEST_CASE("conjlist") {
  CHECK(conjlist({}) == F::verum());
  const std::vector<F> one = {p};
  CHECK(conjlist(one) == p);
  const F r = F::atom("r");
  const std::vector<F> three = {p, q, r};
  CHECK(conjlist(three) == F::conj(p, F::conj(q, r)));
}
