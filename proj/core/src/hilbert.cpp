#include "glprover/hilbert.hpp"

#include <array>
#include <map>

namespace glprover {

namespace {

const std::array<Formula, kSchemaCount>& patterns() {
  static const std::array<Formula, kSchemaCount> table = {
      parse("p --> q --> p"),
      parse("(p --> q --> r) --> (p --> q) --> p --> r"),
      parse("((p --> False) --> False) --> p"),
      parse("(p <-> q) --> p --> q"),
      parse("(p <-> q) --> q --> p"),
      parse("(p --> q) --> (q --> p) --> (p <-> q)"),
      parse("True <-> False --> False"),
      parse("Not p <-> p --> False"),
      parse("p && q <-> (p --> q --> False) --> False"),
      parse("p || q <-> Not (Not p && Not q)"),
      parse("Box (p --> q) --> Box p --> Box q"),
      parse("Box (Box p --> p) --> Box p"),
  };
  return table;
}

using Bindings = std::map<std::string, Formula>;

bool match(const Formula& pattern, const Formula& f, Bindings& env) {
  if (pattern.is(Kind::Atom)) {
    auto [it, fresh] = env.emplace(pattern.name(), f);
    return fresh || it->second == f;
  }
  if (pattern.kind() != f.kind()) return false;
  if (pattern.is_leaf()) return true;
  if (!match(pattern.lhs(), f.lhs(), env)) return false;
  return !pattern.is_binary() || match(pattern.rhs(), f.rhs(), env);
}

}  // namespace

const Formula& schema_pattern(int id) { return patterns().at(static_cast<std::size_t>(id - 1)); }

bool instantiates(int id, const Formula& f) {
  if (id < 1 || id > kSchemaCount) return false;
  Bindings env;
  return match(schema_pattern(id), f, env);
}

std::optional<int> match_axiom(const Formula& f) {
  for (int id = 1; id <= kSchemaCount; ++id) {
    if (instantiates(id, f)) return id;
  }
  return std::nullopt;
}

HilbertStep HilbertStep::axiom(int schema, Formula f) {
  return {Kind::Axiom, schema, {}, std::move(f)};
}

HilbertStep HilbertStep::modus_ponens(std::size_t major, std::size_t minor, Formula f) {
  return {Kind::ModusPonens, 0, {major, minor}, std::move(f)};
}

HilbertStep HilbertStep::necessitation(std::size_t premise, Formula f) {
  return {Kind::Necessitation, 0, {premise}, std::move(f)};
}

ProofCheck check_proof(const HilbertProof& pf) {
  auto reject = [](std::size_t i, std::string why) {
    return ProofCheck{std::nullopt, i, "step " + std::to_string(i) + ": " + std::move(why)};
  };
  if (pf.steps.empty()) return ProofCheck{std::nullopt, std::nullopt, "empty proof"};

  for (std::size_t i = 0; i < pf.steps.size(); ++i) {
    const HilbertStep& s = pf.steps[i];
    for (std::size_t r : s.refs) {
      if (r >= i) return reject(i, "reference " + std::to_string(r) + " is not an earlier step");
    }
    switch (s.kind) {
      case HilbertStep::Kind::Axiom:
        if (!s.refs.empty()) return reject(i, "axiom step takes no references");
        if (!instantiates(s.schema, s.formula)) {
          return reject(i, "not an instance of schema " + std::to_string(s.schema));
        }
        break;
      case HilbertStep::Kind::ModusPonens: {
        if (s.refs.size() != 2) return reject(i, "modus ponens needs two references");
        const Formula& major = pf.steps[s.refs[0]].formula;
        const Formula& minor = pf.steps[s.refs[1]].formula;
        if (!major.is(Kind::Imp)) return reject(i, "major premise is not an implication");
        if (major.lhs() != minor) return reject(i, "minor premise does not match the antecedent");
        if (major.rhs() != s.formula) return reject(i, "conclusion is not the consequent");
        break;
      }
      case HilbertStep::Kind::Necessitation:
        if (s.refs.size() != 1) return reject(i, "necessitation needs one reference");
        if (Formula::box(pf.steps[s.refs[0]].formula) != s.formula) {
          return reject(i, "conclusion is not the boxed premise");
        }
        break;
    }
  }
  return ProofCheck{pf.steps.back().formula, std::nullopt, {}};
}

Formula conjlist(std::span<const Formula> fs) {
  if (fs.empty()) return Formula::verum();
  if (fs.size() == 1) return fs.front();
  return Formula::conj(fs.front(), conjlist(fs.subspan(1)));
}

HilbertProof proof_of_self_implication(const Formula& p) {
  using F = Formula;
  const F pp = F::imp(p, p);
  const F p_pp = F::imp(p, pp);
  const F p_pp_p = F::imp(p, F::imp(pp, p));
  HilbertProof pf;
  pf.steps.push_back(HilbertStep::axiom(2, F::imp(p_pp_p, F::imp(p_pp, pp))));
  pf.steps.push_back(HilbertStep::axiom(1, p_pp_p));
  pf.steps.push_back(HilbertStep::modus_ponens(0, 1, F::imp(p_pp, pp)));
  pf.steps.push_back(HilbertStep::axiom(1, p_pp));
  pf.steps.push_back(HilbertStep::modus_ponens(2, 3, pp));
  return pf;
}

HilbertProof proof_of_verum() {
  using F = Formula;
  const F bot_bot = F::imp(F::falsum(), F::falsum());
  HilbertProof pf = proof_of_self_implication(F::falsum());
  const std::size_t self = pf.steps.size() - 1;
  const F def = F::iff(F::verum(), bot_bot);
  pf.steps.push_back(HilbertStep::axiom(5, F::imp(def, F::imp(bot_bot, F::verum()))));
  pf.steps.push_back(HilbertStep::axiom(7, def));
  pf.steps.push_back(HilbertStep::modus_ponens(self + 1, self + 2, F::imp(bot_bot, F::verum())));
  pf.steps.push_back(HilbertStep::modus_ponens(self + 3, self, F::verum()));
  return pf;
}

}  // namespace glprover
