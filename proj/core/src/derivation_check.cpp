#include <sstream>

#include "glprover/sequent.hpp"

namespace glprover {

namespace {

struct Failure {
  std::string path;
  std::string what;
};

class Checker {
 public:
  std::optional<Failure> check(const Derivation& d, const std::string& path) {
    auto fail = [&](std::string what) {
      return Failure{path.empty() ? "root" : path,
                     std::string(rule_name(d.rule)) + ": " + std::move(what)};
    };
    const Sequent& s = d.sequent;
    if (d.premises.size() != rule_arity(d.rule)) {
      return fail("expected " + std::to_string(rule_arity(d.rule)) + " premises, found " +
                  std::to_string(d.premises.size()));
    }

    std::vector<Sequent> expected;
    const auto& pf = d.principal.formula;
    auto need_formula = [&](bool on_left, Kind k) -> std::optional<Failure> {
      if (!pf) return fail("missing principal formula");
      if (!pf->formula.is(k)) return fail("principal has the wrong connective");
      if (!(on_left ? s.left : s.right).contains(*pf)) {
        return fail(std::string("principal not in the ") + (on_left ? "antecedent" : "succedent"));
      }
      return std::nullopt;
    };

    switch (d.rule) {
      case Rule::Init:
        if (!pf) return fail("missing principal formula");
        if (!s.left.contains(*pf) || !s.right.contains(*pf)) {
          return fail("principal is not on both sides");
        }
        break;
      case Rule::LFalse:
        if (auto e = need_formula(true, Kind::Falsum)) return e;
        break;
      case Rule::RTrue:
        if (auto e = need_formula(false, Kind::Verum)) return e;
        break;
      case Rule::Irref:
        if (d.principal.atoms.size() != 1 || d.principal.atoms[0].first != d.principal.atoms[0].second ||
            !s.rel.contains(d.principal.atoms[0])) {
          return fail("principal is not a reflexive atom of the sequent");
        }
        break;
      case Rule::LAnd: {
        if (auto e = need_formula(true, Kind::And)) return e;
        Sequent p = s;
        p.left.erase(*pf);
        p.left.insert({pf->label, pf->formula.lhs()});
        p.left.insert({pf->label, pf->formula.rhs()});
        expected.push_back(std::move(p));
        break;
      }
      case Rule::ROr: {
        if (auto e = need_formula(false, Kind::Or)) return e;
        Sequent p = s;
        p.right.erase(*pf);
        p.right.insert({pf->label, pf->formula.lhs()});
        p.right.insert({pf->label, pf->formula.rhs()});
        expected.push_back(std::move(p));
        break;
      }
      case Rule::LNot: {
        if (auto e = need_formula(true, Kind::Not)) return e;
        Sequent p = s;
        p.left.erase(*pf);
        p.right.insert({pf->label, pf->formula.body()});
        expected.push_back(std::move(p));
        break;
      }
      case Rule::RNot: {
        if (auto e = need_formula(false, Kind::Not)) return e;
        Sequent p = s;
        p.right.erase(*pf);
        p.left.insert({pf->label, pf->formula.body()});
        expected.push_back(std::move(p));
        break;
      }
      case Rule::RImp: {
        if (auto e = need_formula(false, Kind::Imp)) return e;
        Sequent p = s;
        p.right.erase(*pf);
        p.left.insert({pf->label, pf->formula.lhs()});
        p.right.insert({pf->label, pf->formula.rhs()});
        expected.push_back(std::move(p));
        break;
      }
      case Rule::LIff: {
        if (auto e = need_formula(true, Kind::Iff)) return e;
        const Formula& a = pf->formula.lhs();
        const Formula& b = pf->formula.rhs();
        Sequent p = s;
        p.left.erase(*pf);
        p.left.insert({pf->label, Formula::imp(a, b)});
        p.left.insert({pf->label, Formula::imp(b, a)});
        expected.push_back(std::move(p));
        break;
      }
      case Rule::RAnd: {
        if (auto e = need_formula(false, Kind::And)) return e;
        Sequent p1 = s;
        p1.right.erase(*pf);
        Sequent p2 = p1;
        p1.right.insert({pf->label, pf->formula.lhs()});
        p2.right.insert({pf->label, pf->formula.rhs()});
        expected = {std::move(p1), std::move(p2)};
        break;
      }
      case Rule::LOr: {
        if (auto e = need_formula(true, Kind::Or)) return e;
        Sequent p1 = s;
        p1.left.erase(*pf);
        Sequent p2 = p1;
        p1.left.insert({pf->label, pf->formula.lhs()});
        p2.left.insert({pf->label, pf->formula.rhs()});
        expected = {std::move(p1), std::move(p2)};
        break;
      }
      case Rule::LImp: {
        if (auto e = need_formula(true, Kind::Imp)) return e;
        Sequent p1 = s;
        p1.left.erase(*pf);
        Sequent p2 = p1;
        p1.right.insert({pf->label, pf->formula.lhs()});
        p2.left.insert({pf->label, pf->formula.rhs()});
        expected = {std::move(p1), std::move(p2)};
        break;
      }
      case Rule::RIff: {
        if (auto e = need_formula(false, Kind::Iff)) return e;
        const Formula& a = pf->formula.lhs();
        const Formula& b = pf->formula.rhs();
        Sequent p1 = s;
        p1.right.erase(*pf);
        Sequent p2 = p1;
        p1.right.insert({pf->label, Formula::imp(a, b)});
        p2.right.insert({pf->label, Formula::imp(b, a)});
        expected = {std::move(p1), std::move(p2)};
        break;
      }
      case Rule::LBox: {
        if (auto e = need_formula(true, Kind::Box)) return e;
        if (d.principal.atoms.size() != 1) return fail("expected one relational atom");
        const auto [x, y] = d.principal.atoms[0];
        if (x != pf->label || !s.rel.contains({x, y})) {
          return fail("relational atom does not leave the principal's label");
        }
        Sequent p = s;
        p.left.insert({y, pf->formula.body()});
        expected.push_back(std::move(p));
        break;
      }
      case Rule::RBoxLob: {
        if (auto e = need_formula(false, Kind::Box)) return e;
        if (!d.principal.fresh) return fail("missing fresh label");
        const Label y = *d.principal.fresh;
        if (s.labels().contains(y)) {
          return fail("label " + std::to_string(y) + " already occurs in the conclusion");
        }
        Sequent p = s;
        p.right.erase(*pf);
        p.rel.insert({pf->label, y});
        p.left.insert({y, pf->formula});
        p.right.insert({y, pf->formula.body()});
        expected.push_back(std::move(p));
        break;
      }
      case Rule::Trans: {
        const auto& at = d.principal.atoms;
        if (at.size() != 2 || at[0].second != at[1].first || !s.rel.contains(at[0]) ||
            !s.rel.contains(at[1])) {
          return fail("principal atoms are not a composable pair of the sequent");
        }
        Sequent p = s;
        p.rel.insert({at[0].first, at[1].second});
        expected.push_back(std::move(p));
        break;
      }
    }

    for (std::size_t i = 0; i < expected.size(); ++i) {
      const std::string sub = path.empty() ? std::to_string(i) : path + "." + std::to_string(i);
      if (!(d.premises[i].sequent == expected[i])) {
        return Failure{sub, "premise " + std::to_string(i) + " of " + std::string(rule_name(d.rule)) +
                                " does not match the rule"};
      }
      if (auto e = check(d.premises[i], sub)) return e;
    }
    return std::nullopt;
  }
};

}  // namespace

DerivationCheck check_derivation(const Derivation& d, const Formula& goal) {
  Sequent root;
  root.right.insert({0, goal});
  if (!(d.sequent == root)) return {false, "root: conclusion is not => 0 : " + to_string(goal)};
  Checker checker;
  if (auto failure = checker.check(d, "")) {
    return {false, failure->path + ": " + failure->what};
  }
  return {true, {}};
}

}  // namespace glprover
