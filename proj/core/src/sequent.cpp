#include "glprover/sequent.hpp"

#include <algorithm>
#include <array>

#include "glprover/error.hpp"

namespace glprover {

namespace {

constexpr std::array<std::pair<Rule, std::string_view>, 17> kRuleNames = {{
    {Rule::Init, "Init"},
    {Rule::LFalse, "LFalse"},
    {Rule::RTrue, "RTrue"},
    {Rule::Irref, "Irref"},
    {Rule::LAnd, "LAnd"},
    {Rule::RAnd, "RAnd"},
    {Rule::LOr, "LOr"},
    {Rule::ROr, "ROr"},
    {Rule::LNot, "LNot"},
    {Rule::RNot, "RNot"},
    {Rule::LImp, "LImp"},
    {Rule::RImp, "RImp"},
    {Rule::LIff, "LIff"},
    {Rule::RIff, "RIff"},
    {Rule::LBox, "LBox"},
    {Rule::RBoxLob, "RBoxLob"},
    {Rule::Trans, "Trans"},
}};

}  // namespace

std::string_view rule_name(Rule r) {
  for (const auto& [rule, name] : kRuleNames) {
    if (rule == r) return name;
  }
  return "?";
}

std::optional<Rule> rule_from_name(std::string_view name) {
  for (const auto& [rule, n] : kRuleNames) {
    if (n == name) return rule;
  }
  return std::nullopt;
}

std::size_t rule_arity(Rule r) {
  switch (r) {
    case Rule::Init:
    case Rule::LFalse:
    case Rule::RTrue:
    case Rule::Irref:
      return 0;
    case Rule::RAnd:
    case Rule::LOr:
    case Rule::LImp:
    case Rule::RIff:
      return 2;
    default:
      return 1;
  }
}

std::set<Label> Sequent::labels() const {
  std::set<Label> out;
  for (const auto& [x, y] : rel) {
    out.insert(x);
    out.insert(y);
  }
  for (const auto& l : left) out.insert(l.label);
  for (const auto& l : right) out.insert(l.label);
  return out;
}

std::size_t Derivation::node_count() const {
  std::size_t n = 1;
  for (const auto& p : premises) n += p.node_count();
  return n;
}

std::size_t Derivation::height() const {
  std::size_t h = 0;
  for (const auto& p : premises) h = std::max(h, p.height());
  return h + 1;
}

namespace {

struct Application {
  Rule rule;
  Principal principal;
};

class Searcher {
 public:
  explicit Searcher(const SearchOptions& opts) : opts_(opts) {}

  // Either a closed derivation of the state's sequent, or an open saturated
  // branch.
  std::variant<Derivation, SequentState> run(SequentState st) {
    struct Link {
      Sequent conclusion;
      Application app;
    };
    std::vector<Link> chain;
    auto assemble = [&chain](Derivation top) {
      for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
        Derivation d{std::move(it->conclusion), it->app.rule, std::move(it->app.principal), {}};
        d.premises.push_back(std::move(top));
        top = std::move(d);
      }
      return top;
    };

    for (;;) {
      tick();
      if (auto app = closing(st.sequent)) {
        return assemble(Derivation{st.sequent, app->rule, std::move(app->principal), {}});
      }
      Sequent before = st.sequent;
      if (auto app = linear_propositional(st)) {
        chain.push_back({std::move(before), std::move(*app)});
        continue;
      }
      if (auto split = branching(st)) {
        auto& [app, second] = *split;
        auto first = run(st);
        if (auto* open = std::get_if<SequentState>(&first)) return std::move(*open);
        auto other = run(std::move(second));
        if (auto* open = std::get_if<SequentState>(&other)) return std::move(*open);
        Derivation node{std::move(before), app.rule, std::move(app.principal), {}};
        node.premises.push_back(std::get<Derivation>(std::move(first)));
        node.premises.push_back(std::get<Derivation>(std::move(other)));
        return assemble(std::move(node));
      }
      if (auto app = trans(st)) {
        chain.push_back({std::move(before), std::move(*app)});
        continue;
      }
      if (auto app = left_box(st)) {
        chain.push_back({std::move(before), std::move(*app)});
        continue;
      }
      if (auto app = right_box(st)) {
        chain.push_back({std::move(before), std::move(*app)});
        continue;
      }
      return st;
    }
  }

 private:
  void tick() {
    if (++steps_ > opts_.max_steps) {
      throw BudgetExceeded("proof search exceeded " + std::to_string(opts_.max_steps) +
                           " rule applications");
    }
  }

  static std::optional<Application> closing(const Sequent& s) {
    for (const auto& l : s.left) {
      if (s.right.contains(l)) return Application{Rule::Init, {l, {}, {}}};
    }
    for (const auto& l : s.left) {
      if (l.formula.is(Kind::Falsum)) return Application{Rule::LFalse, {l, {}, {}}};
    }
    for (const auto& r : s.right) {
      if (r.formula.is(Kind::Verum)) return Application{Rule::RTrue, {r, {}, {}}};
    }
    for (const auto& a : s.rel) {
      if (a.first == a.second) return Application{Rule::Irref, {std::nullopt, {a}, {}}};
    }
    return std::nullopt;
  }

  static std::optional<Labelled> first_of(const std::set<Labelled>& side, Kind k) {
    for (const auto& l : side) {
      if (l.formula.is(k)) return l;
    }
    return std::nullopt;
  }

  static std::optional<Application> linear_propositional(SequentState& st) {
    Sequent& s = st.sequent;
    if (auto p = first_of(s.left, Kind::And)) {
      s.left.erase(*p);
      s.left.insert({p->label, p->formula.lhs()});
      s.left.insert({p->label, p->formula.rhs()});
      return Application{Rule::LAnd, {*p, {}, {}}};
    }
    if (auto p = first_of(s.right, Kind::Or)) {
      s.right.erase(*p);
      s.right.insert({p->label, p->formula.lhs()});
      s.right.insert({p->label, p->formula.rhs()});
      return Application{Rule::ROr, {*p, {}, {}}};
    }
    if (auto p = first_of(s.left, Kind::Not)) {
      s.left.erase(*p);
      s.right.insert({p->label, p->formula.body()});
      return Application{Rule::LNot, {*p, {}, {}}};
    }
    if (auto p = first_of(s.right, Kind::Not)) {
      s.right.erase(*p);
      s.left.insert({p->label, p->formula.body()});
      return Application{Rule::RNot, {*p, {}, {}}};
    }
    if (auto p = first_of(s.right, Kind::Imp)) {
      s.right.erase(*p);
      s.left.insert({p->label, p->formula.lhs()});
      s.right.insert({p->label, p->formula.rhs()});
      return Application{Rule::RImp, {*p, {}, {}}};
    }
    if (auto p = first_of(s.left, Kind::Iff)) {
      const Formula& a = p->formula.lhs();
      const Formula& b = p->formula.rhs();
      s.left.erase(*p);
      s.left.insert({p->label, Formula::imp(a, b)});
      s.left.insert({p->label, Formula::imp(b, a)});
      return Application{Rule::LIff, {*p, {}, {}}};
    }
    return std::nullopt;
  }

  // Turns `st` into the left premise and returns the right one.
  static std::optional<std::pair<Application, SequentState>> branching(SequentState& st) {
    Sequent& s = st.sequent;
    auto split = [&st](Rule rule, const Labelled& p, auto&& make_left, auto&& make_right) {
      SequentState other = st;
      make_left(st.sequent);
      make_right(other.sequent);
      return std::make_optional(std::pair{Application{rule, {p, {}, {}}}, std::move(other)});
    };
    if (auto p = first_of(s.right, Kind::And)) {
      s.right.erase(*p);
      const Label x = p->label;
      const Formula a = p->formula.lhs();
      const Formula b = p->formula.rhs();
      return split(
          Rule::RAnd, *p, [&](Sequent& q) { q.right.insert({x, a}); },
          [&](Sequent& q) { q.right.insert({x, b}); });
    }
    if (auto p = first_of(s.left, Kind::Or)) {
      s.left.erase(*p);
      const Label x = p->label;
      const Formula a = p->formula.lhs();
      const Formula b = p->formula.rhs();
      return split(
          Rule::LOr, *p, [&](Sequent& q) { q.left.insert({x, a}); },
          [&](Sequent& q) { q.left.insert({x, b}); });
    }
    if (auto p = first_of(s.left, Kind::Imp)) {
      s.left.erase(*p);
      const Label x = p->label;
      const Formula a = p->formula.lhs();
      const Formula b = p->formula.rhs();
      return split(
          Rule::LImp, *p, [&](Sequent& q) { q.right.insert({x, a}); },
          [&](Sequent& q) { q.left.insert({x, b}); });
    }
    if (auto p = first_of(s.right, Kind::Iff)) {
      s.right.erase(*p);
      const Label x = p->label;
      const Formula a = p->formula.lhs();
      const Formula b = p->formula.rhs();
      return split(
          Rule::RIff, *p, [&](Sequent& q) { q.right.insert({x, Formula::imp(a, b)}); },
          [&](Sequent& q) { q.right.insert({x, Formula::imp(b, a)}); });
    }
    return std::nullopt;
  }

  static std::optional<Application> trans(SequentState& st) {
    auto& rel = st.sequent.rel;
    for (const auto& [x, y] : rel) {
      for (auto it = rel.lower_bound({y, 0}); it != rel.end() && it->first == y; ++it) {
        const Label z = it->second;
        if (!rel.contains({x, z})) {
          Application app{Rule::Trans, {std::nullopt, {{x, y}, {y, z}}, {}}};
          rel.insert({x, z});
          return app;
        }
      }
    }
    return std::nullopt;
  }

  static std::optional<Application> left_box(SequentState& st) {
    Sequent& s = st.sequent;
    for (const auto& l : s.left) {
      if (!l.formula.is(Kind::Box)) continue;
      const Label x = l.label;
      for (auto it = s.rel.lower_bound({x, 0}); it != s.rel.end() && it->first == x; ++it) {
        const Label y = it->second;
        if (!st.lbox_done.emplace(x, l.formula, y).second) continue;
        Labelled added{y, l.formula.body()};
        if (s.left.contains(added)) continue;
        Application app{Rule::LBox, {l, {{x, y}}, {}}};
        s.left.insert(std::move(added));
        return app;
      }
    }
    return std::nullopt;
  }

  // Candidate order: bodies that are negations first, then bodies occurring
  // inside another candidate's body, then formula order, then label.
  static std::optional<Application> right_box(SequentState& st) {
    Sequent& s = st.sequent;
    std::vector<Labelled> candidates;
    for (const auto& r : s.right) {
      if (r.formula.is(Kind::Box) && !st.rbox_done.contains(r)) candidates.push_back(r);
    }
    if (candidates.empty()) return std::nullopt;

    auto key = [&candidates](const Labelled& c) {
      const Formula& body = c.formula.body();
      const bool negated = body.is(Kind::Not);
      const bool nested = std::any_of(candidates.begin(), candidates.end(), [&](const Labelled& o) {
        return o.formula != c.formula && occurs_in(body, o.formula.body());
      });
      return std::tuple(negated ? 0 : 1, nested ? 0 : 1, c.formula, c.label);
    };
    const Labelled chosen = *std::min_element(
        candidates.begin(), candidates.end(),
        [&](const Labelled& a, const Labelled& b) { return key(a) < key(b); });

    const Label x = chosen.label;
    const Label y = st.next_label++;
    st.rbox_done.insert(chosen);
    s.right.erase(chosen);
    s.rel.insert({x, y});
    s.left.insert({y, chosen.formula});
    s.right.insert({y, chosen.formula.body()});
    return Application{Rule::RBoxLob, {chosen, {}, y}};
  }

  SearchOptions opts_;
  std::uint64_t steps_ = 0;
};

}  // namespace

SearchResult search(const Formula& f, const SearchOptions& opts) {
  SequentState root;
  root.sequent.right.insert({0, f});
  Searcher searcher(opts);
  auto out = searcher.run(std::move(root));
  if (auto* d = std::get_if<Derivation>(&out)) return Proved{std::move(*d)};

  auto branch = std::get<SequentState>(std::move(out));
  auto [model, world] = extract_countermodel(branch, 0);
  if (holds(model, f, world)) {
    throw InternalError("countermodel does not falsify " + to_string(f) + " at its root");
  }
  return Refuted{std::move(branch), std::move(model), world};
}

bool provable(const Formula& f, const SearchOptions& opts) {
  return std::holds_alternative<Proved>(search(f, opts));
}

std::pair<Model, World> extract_countermodel(const SequentState& branch, Label root) {
  const Sequent& s = branch.sequent;
  Model m;
  m.frame.worlds = s.labels();
  m.frame.worlds.insert(root);
  m.frame.rel = s.rel;
  for (const auto& l : s.left) {
    if (l.formula.is(Kind::Atom)) m.val[l.formula.name()].insert(l.label);
  }

  if (!is_itf(m.frame)) throw InternalError("open branch does not yield an ITF frame");
  for (const auto& l : s.left) {
    if (!holds(m, l.formula, l.label)) {
      throw InternalError("countermodel refutes left item " + std::to_string(l.label) + " : " +
                          to_string(l.formula));
    }
  }
  for (const auto& r : s.right) {
    if (holds(m, r.formula, r.label)) {
      throw InternalError("countermodel forces right item " + std::to_string(r.label) + " : " +
                          to_string(r.formula));
    }
  }
  return {std::move(m), root};
}

}  // namespace glprover
