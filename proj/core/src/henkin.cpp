#include "glprover/henkin.hpp"

#include <algorithm>

#include "glprover/error.hpp"
#include "glprover/hilbert.hpp"

namespace glprover {

namespace {

bool contains(const FormulaList& xs, const Formula& f) {
  return std::find(xs.begin(), xs.end(), f) != xs.end();
}

bool no_repetition(const FormulaList& xs) {
  FormulaSet seen;
  return std::all_of(xs.begin(), xs.end(), [&](const Formula& f) { return seen.insert(f).second; });
}

bool all_subsentences(const Formula& p, const FormulaList& xs) {
  const FormulaSet subs = subsentences(p);
  return std::all_of(xs.begin(), xs.end(), [&](const Formula& f) { return subs.contains(f); });
}

bool decides_subformulas(const Formula& p, const FormulaList& xs) {
  for (const auto& q : subformulas(p)) {
    if (!contains(xs, q) && !contains(xs, Formula::neg(q))) return false;
  }
  return true;
}

// Box-transfer and witness clauses of the standard relation.
bool standard_rel_clauses(const FormulaList& w, const FormulaList& x) {
  for (const auto& f : w) {
    if (!f.is(Kind::Box)) continue;
    if (!contains(x, f) || !contains(x, f.body())) return false;
  }
  return std::any_of(x.begin(), x.end(), [&](const Formula& f) {
    return f.is(Kind::Box) && contains(w, Formula::neg(f));
  });
}

}  // namespace

bool consistent(const FormulaList& xs, const SearchOptions& opts) {
  return !provable(Formula::neg(conjlist(xs)), opts);
}

bool is_maximal_consistent(const Formula& p, const FormulaList& xs, const SearchOptions& opts) {
  return no_repetition(xs) && decides_subformulas(p, xs) && consistent(xs, opts);
}

FormulaList extend_maximal_consistent(const Formula& p, const FormulaList& xs,
                                      const SearchOptions& opts) {
  if (!all_subsentences(p, xs)) {
    throw PreconditionError("seed list contains a formula that is not a subsentence of " +
                            to_string(p));
  }
  if (!consistent(xs, opts)) throw PreconditionError("seed list is inconsistent");

  FormulaList m;
  for (const auto& f : xs) {
    if (!contains(m, f)) m.push_back(f);
  }
  for (const auto& q : subformulas(p)) {
    const Formula nq = Formula::neg(q);
    if (contains(m, q) || contains(m, nq)) continue;
    m.push_back(q);
    if (!consistent(m, opts)) m.back() = nq;
  }
  return m;
}

bool gl_standard_rel(const Formula& p, const FormulaList& w, const FormulaList& x,
                     const SearchOptions& opts) {
  return all_subsentences(p, w) && all_subsentences(p, x) && standard_rel_clauses(w, x) &&
         is_maximal_consistent(p, w, opts) && is_maximal_consistent(p, x, opts);
}

std::optional<StandardCountermodel> build_standard_model(const Formula& p,
                                                         const HenkinOptions& opts) {
  const FormulaSet subs_set = subformulas(p);
  const std::vector<Formula> subs(subs_set.begin(), subs_set.end());
  if (subs.size() >= 63 || (std::uint64_t{1} << subs.size()) > opts.max_assignments) {
    throw BudgetExceeded("standard model: 2^" + std::to_string(subs.size()) +
                         " candidate worlds exceed the budget");
  }
  if (provable(p, opts.search)) return std::nullopt;

  // A consistent polarity assignment over the subformulas is exactly a
  // maximal consistent subsentence list, up to order.
  std::vector<FormulaList> worlds;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << subs.size()); ++bits) {
    FormulaSet chosen;
    for (std::size_t i = 0; i < subs.size(); ++i) {
      chosen.insert((bits >> i) & 1U ? subs[i] : Formula::neg(subs[i]));
    }
    FormulaList list(chosen.begin(), chosen.end());
    if (consistent(list, opts.search)) worlds.push_back(std::move(list));
  }
  std::sort(worlds.begin(), worlds.end());
  worlds.erase(std::unique(worlds.begin(), worlds.end()), worlds.end());

  StandardModel sm{p, worlds, {}};
  for (std::size_t i = 0; i < worlds.size(); ++i) sm.model.frame.worlds.insert(static_cast<World>(i));
  for (std::size_t i = 0; i < worlds.size(); ++i) {
    for (std::size_t j = 0; j < worlds.size(); ++j) {
      if (standard_rel_clauses(worlds[i], worlds[j])) {
        sm.model.frame.rel.insert({static_cast<World>(i), static_cast<World>(j)});
      }
    }
    for (const auto& f : worlds[i]) {
      if (f.is(Kind::Atom)) sm.model.val[f.name()].insert(static_cast<World>(i));
    }
  }
  if (!is_itf(sm.model.frame)) throw InternalError("standard frame is not ITF");
  if (!truth_lemma_check(p, sm)) throw InternalError("truth lemma fails on the standard model");

  FormulaList seed_ext = extend_maximal_consistent(p, {Formula::neg(p)}, opts.search);
  std::sort(seed_ext.begin(), seed_ext.end());
  auto it = std::lower_bound(worlds.begin(), worlds.end(), seed_ext);
  if (it == worlds.end() || *it != seed_ext) {
    throw InternalError("extension of [Not p] is not among the enumerated worlds");
  }
  const auto world = static_cast<World>(it - worlds.begin());
  if (holds(sm.model, p, world)) throw InternalError("standard model does not refute the target");
  return StandardCountermodel{std::move(sm), world};
}

bool truth_lemma_check(const Formula& p, const StandardModel& sm) {
  const FormulaSet subs = subformulas(p);
  for (std::size_t i = 0; i < sm.worlds.size(); ++i) {
    const auto w = static_cast<World>(i);
    if (!sm.model.frame.worlds.contains(w)) return false;
    for (const auto& q : subs) {
      if (contains(sm.worlds[i], q) != holds(sm.model, q, w)) return false;
    }
  }
  return true;
}

}  // namespace glprover
