#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "glprover/formula.hpp"
#include "glprover/semantics.hpp"
#include "glprover/sequent.hpp"

namespace glprover {

/// Repetition-free list of formulas.
using FormulaList = std::vector<Formula>;

/// Standard model for a target formula: worlds are maximal consistent lists
/// of its subsentences, indexed 0..n-1 in canonical order.
struct StandardModel {
  Formula target;
  /// worlds[i] is the list for world i, sorted by the formula order.
  std::vector<FormulaList> worlds;
  /// Indexed model over 0..n-1.
  Model model;
};

struct HenkinOptions {
  /// Ceiling on candidate polarity assignments, 2^|subformulas|.
  std::uint64_t max_assignments = 4096;
  SearchOptions search;
};

/// Not provably inconsistent: `Not (conjlist xs)` is refuted by the prover.
bool consistent(const FormulaList& xs, const SearchOptions& opts = {});

/// Consistent, repetition-free, and deciding every subformula of `p`.
bool is_maximal_consistent(const Formula& p, const FormulaList& xs,
                           const SearchOptions& opts = {});

/// Extends `xs` by walking the subformulas of `p` in ascending order and
/// appending each undecided one, or its negation when the formula itself
/// would make the list inconsistent. PreconditionError unless `xs` is
/// consistent and made of subsentences of `p`.
FormulaList extend_maximal_consistent(const Formula& p, const FormulaList& xs,
                                      const SearchOptions& opts = {});

/// Both lists maximal consistent subsentence lists for `p`; every Box B of
/// `w` passes to `x` together with B; some Box E of `x` is negated in `w`.
bool gl_standard_rel(const Formula& p, const FormulaList& w, const FormulaList& x,
                     const SearchOptions& opts = {});

struct StandardCountermodel {
  StandardModel standard;
  /// Index of a world containing Not p.
  World world = 0;
};

/// nullopt when `p` is provable. Otherwise builds the standard model, checks
/// it is ITF and satisfies the truth lemma (InternalError if not), and
/// returns it with a world refuting `p`. BudgetExceeded when the candidate
/// enumeration is above `opts.max_assignments`.
std::optional<StandardCountermodel> build_standard_model(const Formula& p,
                                                         const HenkinOptions& opts = {});

/// Membership of each subformula of the target in each world coincides with
/// forcing at that world's index.
bool truth_lemma_check(const Formula& p, const StandardModel& sm);

}  // namespace glprover
