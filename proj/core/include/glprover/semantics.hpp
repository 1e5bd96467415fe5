#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <variant>

#include "glprover/formula.hpp"

namespace glprover {

using World = std::uint32_t;
using WorldPair = std::pair<World, World>;
using WorldPairs = std::set<WorldPair>;

/// Finite Kripke frame. Worlds may be empty; the class predicates reject that.
struct Frame {
  std::set<World> worlds;
  WorldPairs rel;

  /// Every pair of `rel` has both endpoints in `worlds`.
  bool endpoints_in_worlds() const;
  std::set<World> successors(World w) const;

  bool operator==(const Frame&) const = default;
};

/// Kripke model. Atoms missing from `val` (or worlds missing from an atom's
/// set) are false.
struct Model {
  Frame frame;
  std::map<std::string, std::set<World>> val;

  bool valuation(const std::string& atom, World w) const;

  bool operator==(const Model&) const = default;
};

/// Default ceiling on evaluations for the exhaustive checks.
inline constexpr std::uint64_t kDefaultEvalBudget = 100'000'000;

/// Forcing. Throws PreconditionError if `w` is not a world of `m`.
bool holds(const Model& m, const Formula& f, World w);

/// True iff `f` holds at every world under every valuation of its atoms.
/// Throws BudgetExceeded when 2^(|atoms|*|worlds|) exceeds `budget`, and
/// PreconditionError on an empty frame.
bool frame_valid(const Frame& fr, const Formula& f, std::uint64_t budget = kDefaultEvalBudget);

/// Nonempty, irreflexive, transitive (finite by construction).
bool is_itf(const Frame& fr);

/// Nonempty, transitive, and without cycles: converse well-foundedness on a
/// finite frame.
bool is_transnt_finite(const Frame& fr);

/// Frame on worlds 0..n-1 whose relation is read from `mask`, bit i*n+j
/// standing for (i, j). Requires n*n <= 64.
Frame frame_from_mask(std::size_t worlds, std::uint64_t mask);

struct ValidUpTo {
  std::size_t bound;
};

struct Falsified {
  Model model;
  World world;
};

using Verdict = std::variant<ValidUpTo, Falsified>;

/// Exhaustive validity over ITF frames with 1..max_worlds worlds. Frames are
/// visited by size, then by relation mask ascending; valuations by mask
/// ascending; worlds ascending. The first failure is returned.
///
/// Throws PreconditionError when max_worlds is 0 or above 8, BudgetExceeded
/// when the number of (frame, valuation) pairs to visit exceeds `budget`.
Verdict oracle_valid(const Formula& f, std::size_t max_worlds,
                     std::uint64_t budget = kDefaultEvalBudget);

/// Atoms that either model lists in its valuation.
std::set<std::string> atoms_of_interest(const Model& m1, const Model& m2);

/// Membership, atom agreement, forth and back for every pair in `z`.
bool is_bisimulation(const Model& m1, const Model& m2, const WorldPairs& z);

/// Greatest bisimulation between `m1` and `m2`, by refinement from the
/// atom-agreement relation.
WorldPairs largest_bisimulation(const Model& m1, const Model& m2);

}  // namespace glprover
