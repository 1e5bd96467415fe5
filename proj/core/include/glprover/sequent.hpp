#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <variant>
#include <vector>

#include "glprover/formula.hpp"
#include "glprover/semantics.hpp"

namespace glprover {

/// World label of the labelled calculus. The root is 0.
using Label = std::uint32_t;
using RelAtom = std::pair<Label, Label>;

/// x : A
struct Labelled {
  Label label = 0;
  Formula formula;

  friend auto operator<=>(const Labelled&, const Labelled&) = default;
  friend bool operator==(const Labelled&, const Labelled&) = default;
};

/// rel, left => right. All three are sets: contraction is implicit.
struct Sequent {
  std::set<RelAtom> rel;
  std::set<Labelled> left;
  std::set<Labelled> right;

  std::set<Label> labels() const;

  bool operator==(const Sequent&) const = default;
};

/// Rules of the labelled calculus. LIff/RIff treat A <-> B as the conjunction
/// of A --> B and B --> A; RTrue closes a sequent with x : True on the right.
enum class Rule : std::uint8_t {
  Init,
  LFalse,
  RTrue,
  Irref,
  LAnd,
  RAnd,
  LOr,
  ROr,
  LNot,
  RNot,
  LImp,
  RImp,
  LIff,
  RIff,
  LBox,
  RBoxLob,
  Trans,
};

std::string_view rule_name(Rule r);
std::optional<Rule> rule_from_name(std::string_view name);
/// Number of premises the rule has.
std::size_t rule_arity(Rule r);

/// What a rule acts on. Which fields are meaningful depends on the rule:
///   Init, LFalse, RTrue, propositional rules: `formula`;
///   Irref: atoms = {xRx};  Trans: atoms = {xRy, yRz};
///   LBox: `formula` = x : Box A, atoms = {xRy};
///   RBoxLob: `formula` = x : Box A, `fresh` = y.
struct Principal {
  std::optional<Labelled> formula;
  std::vector<RelAtom> atoms;
  std::optional<Label> fresh;

  bool operator==(const Principal&) const = default;
};

/// Proof tree; `sequent` is the conclusion of the node.
struct Derivation {
  Sequent sequent;
  Rule rule = Rule::Init;
  Principal principal;
  std::vector<Derivation> premises;

  std::size_t node_count() const;
  std::size_t height() const;

  bool operator==(const Derivation&) const = default;
};

/// Search state of one branch: the sequent plus the rule instances already
/// spent on it.
struct SequentState {
  Sequent sequent;
  /// (x, A, y) for every L-Box use of x : Box A along xRy.
  std::set<std::tuple<Label, Formula, Label>> lbox_done;
  /// (x, Box A) for every R-Box-Lob application.
  std::set<Labelled> rbox_done;
  /// Next fresh label.
  Label next_label = 1;

  bool operator==(const SequentState&) const = default;
};

struct Proved {
  Derivation derivation;
};

struct Refuted {
  SequentState branch;
  Model countermodel;
  World falsified_at = 0;
};

using SearchResult = std::variant<Proved, Refuted>;

inline constexpr std::uint64_t kDefaultMaxSteps = 1'000'000;

struct SearchOptions {
  /// Ceiling on rule applications; BudgetExceeded beyond it.
  std::uint64_t max_steps = kDefaultMaxSteps;
};

/// Root-first proof search for `=> 0 : f`. Deterministic. Branches are
/// explored depth-first, leftmost premise first; the first saturated open
/// branch yields a countermodel that has been verified against `f`.
SearchResult search(const Formula& f, const SearchOptions& opts = {});

/// Shorthand for std::holds_alternative<Proved>(search(f)).
bool provable(const Formula& f, const SearchOptions& opts = {});

struct DerivationCheck {
  bool ok = true;
  std::string message;

  explicit operator bool() const { return ok; }
};

/// Rebuilds every premise from its conclusion and rule, independently of the
/// search bookkeeping. The root must be `=> 0 : goal`.
DerivationCheck check_derivation(const Derivation& d, const Formula& goal);

/// Reads a model off a saturated open branch: worlds are the labels, rel the
/// relational atoms, and an atom is true at x iff x : atom is on the left.
/// The model is checked to be ITF, to force every left item and refute every
/// right item; InternalError otherwise.
std::pair<Model, World> extract_countermodel(const SequentState& branch, Label root = 0);

}  // namespace glprover
