#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "glprover/formula.hpp"

namespace glprover {

/// Number of axiom schemas of the calculus. Ids run from 1 in this order:
///
///   1  p --> q --> p
///   2  (p --> q --> r) --> (p --> q) --> p --> r
///   3  ((p --> False) --> False) --> p
///   4  (p <-> q) --> p --> q
///   5  (p <-> q) --> q --> p
///   6  (p --> q) --> (q --> p) --> (p <-> q)
///   7  True <-> False --> False
///   8  Not p <-> p --> False
///   9  p && q <-> (p --> q --> False) --> False
///  10  p || q <-> Not (Not p && Not q)
///  11  Box (p --> q) --> Box p --> Box q
///  12  Box (Box p --> p) --> Box p
///
/// p, q, r stand for arbitrary formulas.
inline constexpr int kSchemaCount = 12;

/// Pattern of schema `id`, with atoms p, q, r as metavariables.
const Formula& schema_pattern(int id);

/// True iff `f` is an instance of schema `id` (false for ids out of range).
bool instantiates(int id, const Formula& f);

/// Least schema id that `f` instantiates.
std::optional<int> match_axiom(const Formula& f);

struct HilbertStep {
  enum class Kind { Axiom, ModusPonens, Necessitation };

  Kind kind = Kind::Axiom;
  /// Axiom steps only.
  int schema = 0;
  /// ModusPonens: {major "X --> Y", minor "X"}; Necessitation: {premise}.
  std::vector<std::size_t> refs;
  /// Formula this step claims to conclude.
  Formula formula;

  static HilbertStep axiom(int schema, Formula f);
  static HilbertStep modus_ponens(std::size_t major, std::size_t minor, Formula f);
  static HilbertStep necessitation(std::size_t premise, Formula f);

  bool operator==(const HilbertStep&) const = default;
};

struct HilbertProof {
  std::vector<HilbertStep> steps;

  bool operator==(const HilbertProof&) const = default;
};

struct ProofCheck {
  std::optional<Formula> conclusion;
  /// Index of the first unjustified step, when rejected.
  std::optional<std::size_t> failed_step;
  std::string message;

  explicit operator bool() const { return conclusion.has_value(); }
};

/// Re-derives every step. Accepts iff each step is justified by its rule and
/// concludes the formula it carries; the conclusion is the last step's.
ProofCheck check_proof(const HilbertProof& pf);

/// Right-nested conjunction; [] is True and [a] is a.
Formula conjlist(std::span<const Formula> fs);

/// Small corpus of checked derivations shipped with the library.
HilbertProof proof_of_verum();
HilbertProof proof_of_self_implication(const Formula& p);

}  // namespace glprover
