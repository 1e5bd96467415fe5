#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <set>
#include <string>
#include <string_view>

namespace glprover {

/// Constructor tags, declared in the rank order used by the total order on
/// formulas.
enum class Kind : std::uint8_t { Falsum, Verum, Atom, Not, And, Or, Imp, Iff, Box };

/// Immutable modal formula with shared structure. Copying is cheap.
///
/// Diamond is not a constructor: `diam(a)` builds `Not(Box(Not a))`.
class Formula {
 public:
  /// Defaults to Falsum.
  Formula();

  static Formula falsum();
  static Formula verum();
  static Formula atom(std::string name);
  static Formula neg(Formula a);
  static Formula conj(Formula a, Formula b);
  static Formula disj(Formula a, Formula b);
  static Formula imp(Formula a, Formula b);
  static Formula iff(Formula a, Formula b);
  static Formula box(Formula a);
  static Formula diam(Formula a);

  Kind kind() const noexcept;
  bool is(Kind k) const noexcept { return kind() == k; }

  /// Atom name; empty for every other constructor.
  const std::string& name() const noexcept;

  /// First child (the only one for Not and Box). Precondition: not a leaf.
  const Formula& lhs() const noexcept;
  /// Second child of a binary connective. Precondition: binary.
  const Formula& rhs() const noexcept;
  /// Alias of lhs() for the unary connectives.
  const Formula& body() const noexcept { return lhs(); }

  bool is_leaf() const noexcept;
  bool is_binary() const noexcept;

  /// Number of constructor nodes in the tree.
  std::size_t size() const noexcept;
  /// Number of binary or unary connectives (leaves excluded).
  std::size_t connectives() const noexcept;
  /// Maximal nesting of Box.
  std::size_t modal_depth() const noexcept;

  /// Structural order: constructor rank first, then atom names, then
  /// children left to right.
  friend std::strong_ordering operator<=>(const Formula& a, const Formula& b) noexcept;
  friend bool operator==(const Formula& a, const Formula& b) noexcept;

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static Formula make(Kind kind, std::string name, const Formula* a, const Formula* b);

  std::shared_ptr<const Node> node_;
};

using FormulaSet = std::set<Formula>;

/// Reflexive-transitive closure of the immediate-subterm relation.
FormulaSet subformulas(const Formula& f);

/// Subformulas together with their single negations.
FormulaSet subsentences(const Formula& f);

/// Names of the atoms occurring in `f`.
std::set<std::string> atoms(const Formula& f);

/// True iff `needle` occurs as a subterm of `haystack` (reflexively).
bool occurs_in(const Formula& needle, const Formula& haystack);

/// Canonical concrete syntax with minimal parentheses. Re-parses to an
/// equal formula.
std::string to_string(const Formula& f);

/// Parses the concrete syntax
///
///   iff   := imp [ "<->" imp ]
///   imp   := or [ "-->" imp ]
///   or    := and { "||" and }
///   and   := unary { "&&" unary }
///   unary := ("Not" | "Box" | "Diam") unary | "False" | "True" | ident | "(" iff ")"
///
/// Throws ParseError.
Formula parse(std::string_view text);

std::ostream& operator<<(std::ostream& os, const Formula& f);

}  // namespace glprover
