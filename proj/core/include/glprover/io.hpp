#pragma once

// Interchange formats. All documents are JSON; formulas inside them use the
// canonical concrete syntax of to_string().
//
//   model:       {"worlds": [0, 1], "rel": [[0, 1]], "val": {"p": [1]}}
//                arrays ascending; a countermodel adds "falsifiedAt": w.
//   derivation:  {"rule": "RImp", "principal": {...},
//                 "sequent": {"rel": [[x, y]], "left": [[x, "A"]], "right": [...]},
//                 "premises": [...]}
//                principal keys: "label"/"formula", "atoms", "fresh" as used.
//   proof:       {"steps": [{"kind": "axiom", "schema": 1, "formula": "..."},
//                           {"kind": "mp", "refs": [i, j], "formula": "..."},
//                           {"kind": "nec", "refs": [i], "formula": "..."}]}
//
// The readers throw FormatError on malformed documents (ParseError for a bad
// formula string).

#include <optional>
#include <string>
#include <string_view>

#include "glprover/henkin.hpp"
#include "glprover/hilbert.hpp"
#include "glprover/semantics.hpp"
#include "glprover/sequent.hpp"

namespace glprover {

std::string model_to_json(const Model& m, std::optional<World> falsified_at = std::nullopt);

struct ModelDocument {
  Model model;
  std::optional<World> falsified_at;
};

/// Rejects pairs with endpoints outside `worlds`.
ModelDocument model_from_json(std::string_view text);

/// Human-readable listing of worlds, arrows and true atoms.
std::string model_to_text(const Model& m, std::optional<World> falsified_at = std::nullopt);

/// Graphviz digraph: one node per world labelled with its id and true atoms,
/// one edge per pair of the relation.
std::string model_to_dot(const Model& m, std::optional<World> falsified_at = std::nullopt);

std::string derivation_to_json(const Derivation& d);
Derivation derivation_from_json(std::string_view text);
/// Indented tree, one sequent per line, premises below their conclusion.
std::string derivation_to_text(const Derivation& d);
std::string derivation_to_dot(const Derivation& d);

std::string sequent_to_string(const Sequent& s);

std::string proof_to_json(const HilbertProof& pf);
HilbertProof proof_from_json(std::string_view text);

/// {"0": ["canonical formula", ...], ...}: world index to its formula list.
std::string standard_worlds_to_json(const StandardModel& sm);

}  // namespace glprover
