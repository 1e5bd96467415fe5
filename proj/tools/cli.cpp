#include "cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "glprover/error.hpp"
#include "glprover/formula.hpp"
#include "glprover/henkin.hpp"
#include "glprover/hilbert.hpp"
#include "glprover/io.hpp"
#include "glprover/semantics.hpp"
#include "glprover/sequent.hpp"

namespace glprover::cli {

namespace {

class UsageError : public Error {
 public:
  using Error::Error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// "-" writes to `out`.
void write_artifact(const std::string& path, const std::string& text, std::ostream& out) {
  if (path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw UsageError("cannot write " + path);
  file << text;
}

struct FormulaInput {
  std::string inline_text;
  std::string file;

  Formula get() const {
    if (!inline_text.empty()) return parse(inline_text);
    if (!file.empty()) return parse(read_file(file));
    throw UsageError("no formula given (pass it inline or with --file)");
  }
};

void add_formula_input(CLI::App* cmd, FormulaInput& in) {
  cmd->add_option("formula", in.inline_text, "Formula text");
  cmd->add_option("--file", in.file, "Read the formula from a file (inline text wins)");
}

enum class Format { Text, Structured, Graph };

std::string render_model(const Model& m, std::optional<World> at, Format fmt) {
  switch (fmt) {
    case Format::Text: return model_to_text(m, at);
    case Format::Structured: return model_to_json(m, at);
    case Format::Graph: return model_to_dot(m, at);
  }
  return {};
}

std::string render_derivation(const Derivation& d, Format fmt) {
  switch (fmt) {
    case Format::Text: return derivation_to_text(d);
    case Format::Structured: return derivation_to_json(d);
    case Format::Graph: return derivation_to_dot(d);
  }
  return {};
}

const std::map<std::string, Format> kFormats = {
    {"text", Format::Text}, {"structured", Format::Structured}, {"graph", Format::Graph}};

std::string describe_frame_failure(const Frame& fr) {
  if (fr.worlds.empty()) return "no worlds";
  if (!fr.endpoints_in_worlds()) return "relation leaves the world set";
  for (const auto& [x, y] : fr.rel) {
    if (x == y) return "reflexive at world " + std::to_string(x);
  }
  for (const auto& [x, y] : fr.rel) {
    for (World z : fr.successors(y)) {
      if (!fr.rel.contains({x, z})) {
        return "not transitive: " + std::to_string(x) + "->" + std::to_string(y) + "->" +
               std::to_string(z) + " without " + std::to_string(x) + "->" + std::to_string(z);
      }
    }
  }
  return "ok";
}

struct Options {
  FormulaInput formula;
  std::string emit_proof;
  std::string emit_countermodel;
  std::string emit_sidecar;
  Format format = Format::Text;
  std::uint64_t max_steps = kDefaultMaxSteps;
  std::uint64_t eval_budget = kDefaultEvalBudget;
  std::uint64_t max_lists = HenkinOptions{}.max_assignments;
  std::size_t max_worlds = 3;
  std::string model_file;
  std::string model_file_b;
  std::string proof_file;
  std::optional<World> world;
};

ExitStatus cmd_prove(const Options& o, std::ostream& out) {
  const Formula f = o.formula.get();
  const SearchResult result = search(f, {o.max_steps});
  if (const auto* proved = std::get_if<Proved>(&result)) {
    out << "proved: " << f << '\n';
    if (!o.emit_proof.empty()) write_artifact(o.emit_proof, render_derivation(proved->derivation, o.format), out);
    return ExitStatus::Proved;
  }
  const auto& refuted = std::get<Refuted>(result);
  out << "refuted: " << f << '\n';
  const std::string path = o.emit_countermodel.empty() ? "-" : o.emit_countermodel;
  write_artifact(path, render_model(refuted.countermodel, refuted.falsified_at, o.format), out);
  return ExitStatus::Refuted;
}

ExitStatus cmd_check_model(const Options& o, std::ostream& out) {
  const ModelDocument doc = model_from_json(read_file(o.model_file));
  const Formula f = o.formula.get();
  if (doc.model.frame.worlds.empty()) throw UsageError("model has no worlds");
  const std::optional<World> world = o.world ? o.world : doc.falsified_at;
  if (!world) throw UsageError("no world given (use --world)");
  if (!doc.model.frame.worlds.contains(*world)) {
    throw UsageError("world " + std::to_string(*world) + " is not in the model");
  }

  const bool itf = is_itf(doc.model.frame);
  out << "frame: " << (itf ? "ITF" : "not ITF (" + describe_frame_failure(doc.model.frame) + ")")
      << '\n';
  std::vector<Formula> subs;
  for (const auto& g : subformulas(f)) subs.push_back(g);
  std::stable_sort(subs.begin(), subs.end(),
                   [](const Formula& a, const Formula& b) { return a.size() < b.size(); });
  for (const auto& g : subs) {
    out << "  " << (holds(doc.model, g, *world) ? "holds " : "fails ") << g << '\n';
  }
  const bool ok = holds(doc.model, f, *world);
  out << (ok ? "holds" : "falsified") << " at world " << *world << '\n';
  return itf && ok ? ExitStatus::Proved : ExitStatus::Refuted;
}

ExitStatus cmd_oracle(const Options& o, std::ostream& out) {
  const Formula f = o.formula.get();
  if (o.max_worlds == 0) throw UsageError("--max-worlds must be at least 1");
  const Verdict v = [&] {
    try {
      return oracle_valid(f, o.max_worlds, o.eval_budget);
    } catch (const PreconditionError& e) {
      throw UsageError(e.what());
    }
  }();
  if (const auto* ok = std::get_if<ValidUpTo>(&v)) {
    out << "valid on all ITF frames with at most " << ok->bound << " worlds\n";
    return ExitStatus::Proved;
  }
  const auto& bad = std::get<Falsified>(v);
  out << "falsified\n";
  const std::string path = o.emit_countermodel.empty() ? "-" : o.emit_countermodel;
  write_artifact(path, render_model(bad.model, bad.world, o.format), out);
  return ExitStatus::Refuted;
}

ExitStatus cmd_henkin(const Options& o, std::ostream& out) {
  const Formula f = o.formula.get();
  HenkinOptions opts;
  opts.max_assignments = o.max_lists;
  opts.search.max_steps = o.max_steps;
  const auto built = build_standard_model(f, opts);
  if (!built) {
    out << "theorem: " << f << '\n';
    return ExitStatus::Proved;
  }
  const StandardModel& sm = built->standard;
  out << "standard countermodel: " << sm.worlds.size() << " worlds, truth lemma "
      << (truth_lemma_check(f, sm) ? "verified" : "FAILED") << '\n';
  write_artifact(o.emit_countermodel.empty() ? "-" : o.emit_countermodel,
                 render_model(sm.model, built->world, o.format), out);
  write_artifact(o.emit_sidecar.empty() ? "-" : o.emit_sidecar, standard_worlds_to_json(sm), out);
  return ExitStatus::Refuted;
}

ExitStatus cmd_bisim(const Options& o, std::ostream& out) {
  const Model a = model_from_json(read_file(o.model_file)).model;
  const Model b = model_from_json(read_file(o.model_file_b)).model;
  nlohmann::json pairs = nlohmann::json::array();
  for (const auto& [x, y] : largest_bisimulation(a, b)) pairs.push_back({x, y});
  out << pairs.dump() << '\n';
  return ExitStatus::Proved;
}

ExitStatus cmd_check_proof(const Options& o, std::ostream& out) {
  const HilbertProof pf = proof_from_json(read_file(o.proof_file));
  const ProofCheck check = check_proof(pf);
  if (check) {
    out << "accepted: " << *check.conclusion << '\n';
    return ExitStatus::Proved;
  }
  out << "rejected: " << check.message << '\n';
  return ExitStatus::Refuted;
}

void add_budget_flags(CLI::App* cmd, Options& o) {
  cmd->add_option("--max-steps", o.max_steps, "Ceiling on proof-search rule applications");
  cmd->add_option("--eval-budget", o.eval_budget, "Ceiling on exhaustive model evaluations");
}

void add_format_flag(CLI::App* cmd, Options& o) {
  cmd->add_option("--format", o.format, "Output format: text, structured, graph")
      ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));
}

}  // namespace

ExitStatus run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Decision procedure and model tools for the provability logic GL", "glprover"};
  app.require_subcommand(1);
  Options o;

  auto* prove = app.add_subcommand("prove", "Search for a derivation or a countermodel");
  add_formula_input(prove, o.formula);
  prove->add_option("--emit-proof", o.emit_proof, "Write the derivation here ('-' for stdout)");
  prove->add_option("--emit-countermodel", o.emit_countermodel,
                    "Write the countermodel here (default stdout)");
  add_format_flag(prove, o);
  add_budget_flags(prove, o);

  auto* check_model = app.add_subcommand("check-model", "Evaluate a formula in a model file");
  check_model->add_option("model", o.model_file, "Model file")->required();
  add_formula_input(check_model, o.formula);
  check_model->add_option("--world", o.world, "World to evaluate at (default: falsifiedAt)");

  auto* oracle = app.add_subcommand("oracle", "Exhaustive validity over small ITF frames");
  add_formula_input(oracle, o.formula);
  oracle->add_option("--max-worlds", o.max_worlds, "Largest frame size to enumerate");
  oracle->add_option("--emit-countermodel", o.emit_countermodel,
                     "Write the witness here (default stdout)");
  add_format_flag(oracle, o);
  add_budget_flags(oracle, o);

  auto* henkin = app.add_subcommand("henkin", "Build the standard countermodel");
  add_formula_input(henkin, o.formula);
  henkin->add_option("--max-lists", o.max_lists,
                     "Ceiling on candidate worlds (2^subformulas)");
  henkin->add_option("--emit-countermodel", o.emit_countermodel,
                     "Write the model here (default stdout)");
  henkin->add_option("--emit-sidecar", o.emit_sidecar,
                     "Write the world-to-formula-list map here (default stdout)");
  add_format_flag(henkin, o);
  add_budget_flags(henkin, o);

  auto* bisim = app.add_subcommand("bisim", "Largest bisimulation between two model files");
  bisim->add_option("model_a", o.model_file, "First model")->required();
  bisim->add_option("model_b", o.model_file_b, "Second model")->required();

  auto* check_proof_cmd = app.add_subcommand("check-proof", "Check a Hilbert proof file");
  check_proof_cmd->add_option("proof", o.proof_file, "Proof file")->required();

  std::vector<const char*> argv{"glprover"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? ExitStatus::Proved : ExitStatus::UsageError;
  }

  try {
    if (prove->parsed()) return cmd_prove(o, out);
    if (check_model->parsed()) return cmd_check_model(o, out);
    if (oracle->parsed()) return cmd_oracle(o, out);
    if (henkin->parsed()) return cmd_henkin(o, out);
    if (bisim->parsed()) return cmd_bisim(o, out);
    if (check_proof_cmd->parsed()) return cmd_check_proof(o, out);
  } catch (const ParseError& e) {
    err << "error: formula " << e.what() << '\n';
    return ExitStatus::UsageError;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return ExitStatus::UsageError;
  } catch (const FormatError& e) {
    err << "error: " << e.what() << '\n';
    return ExitStatus::UsageError;
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << '\n';
    return ExitStatus::BudgetExceeded;
  } catch (const Error& e) {
    err << "internal error: " << e.what() << '\n';
    return ExitStatus::InternalError;
  }
  return ExitStatus::UsageError;
}

}  // namespace glprover::cli
