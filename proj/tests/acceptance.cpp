// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on failure.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "glprover/henkin.hpp"
#include "glprover/hilbert.hpp"
#include "glprover/io.hpp"
#include "glprover/semantics.hpp"
#include "glprover/sequent.hpp"
#include "support/generators.hpp"

using namespace glprover;
using cli::ExitStatus;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(const char* f, auto... args) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

ExitStatus run_cli(std::vector<std::string> args, std::string* out = nullptr) {
  std::ostringstream o;
  std::ostringstream e;
  const ExitStatus s = cli::run(args, o, e);
  if (out) *out = o.str();
  return s;
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::filesystem::path scratch(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "glprover-acceptance";
  std::filesystem::create_directories(dir);
  return dir / name;
}

// Runs `prove` with a structured countermodel written to a file and returns
// the status plus the parsed document, if any.
std::pair<ExitStatus, std::optional<ModelDocument>> prove_with_model(const std::string& formula,
                                                                    const std::string& file) {
  const auto path = scratch(file);
  std::filesystem::remove(path);
  const ExitStatus s =
      run_cli({"prove", formula, "--emit-countermodel", path.string(), "--format", "structured"});
  if (!std::filesystem::exists(path)) return {s, std::nullopt};
  return {s, model_from_json(slurp(path))};
}

Outcome reference_theorems() {
  std::vector<std::string> theorems;
  const std::map<std::string, Formula> env = {
      {"p", Formula::atom("p")}, {"q", Formula::atom("q")}, {"r", Formula::atom("p")}};
  for (int id = 1; id <= kSchemaCount; ++id) {
    theorems.push_back(to_string(testing::substitute(schema_pattern(id), env)));
  }
  theorems.push_back("Box (p <-> q) --> (Box p <-> Box q)");
  theorems.push_back("Box (Box False --> False) --> Box False");
  theorems.push_back("Not Box False --> Not Box Diam True");
  theorems.push_back("Not Box Box False --> (Not Box Not Box False && Not Box Not Not Box False)");
  theorems.push_back("Box (p <-> Not Box p) && Not Box Box False --> (Not Box p && Not Box Not p)");

  Outcome o;
  double worst = 0;
  for (const auto& f : theorems) {
    const auto t0 = Clock::now();
    const ExitStatus s = run_cli({"prove", f});
    const double dt = seconds_since(t0);
    worst = std::max(worst, dt);
    if (s != ExitStatus::Proved || dt >= 1.0) {
      o.pass = false;
      o.detail += " [" + f + ": status " + std::to_string(static_cast<int>(s)) + fmt(", %.3fs]", dt);
    }
  }
  o.detail = fmt("%zu formulas, slowest %.4fs", theorems.size(), worst) + o.detail;
  return o;
}

Outcome reflection_principle() {
  const std::string text = "Box (Box p || Box (Not p)) --> (Box p || Box (Not p))";
  const auto t0 = Clock::now();
  const auto [status, doc] = prove_with_model(text, "reflection.json");
  const double dt = seconds_since(t0);
  if (status != ExitStatus::Refuted || !doc || !doc->falsified_at) {
    return {false, "expected status 1 with a countermodel"};
  }
  const Model& m = doc->model;
  const World root = *doc->falsified_at;
  bool with_p = false;
  bool without_p = false;
  for (World w : m.frame.successors(root)) (m.valuation("p", w) ? with_p : without_p) = true;
  const bool ok = is_itf(m.frame) && !holds(m, parse(text), root) && with_p && without_p &&
                  m.frame.worlds.size() == 3 && dt < 1.0;
  return {ok, fmt("%zu worlds, root %u, %.4fs", m.frame.worlds.size(), root, dt)};
}

Outcome consistency_of_gl() {
  const auto [status, doc] = prove_with_model("False", "false.json");
  const bool ok = status == ExitStatus::Refuted && doc && doc->model.frame.worlds.size() == 1 &&
                  doc->model.frame.rel.empty();
  return {ok, fmt("status %d", static_cast<int>(status))};
}

struct CorpusRun {
  std::vector<Formula> corpus = testing::desk_corpus();
  std::vector<SearchResult> results;
  double seconds = 0;
};

Outcome derivation_self_check(const CorpusRun& c) {
  std::size_t proved = 0;
  std::size_t bad = 0;
  for (std::size_t i = 0; i < c.corpus.size(); ++i) {
    if (const auto* pr = std::get_if<Proved>(&c.results[i])) {
      ++proved;
      if (!check_derivation(pr->derivation, c.corpus[i])) ++bad;
    }
  }
  return {bad == 0 && c.seconds < 60.0,
          fmt("%zu/%zu proved derivations verified, corpus search %.2fs", proved - bad, proved, c.seconds)};
}

Outcome soundness(const CorpusRun& c) {
  std::size_t proved = 0;
  std::size_t bad = 0;
  for (std::size_t i = 0; i < c.corpus.size(); ++i) {
    if (std::holds_alternative<Proved>(c.results[i])) {
      ++proved;
      const Verdict v = oracle_valid(c.corpus[i], 3);
      const auto* up = std::get_if<ValidUpTo>(&v);
      if (!up || up->bound != 3) ++bad;
    }
  }
  return {bad == 0, fmt("%zu/%zu theorems valid on ITF frames up to 3 worlds", proved - bad, proved)};
}

Outcome refutation(const CorpusRun& c) {
  std::size_t refuted = 0;
  std::size_t bad = 0;
  for (std::size_t i = 0; i < c.corpus.size(); ++i) {
    if (const auto* r = std::get_if<Refuted>(&c.results[i])) {
      ++refuted;
      if (!is_itf(r->countermodel.frame) || holds(r->countermodel, c.corpus[i], r->falsified_at)) ++bad;
    }
  }
  return {bad == 0, fmt("%zu/%zu countermodels ITF and falsifying", refuted - bad, refuted)};
}

Outcome henkin_agreement(const CorpusRun& c) {
  std::size_t checked = 0;
  std::size_t bad = 0;
  std::size_t models = 0;
  for (std::size_t i = 0; i < c.corpus.size(); ++i) {
    const Formula& f = c.corpus[i];
    if (subformulas(f).size() > 5) continue;
    ++checked;
    const auto sm = build_standard_model(f);
    const bool refuted = std::holds_alternative<Refuted>(c.results[i]);
    if (sm.has_value() != refuted) {
      ++bad;
      continue;
    }
    if (sm) {
      ++models;
      if (!truth_lemma_check(f, sm->standard) || holds(sm->standard.model, f, sm->world)) ++bad;
    }
  }
  return {bad == 0 && checked > 0,
          fmt("%zu formulas, %zu standard models, %zu discrepancies", checked, models, bad)};
}

Outcome frame_correspondence() {
  const auto t0 = Clock::now();
  const Formula lob = parse("Box (Box p --> p) --> Box p");
  std::size_t frames = 0;
  std::size_t bad = 0;
  for (std::size_t n = 1; n <= 3; ++n) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n * n)); ++mask) {
      const Frame fr = frame_from_mask(n, mask);
      ++frames;
      if (frame_valid(fr, lob) != is_transnt_finite(fr)) ++bad;
    }
  }
  const double dt = seconds_since(t0);
  return {bad == 0 && dt < 30.0, fmt("%zu frames, %zu discrepancies, %.3fs", frames, bad, dt)};
}

Outcome itf_is_transnt() {
  std::size_t frames = 0;
  std::size_t itf = 0;
  std::size_t bad = 0;
  for (std::size_t n = 1; n <= 4; ++n) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n * n)); ++mask) {
      const Frame fr = frame_from_mask(n, mask);
      ++frames;
      if (is_itf(fr)) {
        ++itf;
        if (!is_transnt_finite(fr)) ++bad;
      }
    }
  }
  return {bad == 0, fmt("%zu frames, %zu ITF, %zu discrepancies", frames, itf, bad)};
}

Outcome bisimulation_invariance() {
  std::mt19937_64 rng(20211015);
  const auto formulas = testing::enumerate_formulas({"p", "q"}, 5, 3);
  std::size_t pairs = 0;
  std::size_t bad = 0;
  for (int i = 0; i < 50; ++i) {
    const Model a = testing::random_model(rng, 4);
    // Half the pairs are a model against a copy with one world duplicated, so
    // that the largest bisimulation is never trivially empty.
    const Model b = i % 2 == 0 ? testing::duplicate_world(a, *a.frame.worlds.begin())
                               : testing::random_model(rng, 4);
    for (const auto& [x, y] : largest_bisimulation(a, b)) {
      ++pairs;
      for (const auto& f : formulas) {
        if (holds(a, f, x) != holds(b, f, y)) ++bad;
      }
    }
  }
  return {bad == 0, fmt("50 model pairs, %zu bisimilar pairs, %zu formulas, %zu discrepancies", pairs,
                        formulas.size(), bad)};
}

// A single-step change that no longer justifies step `i`.
HilbertProof mutate(const HilbertProof& pf, std::mt19937_64& rng, std::size_t& i) {
  HilbertProof m = pf;
  std::uniform_int_distribution<std::size_t> pick_step(0, pf.steps.size() - 1);
  for (;;) {
    i = pick_step(rng);
    HilbertStep& s = m.steps[i];
    switch (std::uniform_int_distribution<int>(0, 3)(rng)) {
      case 0:
        s.formula = Formula::neg(s.formula);
        return m;
      case 1:
        s.formula = Formula::atom("z" + std::to_string(i));
        return m;
      case 2:
        if (s.kind == HilbertStep::Kind::Axiom) {
          const int id = std::uniform_int_distribution<int>(1, kSchemaCount)(rng);
          if (instantiates(id, s.formula)) break;
          s.schema = id;
          return m;
        }
        if (s.kind == HilbertStep::Kind::ModusPonens) {
          std::swap(s.refs[0], s.refs[1]);
          return m;
        }
        break;
      default:
        if (i > 0 && s.kind != HilbertStep::Kind::Axiom) {
          // Point a premise at some other earlier step with a different formula.
          const std::size_t r = std::uniform_int_distribution<std::size_t>(0, i - 1)(rng);
          if (pf.steps[r].formula == pf.steps[s.refs[0]].formula) break;
          s.refs[0] = r;
          return m;
        }
        break;
    }
    m = pf;
  }
}

Outcome hilbert_checker() {
  HilbertProof boxed = proof_of_self_implication(Formula::atom("p"));
  boxed.steps.push_back(HilbertStep::necessitation(4, parse("Box (p --> p)")));
  const std::vector<HilbertProof> shipped = {proof_of_verum(),
                                             proof_of_self_implication(Formula::atom("p")), boxed};
  const auto verum = check_proof(shipped[0]);
  const auto self = check_proof(shipped[1]);
  bool ok = verum && *verum.conclusion == Formula::verum() && self &&
            *self.conclusion == parse("p --> p") && check_proof(shipped[2]);

  std::mt19937_64 rng(11);
  std::size_t rejected = 0;
  for (int k = 0; k < 100; ++k) {
    std::size_t i = 0;
    const HilbertProof m = mutate(shipped[static_cast<std::size_t>(k) % shipped.size()], rng, i);
    const auto res = check_proof(m);
    if (!res && res.failed_step == i) ++rejected;
  }
  ok = ok && rejected == 100;
  return {ok, fmt("shipped proofs %s, %zu/100 mutations rejected at the mutated step",
                  verum && self ? "accepted" : "REJECTED", rejected)};
}

}  // namespace

int main() {
  CorpusRun corpus;
  const auto t0 = Clock::now();
  for (const auto& f : corpus.corpus) corpus.results.push_back(search(f));
  corpus.seconds = seconds_since(t0);

  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"reference theorems are proved", reference_theorems},
      {"reflection principle refuted with a 3-world witness", reflection_principle},
      {"False is refuted by a single world", consistency_of_gl},
      {"derivation self-check over the corpus", [&] { return derivation_self_check(corpus); }},
      {"soundness against the ITF oracle", [&] { return soundness(corpus); }},
      {"refutation countermodels re-checked", [&] { return refutation(corpus); }},
      {"standard model agrees with search", [&] { return henkin_agreement(corpus); }},
      {"Lob frame correspondence on <=3 worlds", frame_correspondence},
      {"ITF frames are transitive and acyclic on <=4 worlds", itf_is_transnt},
      {"bisimilar worlds agree on modal formulas", bisimulation_invariance},
      {"Hilbert checker accepts proofs and rejects mutations", hilbert_checker},
  };

  int failures = 0;
  int n = 0;
  for (const auto& [name, fn] : criteria) {
    ++n;
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failures;
    std::printf("%s %2d  %s: %s\n", o.pass ? "PASS" : "FAIL", n, name, o.detail.c_str());
  }
  std::printf("%d/%d criteria passed\n", n - failures, n);
  return failures == 0 ? 0 : 1;
}
