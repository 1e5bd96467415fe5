#include "glprover/io.hpp"

#include <json.hpp>
#include <sstream>

#include "glprover/error.hpp"

namespace glprover {

using nlohmann::json;

namespace {

template <typename F>
auto guarded(std::string_view what, F&& body) {
  try {
    return body();
  } catch (const json::exception& e) {
    throw FormatError(std::string(what) + ": " + e.what());
  }
}

json model_json(const Model& m, std::optional<World> falsified_at) {
  json j;
  j["worlds"] = json::array();
  for (World w : m.frame.worlds) j["worlds"].push_back(w);
  j["rel"] = json::array();
  for (const auto& [x, y] : m.frame.rel) j["rel"].push_back({x, y});
  j["val"] = json::object();
  for (const auto& [atom, ws] : m.val) {
    j["val"][atom] = json::array();
    for (World w : ws) j["val"][atom].push_back(w);
  }
  if (falsified_at) j["falsifiedAt"] = *falsified_at;
  return j;
}

std::string true_atoms(const Model& m, World w) {
  std::string out;
  for (const auto& [atom, ws] : m.val) {
    if (!ws.contains(w)) continue;
    if (!out.empty()) out += ", ";
    out += atom;
  }
  return out;
}

World as_world(const json& j) {
  if (!j.is_number_unsigned()) throw FormatError("world ids must be natural numbers");
  return j.get<World>();
}

json labelled_json(const Labelled& l) { return json::array({l.label, to_string(l.formula)}); }

Labelled labelled_from(const json& j) {
  if (!j.is_array() || j.size() != 2) throw FormatError("labelled formula must be [label, formula]");
  return {as_world(j[0]), parse(j[1].get<std::string>())};
}

json rel_json(const std::set<RelAtom>& rel) {
  json a = json::array();
  for (const auto& [x, y] : rel) a.push_back({x, y});
  return a;
}

json sequent_json(const Sequent& s) {
  json j;
  j["rel"] = rel_json(s.rel);
  j["left"] = json::array();
  for (const auto& l : s.left) j["left"].push_back(labelled_json(l));
  j["right"] = json::array();
  for (const auto& r : s.right) j["right"].push_back(labelled_json(r));
  return j;
}

Sequent sequent_from(const json& j) {
  Sequent s;
  for (const auto& a : j.at("rel")) s.rel.insert({as_world(a.at(0)), as_world(a.at(1))});
  for (const auto& l : j.at("left")) s.left.insert(labelled_from(l));
  for (const auto& r : j.at("right")) s.right.insert(labelled_from(r));
  return s;
}

json derivation_json(const Derivation& d) {
  json j;
  j["rule"] = std::string(rule_name(d.rule));
  json p = json::object();
  if (d.principal.formula) {
    p["label"] = d.principal.formula->label;
    p["formula"] = to_string(d.principal.formula->formula);
  }
  if (!d.principal.atoms.empty()) {
    p["atoms"] = json::array();
    for (const auto& [x, y] : d.principal.atoms) p["atoms"].push_back({x, y});
  }
  if (d.principal.fresh) p["fresh"] = *d.principal.fresh;
  j["principal"] = std::move(p);
  j["sequent"] = sequent_json(d.sequent);
  j["premises"] = json::array();
  for (const auto& sub : d.premises) j["premises"].push_back(derivation_json(sub));
  return j;
}

Derivation derivation_from(const json& j) {
  Derivation d;
  const auto rule = rule_from_name(j.at("rule").get<std::string>());
  if (!rule) throw FormatError("unknown rule " + j.at("rule").dump());
  d.rule = *rule;
  const json& p = j.at("principal");
  if (p.contains("formula")) {
    d.principal.formula = Labelled{as_world(p.at("label")), parse(p.at("formula").get<std::string>())};
  }
  if (p.contains("atoms")) {
    for (const auto& a : p.at("atoms")) d.principal.atoms.push_back({as_world(a.at(0)), as_world(a.at(1))});
  }
  if (p.contains("fresh")) d.principal.fresh = as_world(p.at("fresh"));
  d.sequent = sequent_from(j.at("sequent"));
  for (const auto& sub : j.at("premises")) d.premises.push_back(derivation_from(sub));
  return d;
}

std::string principal_to_string(const Derivation& d) {
  std::string out;
  if (d.principal.formula) {
    out += std::to_string(d.principal.formula->label) + " : " + to_string(d.principal.formula->formula);
  }
  for (const auto& [x, y] : d.principal.atoms) {
    if (!out.empty()) out += ", ";
    out += std::to_string(x) + "R" + std::to_string(y);
  }
  if (d.principal.fresh) out += ", fresh " + std::to_string(*d.principal.fresh);
  return out;
}

void derivation_text(std::ostringstream& os, const Derivation& d, std::size_t depth) {
  os << std::string(2 * depth, ' ') << sequent_to_string(d.sequent) << "   [" << rule_name(d.rule)
     << ": " << principal_to_string(d) << "]\n";
  for (const auto& sub : d.premises) derivation_text(os, sub, depth + 1);
}

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

void derivation_dot(std::ostringstream& os, const Derivation& d, std::size_t& next) {
  const std::size_t id = next++;
  os << "  n" << id << " [label=\"" << dot_escape(sequent_to_string(d.sequent)) << "\\n"
     << rule_name(d.rule) << "\"];\n";
  for (const auto& sub : d.premises) {
    const std::size_t child = next;
    derivation_dot(os, sub, next);
    os << "  n" << child << " -> n" << id << ";\n";
  }
}

}  // namespace

std::string model_to_json(const Model& m, std::optional<World> falsified_at) {
  return model_json(m, falsified_at).dump(2) + "\n";
}

ModelDocument model_from_json(std::string_view text) {
  return guarded("model", [&] {
    const json j = json::parse(text);
    if (!j.is_object()) throw FormatError("model must be a JSON object");
    ModelDocument doc;
    for (const auto& w : j.at("worlds")) doc.model.frame.worlds.insert(as_world(w));
    for (const auto& a : j.at("rel")) {
      if (!a.is_array() || a.size() != 2) throw FormatError("rel entries must be [from, to]");
      doc.model.frame.rel.insert({as_world(a[0]), as_world(a[1])});
    }
    if (!doc.model.frame.endpoints_in_worlds()) {
      throw FormatError("rel mentions a world not listed in worlds");
    }
    if (j.contains("val")) {
      for (const auto& [atom, ws] : j.at("val").items()) {
        auto& set = doc.model.val[atom];
        for (const auto& w : ws) {
          const World v = as_world(w);
          if (!doc.model.frame.worlds.contains(v)) {
            throw FormatError("val of " + atom + " mentions an unknown world");
          }
          set.insert(v);
        }
      }
    }
    if (j.contains("falsifiedAt")) doc.falsified_at = as_world(j.at("falsifiedAt"));
    return doc;
  });
}

std::string model_to_text(const Model& m, std::optional<World> falsified_at) {
  std::ostringstream os;
  os << "worlds:";
  for (World w : m.frame.worlds) os << ' ' << w;
  os << "\nrel:";
  for (const auto& [x, y] : m.frame.rel) os << ' ' << x << "->" << y;
  os << '\n';
  for (World w : m.frame.worlds) os << "  " << w << ": {" << true_atoms(m, w) << "}\n";
  if (falsified_at) os << "falsified at: " << *falsified_at << '\n';
  return os.str();
}

std::string model_to_dot(const Model& m, std::optional<World> falsified_at) {
  std::ostringstream os;
  os << "digraph countermodel {\n";
  for (World w : m.frame.worlds) {
    os << "  w" << w << " [label=\"" << w << " {" << dot_escape(true_atoms(m, w)) << "}\"";
    if (falsified_at && *falsified_at == w) os << ", shape=doublecircle";
    os << "];\n";
  }
  for (const auto& [x, y] : m.frame.rel) os << "  w" << x << " -> w" << y << ";\n";
  os << "}\n";
  return os.str();
}

std::string derivation_to_json(const Derivation& d) { return derivation_json(d).dump(2) + "\n"; }

Derivation derivation_from_json(std::string_view text) {
  return guarded("derivation", [&] { return derivation_from(json::parse(text)); });
}

std::string derivation_to_text(const Derivation& d) {
  std::ostringstream os;
  derivation_text(os, d, 0);
  return os.str();
}

std::string derivation_to_dot(const Derivation& d) {
  std::ostringstream os;
  os << "digraph derivation {\n  node [shape=box];\n";
  std::size_t next = 0;
  derivation_dot(os, d, next);
  os << "}\n";
  return os.str();
}

std::string sequent_to_string(const Sequent& s) {
  std::string out;
  auto append = [&out](const std::string& item) {
    if (!out.empty() && out.back() != ' ') out += ", ";
    out += item;
  };
  for (const auto& [x, y] : s.rel) append(std::to_string(x) + "R" + std::to_string(y));
  for (const auto& l : s.left) append(std::to_string(l.label) + " : " + to_string(l.formula));
  out += out.empty() ? "=> " : " => ";
  for (const auto& r : s.right) append(std::to_string(r.label) + " : " + to_string(r.formula));
  return out;
}

std::string proof_to_json(const HilbertProof& pf) {
  json steps = json::array();
  for (const auto& s : pf.steps) {
    json j;
    switch (s.kind) {
      case HilbertStep::Kind::Axiom:
        j["kind"] = "axiom";
        j["schema"] = s.schema;
        break;
      case HilbertStep::Kind::ModusPonens: j["kind"] = "mp"; break;
      case HilbertStep::Kind::Necessitation: j["kind"] = "nec"; break;
    }
    if (s.kind != HilbertStep::Kind::Axiom) j["refs"] = s.refs;
    j["formula"] = to_string(s.formula);
    steps.push_back(std::move(j));
  }
  return json{{"steps", std::move(steps)}}.dump(2) + "\n";
}

HilbertProof proof_from_json(std::string_view text) {
  return guarded("proof", [&] {
    const json j = json::parse(text);
    if (!j.is_object() || !j.contains("steps") || !j.at("steps").is_array()) {
      throw FormatError("proof must be an object with a steps array");
    }
    if (j.at("steps").empty()) throw FormatError("proof has no steps");
    HilbertProof pf;
    for (const auto& s : j.at("steps")) {
      HilbertStep step;
      const auto kind = s.at("kind").get<std::string>();
      if (kind == "axiom") {
        step.kind = HilbertStep::Kind::Axiom;
        step.schema = s.at("schema").get<int>();
      } else if (kind == "mp") {
        step.kind = HilbertStep::Kind::ModusPonens;
      } else if (kind == "nec") {
        step.kind = HilbertStep::Kind::Necessitation;
      } else {
        throw FormatError("unknown step kind '" + kind + "'");
      }
      if (s.contains("refs")) {
        for (const auto& r : s.at("refs")) step.refs.push_back(r.get<std::size_t>());
      }
      step.formula = parse(s.at("formula").get<std::string>());
      pf.steps.push_back(std::move(step));
    }
    return pf;
  });
}

std::string standard_worlds_to_json(const StandardModel& sm) {
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  for (std::size_t i = 0; i < sm.worlds.size(); ++i) {
    nlohmann::ordered_json list = nlohmann::ordered_json::array();
    for (const auto& f : sm.worlds[i]) list.push_back(to_string(f));
    j[std::to_string(i)] = std::move(list);
  }
  return j.dump(2) + "\n";
}

}  // namespace glprover
