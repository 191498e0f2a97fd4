#include "medv/io.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include "medv/errors.hpp"

namespace medv::io {

namespace {

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

std::string dot_quote(const std::string& s) { return "\"" + dot_escape(s) + "\""; }

}  // namespace

Poset poset_from_json(const ordered_json& j) {
  if (!j.is_object() || !j.contains("elements") || !j["elements"].is_array())
    throw DomainError("poset file needs an \"elements\" array");
  std::vector<std::string> elements;
  for (const auto& e : j["elements"]) {
    if (!e.is_string()) throw DomainError("poset elements must be strings");
    elements.push_back(e.get<std::string>());
  }
  std::vector<std::pair<std::string, std::string>> pairs;
  if (j.contains("leq")) {
    if (!j["leq"].is_array()) throw DomainError("\"leq\" must be an array of pairs");
    for (const auto& pr : j["leq"]) {
      if (!pr.is_array() || pr.size() != 2 || !pr[0].is_string() || !pr[1].is_string())
        throw DomainError("each \"leq\" entry must be a pair of element names");
      pairs.emplace_back(pr[0].get<std::string>(), pr[1].get<std::string>());
    }
  }
  return Poset::from_relation(std::move(elements), pairs);
}

Poset read_poset_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open poset file '" + path + "'");
  ordered_json j;
  try {
    j = ordered_json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw DomainError("poset file '" + path + "' is not valid JSON: " + e.what());
  }
  return poset_from_json(j);
}

ordered_json poset_to_json(const Poset& p) {
  ordered_json j;
  j["elements"] = p.names();
  auto pairs = ordered_json::array();
  for (auto [a, b] : p.covers()) pairs.push_back({p.name(a), p.name(b)});
  j["leq"] = std::move(pairs);
  return j;
}

namespace {

template <typename Edge>
void for_each_frame_cover(const MedvedevFrame& f, Edge&& edge) {
  // X is covered by X minus one element.
  for (auto x : f.worlds())
    for (int i = 0; i < f.n(); ++i)
      if (((x >> i) & 1U) && (x & ~(1U << i)) != 0) edge(x, x & ~(1U << i));
}

}  // namespace

void write_frame_json(const MedvedevFrame& f, std::ostream& out) {
  // Streamed by hand: frame(19) has half a million worlds.
  out << "{\n  \"elements\": [";
  bool first = true;
  for (auto x : f.worlds()) {
    out << (first ? "\n    " : ",\n    ") << '"' << subset_name(x) << '"';
    first = false;
  }
  out << "\n  ],\n  \"leq\": [";
  first = true;
  for_each_frame_cover(f, [&](std::uint32_t a, std::uint32_t b) {
    out << (first ? "\n    " : ",\n    ") << "[\"" << subset_name(a) << "\", \"" << subset_name(b)
        << "\"]";
    first = false;
  });
  out << (first ? "]\n}\n" : "\n  ]\n}\n");
}

void write_frame_dot(const MedvedevFrame& f, std::ostream& out) {
  out << "digraph F" << f.n() << " {\n  rankdir=BT;\n";
  for (auto x : f.worlds()) out << "  " << dot_quote(subset_name(x)) << ";\n";
  for_each_frame_cover(f, [&](std::uint32_t a, std::uint32_t b) {
    out << "  " << dot_quote(subset_name(a)) << " -> " << dot_quote(subset_name(b)) << ";\n";
  });
  out << "}\n";
}

std::string hasse_dot(const Poset& p, const std::string& graph_name) {
  std::ostringstream out;
  out << "digraph " << dot_quote(graph_name) << " {\n  rankdir=BT;\n";
  for (const auto& name : p.names()) out << "  " << dot_quote(name) << ";\n";
  for (auto [a, b] : p.covers())
    out << "  " << dot_quote(p.name(a)) << " -> " << dot_quote(p.name(b)) << ";\n";
  out << "}\n";
  return out.str();
}

std::string world_set(const Poset& p, ElementSet s) {
  std::string out = "{";
  bool first = true;
  for (int w = 0; w < p.size(); ++w) {
    if (!contains(s, w)) continue;
    if (!first) out += ", ";
    out += p.name(w);
    first = false;
  }
  return out + "}";
}

ordered_json valuation_json(const Poset& p, const Valuation& v) {
  ordered_json j = ordered_json::object();
  for (const auto& [name, set] : v) {
    auto worlds = ordered_json::array();
    for (int w = 0; w < p.size(); ++w)
      if (contains(set.members, w)) worlds.push_back(p.name(w));
    j[name] = std::move(worlds);
  }
  return j;
}

std::string countermodel_text(const CountermodelView& c) {
  const auto& p = c.model.poset();
  std::ostringstream out;
  out << "worlds:";
  for (const auto& name : p.names()) out << ' ' << name;
  out << "\norder:\n";
  for (auto [a, b] : p.covers()) out << "  " << p.name(a) << " < " << p.name(b) << '\n';
  out << "valuation:\n";
  for (const auto& [name, set] : c.model.valuation())
    out << "  V(" << name << ") = " << world_set(p, set.members) << '\n';
  out << "world: " << p.name(c.world) << '\n';
  for (const auto& g : c.premises) out << "forces: " << render(g) << '\n';
  out << "falsifies: " << render(c.falsified) << '\n';
  return out.str();
}

ordered_json countermodel_json(const CountermodelView& c) {
  const auto& p = c.model.poset();
  auto j = poset_to_json(p);
  ordered_json out;
  out["worlds"] = std::move(j["elements"]);
  out["order"] = std::move(j["leq"]);
  out["valuation"] = valuation_json(p, c.model.valuation());
  out["world"] = p.name(c.world);
  auto premises = ordered_json::array();
  for (const auto& g : c.premises) premises.push_back(render(g));
  out["premises"] = std::move(premises);
  out["falsified"] = render(c.falsified);
  return out;
}

std::string countermodel_dot(const CountermodelView& c) {
  const auto& p = c.model.poset();
  std::ostringstream out;
  out << "digraph countermodel {\n  rankdir=BT;\n";
  for (int w = 0; w < p.size(); ++w) {
    std::string truths;
    for (const auto& [name, set] : c.model.valuation())
      if (contains(set.members, w)) truths += (truths.empty() ? "" : ",") + name;
    const auto label = "\"" + dot_escape(p.name(w)) + "\\n" +
                       (truths.empty() ? std::string("-") : dot_escape(truths)) + "\"";
    out << "  " << dot_quote(p.name(w)) << " [label=" << label
        << (w == c.world ? ", peripheries=2" : "") << "];\n";
  }
  for (auto [a, b] : p.covers())
    out << "  " << dot_quote(p.name(a)) << " -> " << dot_quote(p.name(b)) << ";\n";
  out << "  label=" << dot_quote("falsifies " + render(c.falsified)) << ";\n}\n";
  return out.str();
}

}  // namespace medv::io
