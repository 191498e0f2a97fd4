#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "medv/formula.hpp"
#include "medv/medvedev.hpp"
#include "medv/poset.hpp"
#include "medv/semantics.hpp"

// Text formats. All output is deterministic: worlds in index order,
// variables in name order, order pairs as covering pairs in index order.

namespace medv::io {

using nlohmann::ordered_json;

/// {"elements": [...], "leq": [[a, b], ...]}; the pairs generate the order.
Poset poset_from_json(const ordered_json& j);
Poset read_poset_file(const std::string& path);
ordered_json poset_to_json(const Poset& p);

/// The poset file of frame(n) for any supported n (up to 19), written
/// without materialising a Poset.
void write_frame_json(const MedvedevFrame& f, std::ostream& out);
void write_frame_dot(const MedvedevFrame& f, std::ostream& out);

/// Hasse diagram, edges pointing upward in the order.
std::string hasse_dot(const Poset& p, const std::string& graph_name = "poset");

/// "{{0}, {1}}" style rendering of a set of worlds.
std::string world_set(const Poset& p, ElementSet s);

struct CountermodelView {
  const Model& model;
  int world;
  const std::vector<Formula>& premises;
  const Formula& falsified;
};

std::string countermodel_text(const CountermodelView& c);
ordered_json countermodel_json(const CountermodelView& c);
/// Hasse diagram with each world labelled by the variables true there; the
/// designated world is drawn with a double border.
std::string countermodel_dot(const CountermodelView& c);

ordered_json valuation_json(const Poset& p, const Valuation& v);

}  // namespace medv::io
