#pragma once

// Text formats.
//
// Map JSON:
//   {"rotations": [[darts...] per vertex], "pairing": [partner per dart],
//    "edge_signs": ["+"|"-" per edge]}            (edge_signs optional)
//
// PD text:     X[1,4,2,5],X[3,6,4,1],...   (an optional PD[...] wrapper and
//              whitespace are accepted; the empty string is the unknot)
// PD JSON:     {"pd": [[1,4,2,5], ...], "free_loops": 0, "first_crossing_sign": "+"}
// Gauss text:  gauss: -1 2 -3 1 -2 3 | <next component> ...
//              writhe: + + +
//   Positive entries pass over, negative pass under; crossings are numbered
//   from 1 in PD order; writhe is the right-hand-rule sign of each crossing.
//   An empty component is a crossingless loop.
// Gauss JSON:  {"gauss": [[-1,2,...], ...], "writhe": ["+", ...]}
//
// Every writer is byte-deterministic.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "projlink/combmap.hpp"
#include "projlink/taitlink.hpp"

namespace projlink {

struct MapDocument {
  PlanarMap map;
  std::optional<std::vector<Sign>> signs;

  /// Throws ParseError when the document carries no edge signs.
  EdgeSignedMap signed_map() const;
};

/// Throws ParseError for malformed JSON or schema, and the build_map errors
/// for invalid maps.
MapDocument parse_map_json(std::string_view text);
MapDocument map_document_from_file(const std::string& path);

std::string map_to_json(const PlanarMap& m, const std::vector<Sign>* signs = nullptr);

struct DotOptions {
  std::string graph_name = "map";
  const std::vector<Sign>* signs = nullptr;
  std::vector<int> bold_edges;
  std::vector<std::string> vertex_labels;  // empty: v0, v1, ...
};

/// Undirected multigraph in DOT, face walks as comments.
std::string map_to_dot(const PlanarMap& m, const DotOptions& options = {});

Sign parse_sign(std::string_view s);
std::string_view sign_text(Sign s);

std::string to_pd_text(const LinkDiagram& d);
LinkDiagram parse_pd_text(std::string_view text);
std::string diagram_to_json(const LinkDiagram& d);
LinkDiagram parse_diagram_json(std::string_view text);

struct GaussCode {
  std::vector<std::vector<int>> components;
  std::vector<Sign> writhe;

  friend bool operator==(const GaussCode&, const GaussCode&) = default;
};

/// Components start at their smallest arc label. A component that never
/// passes under is oriented so its label sequence is lexicographically least.
GaussCode gauss_code(const LinkDiagram& d);

/// Arcs are relabelled consecutively along components; exact inverse of
/// gauss_code on diagrams already labelled that way.
LinkDiagram diagram_from_gauss(const GaussCode& g);

std::string to_gauss_text(const GaussCode& g);
GaussCode parse_gauss_text(std::string_view text);
std::string gauss_to_json(const GaussCode& g);
GaussCode parse_gauss_json(std::string_view text);

/// Reads a diagram from PD text, PD JSON, Gauss text or Gauss JSON,
/// recognised by content.
LinkDiagram parse_diagram_any(std::string_view text);

std::string read_file(const std::string& path);

}  // namespace projlink
