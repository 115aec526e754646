#include "projlink/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "json.hpp"
#include "projlink/error.hpp"

namespace projlink {

namespace {

using nlohmann::json;

std::size_t ix(int i) { return static_cast<std::size_t>(i); }

[[noreturn]] void parse_fail(const std::string& msg) { throw Error(ErrorCode::ParseError, msg); }

json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::exception& e) {
    parse_fail(std::string("invalid JSON: ") + e.what());
  }
}

std::vector<int> int_array(const json& j, const char* what) {
  if (!j.is_array()) parse_fail(std::string(what) + " must be an array");
  std::vector<int> out;
  for (const auto& x : j) {
    if (!x.is_number_integer()) parse_fail(std::string(what) + " must hold integers");
    out.push_back(x.get<int>());
  }
  return out;
}

std::vector<Sign> sign_array(const json& j, const char* what) {
  if (!j.is_array()) parse_fail(std::string(what) + " must be an array");
  std::vector<Sign> out;
  for (const auto& x : j) {
    if (!x.is_string()) parse_fail(std::string(what) + " must hold \"+\" or \"-\"");
    out.push_back(parse_sign(x.get<std::string>()));
  }
  return out;
}

template <typename Range>
void write_ints(std::ostringstream& os, const Range& r) {
  os << "[";
  bool first = true;
  for (int x : r) {
    os << (first ? "" : ", ") << x;
    first = false;
  }
  os << "]";
}

void write_signs(std::ostringstream& os, const std::vector<Sign>& signs) {
  os << "[";
  for (std::size_t i = 0; i < signs.size(); ++i) {
    os << (i ? ", " : "") << '"' << sign_text(signs[i]) << '"';
  }
  os << "]";
}

}  // namespace

Sign parse_sign(std::string_view s) {
  if (s == "+") return Sign::plus;
  if (s == "-") return Sign::minus;
  parse_fail("sign must be \"+\" or \"-\", got \"" + std::string(s) + "\"");
}

std::string_view sign_text(Sign s) { return s == Sign::plus ? "+" : "-"; }

EdgeSignedMap MapDocument::signed_map() const {
  if (!signs) parse_fail("map has no edge_signs");
  return EdgeSignedMap::make(map, *signs);
}

MapDocument parse_map_json(std::string_view text) {
  const json j = parse_json(text);
  if (!j.is_object()) parse_fail("map document must be a JSON object");
  if (!j.contains("rotations") || !j.contains("pairing")) {
    parse_fail("map document needs \"rotations\" and \"pairing\"");
  }
  std::vector<std::vector<Dart>> rotations;
  if (!j["rotations"].is_array()) parse_fail("rotations must be an array of arrays");
  for (const auto& rot : j["rotations"]) rotations.push_back(int_array(rot, "rotation"));
  auto pairing = int_array(j["pairing"], "pairing");
  MapDocument doc{PlanarMap::build(std::move(rotations), std::move(pairing)), std::nullopt};
  if (j.contains("edge_signs")) {
    auto signs = sign_array(j["edge_signs"], "edge_signs");
    if (static_cast<int>(signs.size()) != doc.map.num_edges()) {
      parse_fail("edge_signs has " + std::to_string(signs.size()) + " entries for " +
                 std::to_string(doc.map.num_edges()) + " edges");
    }
    doc.signs = std::move(signs);
  }
  return doc;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) parse_fail("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

MapDocument map_document_from_file(const std::string& path) {
  return parse_map_json(read_file(path));
}

std::string map_to_json(const PlanarMap& m, const std::vector<Sign>* signs) {
  std::ostringstream os;
  os << "{\n  \"rotations\": [";
  for (std::size_t v = 0; v < m.rotations().size(); ++v) {
    os << (v ? ", " : "");
    write_ints(os, m.rotations()[v]);
  }
  os << "],\n  \"pairing\": ";
  write_ints(os, m.pairing());
  if (signs) {
    os << ",\n  \"edge_signs\": ";
    write_signs(os, *signs);
  }
  os << "\n}\n";
  return os.str();
}

std::string map_to_dot(const PlanarMap& m, const DotOptions& options) {
  std::ostringstream os;
  os << "graph " << options.graph_name << " {\n";
  for (int f = 0; f < m.num_faces(); ++f) {
    os << "  // face " << f << ": ";
    write_ints(os, m.faces()[ix(f)]);
    os << "\n";
  }
  auto name = [&](int v) {
    return options.vertex_labels.empty() ? "v" + std::to_string(v)
                                         : options.vertex_labels[ix(v)];
  };
  for (int v = 0; v < m.num_vertices(); ++v) os << "  \"" << name(v) << "\";\n";
  const std::set<int> bold(options.bold_edges.begin(), options.bold_edges.end());
  for (int e = 0; e < m.num_edges(); ++e) {
    const auto [lo, hi] = m.edge_darts(e);
    os << "  \"" << name(m.vertex_of(lo)) << "\" -- \"" << name(m.vertex_of(hi))
       << "\" [label=\"e" << e;
    if (options.signs) os << " " << sign_text((*options.signs)[ix(e)]);
    os << "\"";
    if (bold.count(e)) os << ", style=bold, penwidth=3";
    os << "];\n";
  }
  os << "}\n";
  return os.str();
}

std::string to_pd_text(const LinkDiagram& d) {
  std::ostringstream os;
  for (std::size_t c = 0; c < d.crossings.size(); ++c) {
    const auto& x = d.crossings[c];
    os << (c ? "," : "") << "X[" << x[0] << "," << x[1] << "," << x[2] << "," << x[3] << "]";
  }
  return os.str();
}

LinkDiagram parse_pd_text(std::string_view text) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  }
  if (s.rfind("PD[", 0) == 0) {
    if (s.back() != ']') parse_fail("unterminated PD[...]");
    s = s.substr(3, s.size() - 4);
  }
  LinkDiagram d;
  std::size_t pos = 0;
  while (pos < s.size()) {
    if (s.compare(pos, 2, "X[") != 0) parse_fail("expected X[ at offset " + std::to_string(pos));
    pos += 2;
    const auto close = s.find(']', pos);
    if (close == std::string::npos) parse_fail("unterminated X[");
    std::array<int, 4> entry{};
    std::istringstream body(s.substr(pos, close - pos));
    std::string item;
    int k = 0;
    while (std::getline(body, item, ',')) {
      if (k == 4) parse_fail("crossing with more than four arcs");
      try {
        std::size_t used = 0;
        entry[ix(k)] = std::stoi(item, &used);
        if (used != item.size()) parse_fail("bad arc label '" + item + "'");
      } catch (const std::logic_error&) {
        parse_fail("bad arc label '" + item + "'");
      }
      ++k;
    }
    if (k != 4) parse_fail("crossing with fewer than four arcs");
    d.crossings.push_back(entry);
    pos = close + 1;
    if (pos < s.size()) {
      if (s[pos] != ',') parse_fail("expected ',' between crossings");
      ++pos;
    }
  }
  if (d.crossings.empty()) d.free_loops = 1;
  validate(d);
  return d;
}

std::string diagram_to_json(const LinkDiagram& d) {
  std::ostringstream os;
  os << "{\n  \"pd\": [";
  for (std::size_t c = 0; c < d.crossings.size(); ++c) {
    os << (c ? ", " : "");
    write_ints(os, d.crossings[c]);
  }
  os << "],\n  \"free_loops\": " << d.free_loops << ",\n  \"first_crossing_sign\": \""
     << sign_text(d.first_crossing_sign) << "\"\n}\n";
  return os.str();
}

LinkDiagram parse_diagram_json(std::string_view text) {
  const json j = parse_json(text);
  if (!j.is_object() || !j.contains("pd")) parse_fail("diagram document needs \"pd\"");
  LinkDiagram d;
  if (!j["pd"].is_array()) parse_fail("pd must be an array");
  for (const auto& x : j["pd"]) {
    auto v = int_array(x, "pd entry");
    if (v.size() != 4) parse_fail("pd entries need four labels");
    d.crossings.push_back({v[0], v[1], v[2], v[3]});
  }
  if (j.contains("free_loops")) {
    if (!j["free_loops"].is_number_integer()) parse_fail("free_loops must be an integer");
    d.free_loops = j["free_loops"].get<int>();
  }
  if (j.contains("first_crossing_sign")) {
    if (!j["first_crossing_sign"].is_string()) parse_fail("first_crossing_sign must be a string");
    d.first_crossing_sign = parse_sign(j["first_crossing_sign"].get<std::string>());
  }
  validate(d);
  return d;
}

namespace {

struct Visit {
  int crossing;
  int entry_pos;  // position through which the strand enters
};

// One component as a cyclic list of visits, in travelling order.
std::vector<Visit> trace(const LinkDiagram& d,
                         const std::map<int, std::vector<int>>& ends, int start_slot) {
  std::vector<Visit> out;
  int slot = start_slot;
  do {
    const int c = slot / 4;
    const int p = slot % 4;
    out.push_back({c, p});
    const int exit_slot = 4 * c + (p + 2) % 4;
    const auto& both = ends.at(d.crossings[ix(c)][ix((p + 2) % 4)]);
    slot = both[0] == exit_slot ? both[1] : both[0];
  } while (slot != start_slot);
  return out;
}

int entry_label(const LinkDiagram& d, const Visit& v) {
  return d.crossings[ix(v.crossing)][ix(v.entry_pos)];
}

}  // namespace

GaussCode gauss_code(const LinkDiagram& d) {
  validate(d);
  const int n = static_cast<int>(d.crossings.size());
  std::map<int, std::vector<int>> ends;
  for (int c = 0; c < n; ++c) {
    for (int p = 0; p < 4; ++p) ends[d.crossings[ix(c)][ix(p)]].push_back(4 * c + p);
  }

  std::vector<int> component_of(ix(4 * n), -1);
  std::vector<std::vector<Visit>> components;
  for (int s = 0; s < 4 * n; ++s) {
    if (component_of[ix(s)] != -1) continue;
    // Collect every slot of this strand, undirected.
    auto loop = trace(d, ends, s);
    std::vector<int> slots;
    for (const auto& v : loop) {
      slots.push_back(4 * v.crossing + v.entry_pos);
      slots.push_back(4 * v.crossing + (v.entry_pos + 2) % 4);
    }
    const int id = static_cast<int>(components.size());
    for (int x : slots) component_of[ix(x)] = id;

    // Orientation: along any under passage, else lexicographically least labels.
    std::optional<int> under_entry;
    for (int x : slots) {
      if (x % 4 == 0) {
        under_entry = x;
        break;
      }
    }
    std::vector<std::vector<Visit>> candidates;
    if (under_entry) {
      candidates.push_back(trace(d, ends, *under_entry));
    } else {
      candidates.push_back(loop);
      candidates.push_back(trace(d, ends, 4 * loop.front().crossing +
                                              (loop.front().entry_pos + 2) % 4));
    }
    std::vector<std::pair<std::vector<int>, std::vector<Visit>>> ranked;
    for (auto& cand : candidates) {
      // Rotate so the entry through the smallest label comes first.
      auto smallest = std::min_element(cand.begin(), cand.end(), [&](const Visit& a, const Visit& b) {
        return entry_label(d, a) < entry_label(d, b);
      });
      std::rotate(cand.begin(), smallest, cand.end());
      std::vector<int> labels;
      for (const auto& v : cand) labels.push_back(entry_label(d, v));
      ranked.emplace_back(std::move(labels), cand);
    }
    std::sort(ranked.begin(), ranked.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    components.push_back(ranked.front().second);
  }

  std::sort(components.begin(), components.end(), [&](const auto& a, const auto& b) {
    return entry_label(d, a.front()) < entry_label(d, b.front());
  });

  GaussCode g;
  g.writhe.assign(ix(n), Sign::plus);
  for (const auto& comp : components) {
    std::vector<int> seq;
    for (const auto& v : comp) {
      const bool under = v.entry_pos % 2 == 0;
      seq.push_back(under ? -(v.crossing + 1) : v.crossing + 1);
      if (!under) g.writhe[ix(v.crossing)] = v.entry_pos == 3 ? Sign::plus : Sign::minus;
    }
    g.components.push_back(std::move(seq));
  }
  for (int i = 0; i < d.free_loops; ++i) g.components.emplace_back();
  return g;
}

LinkDiagram diagram_from_gauss(const GaussCode& g) {
  const int n = static_cast<int>(g.writhe.size());
  struct Slots {
    int under_in = 0, under_out = 0, over_in = 0, over_out = 0;
    int seen_over = 0, seen_under = 0;
  };
  std::vector<Slots> slots(ix(n));
  LinkDiagram d;
  int base = 0;
  for (const auto& comp : g.components) {
    const int m = static_cast<int>(comp.size());
    if (m == 0) {
      ++d.free_loops;
      continue;
    }
    for (int j = 0; j < m; ++j) {
      const int entry = comp[ix(j)];
      const int c = std::abs(entry) - 1;
      if (entry == 0 || c >= n) parse_fail("Gauss entry " + std::to_string(entry) + " out of range");
      const int in = base + j + 1;
      const int out = base + (j + 1) % m + 1;
      auto& s = slots[ix(c)];
      if (entry > 0) {
        s.over_in = in;
        s.over_out = out;
        ++s.seen_over;
      } else {
        s.under_in = in;
        s.under_out = out;
        ++s.seen_under;
      }
    }
    base += m;
  }
  for (int c = 0; c < n; ++c) {
    const auto& s = slots[ix(c)];
    if (s.seen_over != 1 || s.seen_under != 1) {
      parse_fail("crossing " + std::to_string(c + 1) + " must appear once over and once under");
    }
    if (g.writhe[ix(c)] == Sign::plus) {
      d.crossings.push_back({s.under_in, s.over_out, s.under_out, s.over_in});
    } else {
      d.crossings.push_back({s.under_in, s.over_in, s.under_out, s.over_out});
    }
  }
  validate(d);
  return d;
}

std::string to_gauss_text(const GaussCode& g) {
  std::ostringstream os;
  os << "gauss:";
  for (std::size_t k = 0; k < g.components.size(); ++k) {
    if (k) os << " |";
    for (int x : g.components[k]) os << " " << x;
  }
  os << "\nwrithe:";
  for (Sign s : g.writhe) os << " " << sign_text(s);
  os << "\n";
  return os.str();
}

GaussCode parse_gauss_text(std::string_view text) {
  GaussCode g;
  std::istringstream in{std::string(text)};
  std::string line;
  bool have_gauss = false;
  bool have_writhe = false;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string head;
    if (!(ls >> head)) continue;
    std::string tok;
    if (head == "gauss:") {
      have_gauss = true;
      g.components.emplace_back();
      while (ls >> tok) {
        if (tok == "|") {
          g.components.emplace_back();
          continue;
        }
        try {
          std::size_t used = 0;
          const int v = std::stoi(tok, &used);
          if (used != tok.size()) parse_fail("bad Gauss entry '" + tok + "'");
          g.components.back().push_back(v);
        } catch (const std::logic_error&) {
          parse_fail("bad Gauss entry '" + tok + "'");
        }
      }
    } else if (head == "writhe:") {
      have_writhe = true;
      while (ls >> tok) g.writhe.push_back(parse_sign(tok));
    } else {
      parse_fail("unknown Gauss line '" + head + "'");
    }
  }
  if (!have_gauss || !have_writhe) parse_fail("Gauss text needs 'gauss:' and 'writhe:' lines");
  return g;
}

std::string gauss_to_json(const GaussCode& g) {
  std::ostringstream os;
  os << "{\n  \"gauss\": [";
  for (std::size_t k = 0; k < g.components.size(); ++k) {
    os << (k ? ", " : "");
    write_ints(os, g.components[k]);
  }
  os << "],\n  \"writhe\": ";
  write_signs(os, g.writhe);
  os << "\n}\n";
  return os.str();
}

GaussCode parse_gauss_json(std::string_view text) {
  const json j = parse_json(text);
  if (!j.is_object() || !j.contains("gauss") || !j.contains("writhe")) {
    parse_fail("Gauss document needs \"gauss\" and \"writhe\"");
  }
  GaussCode g;
  if (!j["gauss"].is_array()) parse_fail("gauss must be an array of arrays");
  for (const auto& comp : j["gauss"]) g.components.push_back(int_array(comp, "gauss component"));
  g.writhe = sign_array(j["writhe"], "writhe");
  return g;
}

LinkDiagram parse_diagram_any(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') {
    const json j = parse_json(text);
    if (j.is_object() && j.contains("gauss")) return diagram_from_gauss(parse_gauss_json(text));
    return parse_diagram_json(text);
  }
  if (text.find("gauss:") != std::string_view::npos) {
    return diagram_from_gauss(parse_gauss_text(text));
  }
  return parse_pd_text(text);
}

}  // namespace projlink
