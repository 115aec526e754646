#include "projlink_cli/cli.hpp"

#include <functional>
#include <map>
#include <optional>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"
#include "projlink/catalog.hpp"
#include "projlink/error.hpp"
#include "projlink/incidence.hpp"
#include "projlink/io.hpp"
#include "projlink/projective.hpp"
#include "projlink/symmetry.hpp"

namespace projlink::cli {

namespace {

using ojson = nlohmann::ordered_json;

constexpr int kInternal = 3;

struct Options {
  std::vector<std::string> inputs;
  std::string format = "json";
  std::string side = "black";
  std::string policy = "either";
  int max_len = 0;
  int samples = 1000;
  std::uint64_t seed = 1;
};

std::string orientation_text(Orientation o) {
  return o == Orientation::preserving ? "preserving" : "reversing";
}

ojson map_json(const PlanarMap& m, const std::vector<Sign>* signs = nullptr) {
  return ojson::parse(map_to_json(m, signs));
}

ojson iso_json(const MapIsomorphism& iso) {
  ojson j;
  j["orientation"] = orientation_text(iso.orientation);
  j["darts"] = iso.darts;
  return j;
}

ojson witness_json(const AntipodalWitness& w) {
  ojson j;
  j["kind"] = w.kind == WitnessKind::symmetry ? "symmetry" : "self_duality";
  j["involution"] = iso_json(w.involution);
  if (w.duality) j["duality"] = iso_json(*w.duality);
  return j;
}

ojson signs_json(const std::vector<Sign>& signs) {
  ojson j = ojson::array();
  for (Sign s : signs) j.push_back(std::string(sign_text(s)));
  return j;
}

void emit(std::ostream& out, const ojson& j) { out << j.dump(2) << "\n"; }

MapDocument load_map(const Options& o) { return map_document_from_file(o.inputs.at(0)); }

EdgeSignedMap load_signed(const Options& o) { return load_map(o).signed_map(); }

std::vector<std::string> incidence_labels(const IncidenceMap& inc) {
  std::vector<std::string> labels;
  for (const auto& t : inc.vertex_tags) {
    labels.push_back((t.kind == IncidenceVertex::Kind::primal ? "v" : "f") +
                     std::to_string(t.index));
  }
  return labels;
}

OrientationPolicy parse_policy(const std::string& s) {
  if (s == "preserving") return OrientationPolicy::preserving;
  if (s == "reversing") return OrientationPolicy::reversing;
  return OrientationPolicy::either;
}

// ---- commands ------------------------------------------------------------

int cmd_validate(const Options& o, std::ostream& out) {
  const auto doc = load_map(o);
  const PlanarMap& m = doc.map;
  ojson j;
  j["valid"] = true;
  j["vertices"] = m.num_vertices();
  j["edges"] = m.num_edges();
  j["faces"] = m.num_faces();
  j["euler_characteristic"] = m.num_vertices() - m.num_edges() + m.num_faces();
  j["signed"] = doc.signs.has_value();
  emit(out, j);
  return kOk;
}

int cmd_dual(const Options& o, std::ostream& out) {
  const auto doc = load_map(o);
  const PlanarMap d = dual(doc.map);
  std::optional<std::vector<Sign>> signs;
  if (doc.signs) signs = negate(doc.signed_map()).signs;
  if (o.format == "dot") {
    DotOptions dot;
    dot.graph_name = "dual";
    dot.signs = signs ? &*signs : nullptr;
    out << map_to_dot(d, dot);
  } else {
    out << map_to_json(d, signs ? &*signs : nullptr);
  }
  return kOk;
}

int cmd_medial(const Options& o, std::ostream& out) {
  const auto doc = load_map(o);
  const Medial med = medial(doc.map);
  if (o.format == "dot") {
    DotOptions dot;
    dot.graph_name = "medial";
    for (int e : med.source_edge) dot.vertex_labels.push_back("e" + std::to_string(e));
    out << map_to_dot(med.map, dot);
    return kOk;
  }
  ojson j;
  j["map"] = map_json(med.map);
  j["source_edge"] = med.source_edge;
  ojson tags = ojson::array();
  for (const auto& t : med.face_tags) {
    tags.push_back({{"kind", t.kind == FaceTag::Kind::vertex ? "vertex" : "face"},
                    {"index", t.index}});
  }
  j["face_tags"] = tags;
  ojson colors = ojson::array();
  for (Color c : checkerboard(med)) colors.push_back(c == Color::black ? "black" : "white");
  j["face_colors"] = colors;
  if (doc.signs) j["vertex_signs"] = signs_json(labeled_medial(doc.signed_map()).vertex_signs);
  emit(out, j);
  return kOk;
}

int cmd_autos(const Options& o, std::ostream& out) {
  const auto m = load_map(o).map;
  const auto autos = automorphisms(m, parse_policy(o.policy));
  ojson j;
  j["policy"] = o.policy;
  j["count"] = autos.size();
  ojson list = ojson::array();
  for (const auto& a : autos) list.push_back(iso_json(a));
  j["automorphisms"] = list;
  emit(out, j);
  return kOk;
}

int cmd_check_antipodal(const Options& o, std::ostream& out) {
  const auto m = load_map(o).map;
  const auto all = antipodal_involutions(m);
  ojson j;
  j["antipodally_symmetric"] = !all.empty();
  j["faces"] = m.num_faces();
  j["witness_count"] = all.size();
  j["witness"] = all.empty() ? ojson(nullptr) : witness_json(all.front());
  emit(out, j);
  return all.empty() ? kNo : kOk;
}

int cmd_check_selfdual(const Options& o, std::ostream& out) {
  const auto m = load_map(o).map;
  const auto iso = is_self_dual(m);
  ojson j;
  j["self_dual"] = iso.has_value();
  j["isomorphism"] = iso ? iso_json(*iso) : ojson(nullptr);
  emit(out, j);
  return iso ? kOk : kNo;
}

int cmd_check_antipodal_selfdual(const Options& o, std::ostream& out) {
  const auto m = load_map(o).map;
  const auto all = antipodal_self_dualities(m);
  ojson j;
  j["antipodally_self_dual"] = !all.empty();
  j["witness_count"] = all.size();
  j["witness"] = all.empty() ? ojson(nullptr) : witness_json(all.front());
  emit(out, j);
  return all.empty() ? kNo : kOk;
}

int write_diagram(const LinkDiagram& d, const std::string& format, std::ostream& out) {
  if (format == "pd") {
    out << to_pd_text(d) << "\n";
  } else if (format == "gauss") {
    out << to_gauss_text(gauss_code(d));
  } else {
    out << diagram_to_json(d);
  }
  return kOk;
}

int cmd_tait2pd(const Options& o, std::ostream& out) {
  return write_diagram(tait_to_diagram(load_signed(o)), o.format, out);
}

int cmd_pd2tait(const Options& o, std::ostream& out) {
  const LinkDiagram d = parse_diagram_any(read_file(o.inputs.at(0)));
  const EdgeSignedMap g = diagram_to_tait(d, o.side == "white" ? Color::white : Color::black);
  if (o.format == "dot") {
    DotOptions dot;
    dot.graph_name = "tait";
    dot.signs = &g.signs;
    out << map_to_dot(g.map, dot);
  } else {
    out << map_to_json(g.map, &g.signs);
  }
  return kOk;
}

int cmd_check_projective(const Options& o, std::ostream& out) {
  const EdgeSignedMap g = load_signed(o);
  const auto report = check_projective(g);
  ojson j;
  j["projective"] = report.projective;
  j["medial_antipodal"] = report.medial_antipodal;
  j["accepting_witness"] =
      report.accepting_witness ? ojson(*report.accepting_witness) : ojson(nullptr);
  ojson list = ojson::array();
  for (const auto& cw : report.witnesses) {
    ojson w;
    w["color"] = behaviour_text(cw.classification.color);
    w["sign"] = behaviour_text(cw.classification.sign);
    w["accepts"] = accepts(cw.classification);
    w["involution"] = iso_json(cw.witness.involution);
    list.push_back(w);
  }
  j["witnesses"] = list;
  j["alternating"] = is_alternating_signature(g);
  if (report.projective) {
    j["nonalternating_criterion"] =
        nonalternating_criterion(g, report) == NonalternatingVerdict::forces_nonalternating
            ? "forces_nonalternating"
            : "inconclusive";
  } else {
    j["nonalternating_criterion"] = nullptr;
  }
  emit(out, j);
  return report.projective ? kOk : kNo;
}

int cmd_incidence(const Options& o, std::ostream& out) {
  const auto inc = incidence_graph(load_map(o).map);
  if (o.format == "dot") {
    DotOptions dot;
    dot.graph_name = "incidence";
    dot.vertex_labels = incidence_labels(inc);
    out << map_to_dot(inc.map, dot);
    return kOk;
  }
  ojson j;
  j["map"] = map_json(inc.map);
  j["vertex_labels"] = incidence_labels(inc);
  emit(out, j);
  return kOk;
}

int cmd_symcycles(const Options& o, std::ostream& out) {
  const auto doc = load_map(o);
  const auto inc = incidence_graph(doc.map);
  const auto cycles = symmetric_cycles(doc.map, o.max_len);
  if (o.format == "dot") {
    DotOptions dot;
    dot.graph_name = "symmetric_cycle";
    dot.vertex_labels = incidence_labels(inc);
    if (!cycles.empty()) dot.bold_edges = cycles.front().cycle.edges;
    out << map_to_dot(inc.map, dot);
    return kOk;
  }
  ojson j;
  j["max_length"] = o.max_len > 0 ? o.max_len : inc.map.num_vertices();
  j["vertex_labels"] = incidence_labels(inc);
  ojson list = ojson::array();
  for (const auto& sc : cycles) {
    ojson c;
    c["vertices"] = sc.cycle.vertices;
    c["edges"] = sc.cycle.edges;
    c["length"] = sc.cycle.length();
    c["half_length"] = sc.half_length;
    c["antipodally_realized"] = sc.antipodally_realized;
    c["sigma"] = iso_json(sc.sigma);
    list.push_back(c);
  }
  j["cycles"] = list;
  if (doc.signs) {
    const EdgeSignedMap g = doc.signed_map();
    const auto parity = parity_consistency(g, check_projective(g), cycles);
    ojson p;
    p["applicable"] = parity.applicable;
    p["matches"] = parity.matches;
    p["mismatches"] = parity.mismatches;
    ojson checks = ojson::array();
    for (const auto& c : parity.checks) {
      checks.push_back({{"cycle", c.cycle},
                        {"witness", c.witness},
                        {"half_length", c.half_length},
                        {"color", behaviour_text(c.color)},
                        {"expected_parity", c.expected_odd ? "odd" : "even"},
                        {"matches", c.matches}});
    }
    p["checks"] = checks;
    j["parity"] = p;
  }
  emit(out, j);
  return kOk;
}

int cmd_bracket(const Options& o, std::ostream& out) {
  const LinkDiagram d = parse_diagram_any(read_file(o.inputs.at(0)));
  const auto b = kauffman_bracket(d);
  ojson j;
  j["crossings"] = d.crossings.size();
  j["components"] = component_count(d);
  j["bracket"] = b.to_string();
  ojson terms = ojson::array();
  for (const auto& [e, c] : b.terms()) terms.push_back({e, c});
  j["terms"] = terms;
  emit(out, j);
  return kOk;
}

int cmd_verify_inversion(const Options& o, std::ostream& out) {
  const auto check = verify_inversion_identity(o.samples, o.seed);
  ojson j;
  j["samples"] = check.samples;
  j["seed"] = o.seed;
  j["max_residual"] = check.max_residual;
  j["pole_residuals"] = {check.pole_residual_north, check.pole_residual_south};
  j["tolerance"] = kInversionTolerance;
  j["passed"] = check.passed;
  emit(out, j);
  return check.passed ? kOk : kNo;
}

int cmd_regress(const Options& o, std::ostream& out) {
  std::vector<CatalogEntry> entries;
  if (o.inputs.empty()) {
    entries = load_catalog();
  } else {
    for (const auto& path : o.inputs) {
      for (auto& e : parse_catalog_json(read_file(path))) entries.push_back(std::move(e));
    }
  }
  const auto report = run_regression(entries);
  ojson j;
  j["entries"] = entries.size();
  j["passed"] = report.passed;
  j["failed"] = report.failed;
  j["unrecorded"] = report.unrecorded;
  j["absent"] = report.absent;
  ojson list = ojson::array();
  for (const auto& r : report.results) {
    list.push_back({{"entry", r.entry},
                    {"field", r.field},
                    {"outcome", std::string(outcome_text(r.outcome))},
                    {"expected", r.expected},
                    {"actual", r.actual}});
  }
  j["results"] = list;
  emit(out, j);
  return report.ok() ? kOk : kNo;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Combinatorial maps, Tait graphs and projective links"};
  app.name("projlink");
  app.require_subcommand(1);
  Options o;

  using Handler = std::function<int(const Options&, std::ostream&)>;
  std::map<CLI::App*, Handler> handlers;

  auto add = [&](const char* name, const char* help, Handler h, bool input_required = true) {
    auto* sub = app.add_subcommand(name, help);
    auto* opt = sub->add_option("input", o.inputs, "Input file");
    if (input_required) opt->required()->expected(1);
    handlers[sub] = std::move(h);
    return sub;
  };
  const auto formats = CLI::IsMember({"json", "dot", "pd", "gauss"});

  add("validate", "Check a map document", cmd_validate);
  add("dual", "Dual map (signs negated when present)", cmd_dual)
      ->add_option("--format", o.format, "json or dot")->check(formats);
  add("medial", "Medial map with face tags and coloring", cmd_medial)
      ->add_option("--format", o.format, "json or dot")->check(formats);
  add("autos", "Map automorphisms", cmd_autos)
      ->add_option("--policy", o.policy, "preserving, reversing or either")
      ->check(CLI::IsMember({"preserving", "reversing", "either"}));
  add("check-antipodal", "Antipodal symmetry of the map", cmd_check_antipodal);
  add("check-selfdual", "Isomorphism onto the dual", cmd_check_selfdual);
  add("check-antipodal-selfdual", "Antipodal self-duality", cmd_check_antipodal_selfdual);
  add("tait2pd", "Link diagram of an edge-signed map", cmd_tait2pd)
      ->add_option("--format", o.format, "json, pd or gauss")->check(formats);
  auto* pd2tait = add("pd2tait", "Checkerboard graph of a diagram", cmd_pd2tait);
  pd2tait->add_option("--side", o.side, "black or white")
      ->check(CLI::IsMember({"black", "white"}));
  pd2tait->add_option("--format", o.format, "json or dot")->check(formats);
  add("check-projective", "Projectivity of L(G, S_E)", cmd_check_projective);
  add("incidence", "Vertex-face incidence map", cmd_incidence)
      ->add_option("--format", o.format, "json or dot")->check(formats);
  auto* sym = add("symcycles", "Symmetric cycles of the incidence map", cmd_symcycles);
  sym->add_option("--max-len", o.max_len, "Longest cycle searched (default: all)");
  sym->add_option("--format", o.format, "json or dot")->check(formats);
  add("bracket", "Kauffman bracket of a diagram", cmd_bracket);
  auto* inversion = add("verify-lemma1", "Numeric check of the negative-inversion identity",
                    cmd_verify_inversion, false);
  inversion->add_option("--samples", o.samples, "Random points")->check(CLI::NonNegativeNumber);
  inversion->add_option("--seed", o.seed, "Generator seed");
  add("regress", "Compare catalog expectations with computed properties", cmd_regress, false);

  std::vector<std::string> storage{"projlink"};
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : storage) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kBadInput;
  }

  CLI::App* chosen = app.get_subcommands().front();
  try {
    return handlers.at(chosen)(o, out);
  } catch (const Error& e) {
    ojson j;
    j["error"] = std::string(to_string(e.code()));
    j["message"] = e.what();
    emit(out, j);
    err << "error: " << to_string(e.code()) << ": " << e.what() << "\n";
    return kBadInput;
  } catch (const std::logic_error& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  }
}

}  // namespace projlink::cli
