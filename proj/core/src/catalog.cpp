#include "projlink/catalog.hpp"

#include <algorithm>
#include <set>
#include <tuple>

#include "json.hpp"
#include "projlink/error.hpp"
#include "projlink/io.hpp"
#include "projlink/symmetry.hpp"

namespace projlink {

namespace detail {
const std::vector<std::pair<std::string_view, std::string_view>>& embedded_fixtures();
}

namespace {

using nlohmann::json;

CatalogEntry entry_from_json(const json& j) {
  if (!j.contains("name") || !j["name"].is_string()) {
    throw Error(ErrorCode::ParseError, "catalog entry needs a string \"name\"");
  }
  CatalogEntry e;
  e.name = j["name"].get<std::string>();
  if (j.contains("description") && j["description"].is_string()) {
    e.description = j["description"].get<std::string>();
  }
  if (j.contains("rotations")) {
    const auto doc = parse_map_json(j.dump());
    if (!doc.signs) throw Error(ErrorCode::ParseError, e.name + ": catalog maps need edge_signs");
    e.signed_map = doc.signed_map();
  }
  const json& x = j.at("expected");
  if (!x.is_object()) throw Error(ErrorCode::ParseError, e.name + ": expected must be an object");
  auto flag = [&](const char* key, std::optional<bool>& out) {
    if (!x.contains(key)) return;
    if (!x[key].is_boolean()) {
      throw Error(ErrorCode::ParseError, e.name + ": expected." + key + " must be boolean");
    }
    out = x[key].get<bool>();
  };
  if (x.contains("alpha2")) {
    if (!x["alpha2"].is_string()) {
      throw Error(ErrorCode::ParseError, e.name + ": expected.alpha2 must be a string");
    }
    e.expected.alpha2 = x["alpha2"].get<std::string>();
  }
  flag("alternating", e.expected.alternating);
  flag("self_dual", e.expected.self_dual);
  flag("antipodally_self_dual", e.expected.antipodally_self_dual);
  flag("antipodally_symmetric", e.expected.antipodally_symmetric);
  flag("medial_antipodally_symmetric", e.expected.medial_antipodally_symmetric);
  flag("projective", e.expected.projective);
  return e;
}

std::string bool_text(bool b) { return b ? "true" : "false"; }

}  // namespace

std::string behaviour_text(Behaviour b) {
  switch (b) {
    case Behaviour::preserving: return "preserving";
    case Behaviour::reversing: return "reversing";
    case Behaviour::neither: return "neither";
  }
  return "neither";
}

std::string alpha2_text(const Alpha2Classification& c) {
  return "color-" + behaviour_text(c.color) + ",sign-" + behaviour_text(c.sign);
}

ComputedProperties compute_properties(const EdgeSignedMap& g) {
  ComputedProperties p;
  const auto report = check_projective(g);
  if (report.accepting_witness) {
    p.alpha2 = alpha2_text(report.witnesses[static_cast<std::size_t>(*report.accepting_witness)]
                               .classification);
  } else if (report.witnesses.empty()) {
    p.alpha2 = "none";
  } else {
    std::set<std::string> classes;
    for (const auto& cw : report.witnesses) classes.insert(alpha2_text(cw.classification));
    p.alpha2 = classes.size() == 1 ? *classes.begin() : "mixed";
  }
  p.alternating = is_alternating_signature(g);
  p.self_dual = is_self_dual(g.map).has_value();
  p.antipodally_self_dual = is_antipodally_self_dual(g.map).has_value();
  p.antipodally_symmetric = is_antipodally_symmetric(g.map).has_value();
  p.medial_antipodally_symmetric = report.medial_antipodal;
  p.projective = report.projective;
  return p;
}

std::vector<CatalogEntry> parse_catalog_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text.begin(), text.end());
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("invalid JSON: ") + e.what());
  }
  std::vector<CatalogEntry> out;
  if (j.is_object() && j.contains("entries")) {
    for (const auto& item : j["entries"]) out.push_back(entry_from_json(item));
  } else if (j.is_object() && j.contains("expected")) {
    out.push_back(entry_from_json(j));
  }
  return out;
}

std::vector<CatalogEntry> load_catalog() {
  std::vector<CatalogEntry> out;
  for (const auto& [file, text] : detail::embedded_fixtures()) {
    try {
      for (auto& e : parse_catalog_json(text)) out.push_back(std::move(e));
    } catch (const Error& e) {
      throw Error(e.code(), std::string(file) + ": " + e.what());
    }
  }
  std::sort(out.begin(), out.end(),
            [](const CatalogEntry& a, const CatalogEntry& b) { return a.name < b.name; });
  return out;
}

std::optional<CatalogEntry> find_entry(const std::vector<CatalogEntry>& entries,
                                       std::string_view name) {
  for (const auto& e : entries) {
    if (e.name == name) return e;
  }
  return std::nullopt;
}

std::string_view outcome_text(Outcome o) {
  switch (o) {
    case Outcome::pass: return "pass";
    case Outcome::fail: return "fail";
    case Outcome::unrecorded: return "unrecorded";
    case Outcome::absent: return "absent";
  }
  return "unrecorded";
}

RegressionReport run_regression(const std::vector<CatalogEntry>& entries) {
  RegressionReport report;
  for (const auto& e : entries) {
    std::optional<ComputedProperties> actual;
    if (e.signed_map) actual = compute_properties(*e.signed_map);

    auto record = [&](const char* field, const std::optional<std::string>& expected,
                      const std::string& computed) {
      FieldResult r{e.name, field, Outcome::unrecorded, expected.value_or(""), ""};
      if (!actual) {
        r.outcome = Outcome::absent;
      } else {
        r.actual = computed;
        if (expected) r.outcome = *expected == computed ? Outcome::pass : Outcome::fail;
      }
      report.results.push_back(std::move(r));
    };
    auto flag = [&](const char* field, const std::optional<bool>& expected, bool computed) {
      record(field, expected ? std::optional<std::string>(bool_text(*expected)) : std::nullopt,
             bool_text(computed));
    };
    const ComputedProperties c = actual.value_or(ComputedProperties{});
    record("alpha2", e.expected.alpha2, c.alpha2);
    flag("alternating", e.expected.alternating, c.alternating);
    flag("antipodally_self_dual", e.expected.antipodally_self_dual, c.antipodally_self_dual);
    flag("antipodally_symmetric", e.expected.antipodally_symmetric, c.antipodally_symmetric);
    flag("medial_antipodally_symmetric", e.expected.medial_antipodally_symmetric,
         c.medial_antipodally_symmetric);
    flag("projective", e.expected.projective, c.projective);
    flag("self_dual", e.expected.self_dual, c.self_dual);
  }
  std::sort(report.results.begin(), report.results.end(), [](const auto& a, const auto& b) {
    return std::tie(a.entry, a.field) < std::tie(b.entry, b.field);
  });
  for (const auto& r : report.results) {
    switch (r.outcome) {
      case Outcome::pass: ++report.passed; break;
      case Outcome::fail: ++report.failed; break;
      case Outcome::unrecorded: ++report.unrecorded; break;
      case Outcome::absent: ++report.absent; break;
    }
  }
  return report;
}

}  // namespace projlink
