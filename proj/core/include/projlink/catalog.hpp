#pragma once

// Worked examples shipped with the library, each with the properties it is
// known to have, and a regression runner comparing them with computed values.
//
// Fixture schema (fixtures/*.json, embedded at build time). A file is either
// one entry or {"entries": [entry, ...]}. An entry is a map document (see
// io.hpp) extended with
//   "name": "...", "description": "...",
//   "expected": {"alpha2": "color-<b>,sign-<b>" | "none",
//                "alternating": bool, "self_dual": bool,
//                "antipodally_self_dual": bool, "antipodally_symmetric": bool,
//                "medial_antipodally_symmetric": bool, "projective": bool}
// where <b> is preserving, reversing or neither. Any expected key may be
// left out (unrecorded). An entry without "rotations" has no map; its
// expectations are kept but never checked. A file without "expected" is a
// plain map document and is not part of the catalog.
//
// "alpha2" is the class of the accepting witness when the presentation is
// projective, otherwise the class shared by every witness, "none" when there
// is no witness and "mixed" when witnesses disagree.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "projlink/projective.hpp"
#include "projlink/taitlink.hpp"

namespace projlink {

struct ExpectedProperties {
  std::optional<std::string> alpha2;
  std::optional<bool> alternating;
  std::optional<bool> self_dual;
  std::optional<bool> antipodally_self_dual;
  std::optional<bool> antipodally_symmetric;  // of the Tait graph itself
  std::optional<bool> medial_antipodally_symmetric;
  std::optional<bool> projective;
};

struct CatalogEntry {
  std::string name;
  std::string description;
  std::optional<EdgeSignedMap> signed_map;
  ExpectedProperties expected;
};

struct ComputedProperties {
  std::string alpha2;
  bool alternating = false;
  bool self_dual = false;
  bool antipodally_self_dual = false;
  bool antipodally_symmetric = false;
  bool medial_antipodally_symmetric = false;
  bool projective = false;
};

std::string alpha2_text(const Alpha2Classification& c);
std::string behaviour_text(Behaviour b);

ComputedProperties compute_properties(const EdgeSignedMap& g);

/// Entries of one fixture file; empty for a plain map document.
std::vector<CatalogEntry> parse_catalog_json(std::string_view text);

/// Every embedded fixture, sorted by name.
std::vector<CatalogEntry> load_catalog();

/// Looks an entry up by name; nullopt when missing.
std::optional<CatalogEntry> find_entry(const std::vector<CatalogEntry>& entries,
                                       std::string_view name);

enum class Outcome { pass, fail, unrecorded, absent };
std::string_view outcome_text(Outcome o);

struct FieldResult {
  std::string entry;
  std::string field;
  Outcome outcome = Outcome::unrecorded;
  std::string expected;  // empty when unrecorded
  std::string actual;    // empty when the map is absent
};

struct RegressionReport {
  std::vector<FieldResult> results;  // sorted by (entry, field)
  int passed = 0;
  int failed = 0;
  int unrecorded = 0;
  int absent = 0;

  bool ok() const { return failed == 0; }
};

RegressionReport run_regression(const std::vector<CatalogEntry>& entries);

}  // namespace projlink
