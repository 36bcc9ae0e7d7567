#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "digroups/cayley.hpp"
#include "digroups/digroup.hpp"
#include "digroups/enumerate.hpp"
#include "digroups/trans.hpp"

namespace digroups {

// ---------------------------------------------------------------------------
// Permutation text forms
// ---------------------------------------------------------------------------

// One-line notation, e.g. "1 0 2".  The degree is the token count.
Permutation parse_one_line(const std::string& text);

// Disjoint-cycle notation on a known degree, e.g. "(0 1)(2 4)"; "()" is the
// identity.
Permutation parse_cycles(int degree, const std::string& text);

// ---------------------------------------------------------------------------
// .dgt: a digroup as two operation tables
// ---------------------------------------------------------------------------
//
//   digroup <n>
//   <n rows of the left table>
//   ;
//   <n rows of the right table>
//
// '#' starts a comment line; blank lines are ignored.

struct DgtFile {
  OpTable left;
  OpTable right;

  bool operator==(const DgtFile&) const = default;
};

DgtFile parse_dgt(std::istream& in);
DgtFile parse_dgt(const std::string& text);
DgtFile load_dgt(const std::string& path);
// Canonical form; comment lines (without the leading '#') go on top.
std::string format_dgt(const OpTable& left, const OpTable& right,
                       const std::vector<std::string>& comments = {});

// ---------------------------------------------------------------------------
// .tds: construction data for a transformation digroup
// ---------------------------------------------------------------------------
//
//   gamma <size>
//   delta <size>
//   base <point>          (optional, default 0)
//   gen <permutation of gamma>      \  repeated in pairs, in order
//   theta <permutation of delta>    /

struct TdsFile {
  int gamma = 0;
  int delta = 0;
  int base = 0;
  std::vector<Permutation> gens;
  std::vector<Permutation> theta_images;

  bool operator==(const TdsFile&) const = default;
};

TdsFile parse_tds(std::istream& in, bool cycle_notation = false);
TdsFile parse_tds(const std::string& text, bool cycle_notation = false);
TdsFile load_tds(const std::string& path, bool cycle_notation = false);
std::string format_tds(const TdsFile& tds);

// Closes the generators into a group and extends the theta images into a
// verified homomorphism; HomomorphismError when they do not extend.
TransDigroupSpec spec_from_tds(const TdsFile& tds);
TdsFile tds_from_spec(const TransDigroupSpec& spec);

// ---------------------------------------------------------------------------
// Reports
// ---------------------------------------------------------------------------

struct AnalysisSection {
  int order = 0;
  bool valid = false;
  std::vector<Violation> violations;
  std::vector<ElementId> halo;
  std::vector<ElementId> identities;
  std::vector<ElementId> target_center;
  std::vector<ElementId> source_center;
  std::optional<ElementId> bar_unit;      // least bar-unit
  std::vector<InversePair> inverse_table; // per element, w.r.t. bar_unit
};
AnalysisSection analyze(const Digroup& d);

struct EmbeddingSection {
  int gamma = 0;
  int delta = 0;
  int base = 0;
  std::vector<std::pair<int, std::string>> mapping;  // element -> image label
  EmbeddingEvidence evidence;
};
EmbeddingSection embedding_section(const Digroup& d, const Embedding& e);

struct ClassSummary {
  int index = 0;
  int halo_size = 0;
  int identity_count = 0;
  int target_size = 0;
  int source_size = 0;
  std::string provenance;
};
ClassSummary class_summary(int index, const CatalogEntry& entry);

struct ClassificationSection {
  int order = 0;
  std::string method;  // "brute", "constructive" or "both"
  std::vector<ClassSummary> brute_classes;
  std::vector<ClassSummary> constructive_classes;
  std::optional<CrossCheck> check;
};

// Deterministic field order, ascending sets, byte-stable across runs.
struct ReportDocument {
  std::optional<AnalysisSection> analysis;
  std::optional<EmbeddingSection> embedding;
  std::optional<ClassificationSection> classification;
};

std::string report_to_text(const ReportDocument& doc);
std::string report_to_json(const ReportDocument& doc);

// Human-readable one-liner for a violation, e.g.
// "1.1b [x>(y>z) = x>(y<z)] at (x,y,z) = (0, 1, 0)".
std::string describe_violation(const Violation& v);

}  // namespace digroups
