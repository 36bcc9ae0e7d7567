#include "digroups/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

#include "digroups/errors.hpp"

namespace digroups {

namespace {

using ordered_json = nlohmann::ordered_json;

std::vector<std::string> significant_lines(std::istream& in) {
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos) continue;
    if (line[first] == '#') continue;
    lines.push_back(line);
  }
  return lines;
}

std::vector<std::string> tokens_of(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> toks;
  std::string t;
  while (in >> t) toks.push_back(t);
  return toks;
}

int parse_int(const std::string& tok, const char* what) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(tok, &used);
  } catch (const std::exception&) {
    throw ParseError(std::string("expected an integer for ") + what +
                     ", got '" + tok + "'");
  }
  if (used != tok.size()) {
    throw ParseError(std::string("trailing characters in ") + what + " '" +
                     tok + "'");
  }
  return v;
}

std::vector<int> parse_int_row(const std::string& line, int expected,
                               const char* what) {
  const std::vector<std::string> toks = tokens_of(line);
  if (static_cast<int>(toks.size()) != expected) {
    throw ParseError(std::string("expected ") + std::to_string(expected) +
                     " entries in " + what + ", got " +
                     std::to_string(toks.size()));
  }
  std::vector<int> row;
  row.reserve(toks.size());
  for (const std::string& t : toks) row.push_back(parse_int(t, what));
  return row;
}

}  // namespace

Permutation parse_one_line(const std::string& text) {
  const std::vector<std::string> toks = tokens_of(text);
  if (toks.empty()) throw ParseError("empty permutation");
  std::vector<int> im;
  im.reserve(toks.size());
  for (const std::string& t : toks) im.push_back(parse_int(t, "permutation"));
  return Permutation(std::move(im));
}

Permutation parse_cycles(int degree, const std::string& text) {
  if (degree < 1) throw ParseError("cycle notation needs a positive degree");
  std::vector<int> im(degree);
  for (int i = 0; i < degree; ++i) im[i] = i;
  std::vector<bool> moved(degree, false);

  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  };
  skip_space();
  bool any_cycle = false;
  while (pos < text.size()) {
    if (text[pos] != '(') throw ParseError("expected '(' in cycle notation");
    ++pos;
    std::vector<int> cycle;
    while (true) {
      skip_space();
      if (pos >= text.size()) throw ParseError("unterminated cycle");
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      std::size_t start = pos;
      while (pos < text.size() && text[pos] != ' ' && text[pos] != '\t' &&
             text[pos] != ')') {
        ++pos;
      }
      const int p = parse_int(text.substr(start, pos - start), "cycle point");
      if (p < 0 || p >= degree) {
        throw ParseError("cycle point " + std::to_string(p) +
                         " out of range for degree " + std::to_string(degree));
      }
      if (moved[p]) throw ParseError("cycles are not disjoint");
      moved[p] = true;
      cycle.push_back(p);
    }
    any_cycle = true;
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      im[cycle[k]] = cycle[(k + 1) % cycle.size()];
    }
    skip_space();
  }
  if (!any_cycle) throw ParseError("empty cycle expression");
  return Permutation(std::move(im));
}

// ---------------------------------------------------------------------------
// .dgt
// ---------------------------------------------------------------------------

DgtFile parse_dgt(std::istream& in) {
  const std::vector<std::string> lines = significant_lines(in);
  std::size_t at = 0;
  auto next = [&](const char* what) -> const std::string& {
    if (at >= lines.size()) {
      throw ParseError(std::string("unexpected end of file, expected ") + what);
    }
    return lines[at++];
  };

  const std::vector<std::string> header = tokens_of(next("'digroup <n>'"));
  if (header.size() != 2 || header[0] != "digroup") {
    throw ParseError("first line must be 'digroup <n>'");
  }
  const int n = parse_int(header[1], "carrier size");
  if (n < 1) throw ParseError("carrier size must be >= 1");

  auto read_table = [&](const char* what) {
    std::vector<std::vector<int>> rows;
    rows.reserve(n);
    for (int i = 0; i < n; ++i) rows.push_back(parse_int_row(next(what), n, what));
    return OpTable::from_rows(rows);
  };

  OpTable left = read_table("a left table row");
  const std::string& sep = next("';' separator");
  if (tokens_of(sep) != std::vector<std::string>{";"}) {
    throw ParseError("expected ';' between the two tables");
  }
  OpTable right = read_table("a right table row");
  if (at != lines.size()) throw ParseError("trailing content after the tables");
  return DgtFile{std::move(left), std::move(right)};
}

DgtFile parse_dgt(const std::string& text) {
  std::istringstream in(text);
  return parse_dgt(in);
}

DgtFile load_dgt(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return parse_dgt(in);
}

std::string format_dgt(const OpTable& left, const OpTable& right,
                       const std::vector<std::string>& comments) {
  std::ostringstream out;
  for (const std::string& c : comments) out << "# " << c << '\n';
  const int n = left.size();
  out << "digroup " << n << '\n';
  auto emit = [&](const OpTable& t) {
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y) {
        if (y) out << ' ';
        out << t.at(x, y);
      }
      out << '\n';
    }
  };
  emit(left);
  out << ";\n";
  emit(right);
  return out.str();
}

// ---------------------------------------------------------------------------
// .tds
// ---------------------------------------------------------------------------

TdsFile parse_tds(std::istream& in, bool cycle_notation) {
  const std::vector<std::string> lines = significant_lines(in);
  TdsFile tds;
  bool have_gamma = false, have_delta = false, have_base = false;

  auto parse_perm = [&](const std::string& rest, int degree, const char* what) {
    Permutation p = cycle_notation ? parse_cycles(degree, rest)
                                   : parse_one_line(rest);
    if (p.degree() != degree) {
      throw ParseError(std::string(what) + " has degree " +
                       std::to_string(p.degree()) + ", expected " +
                       std::to_string(degree));
    }
    return p;
  };

  auto single_int = [](const std::string& rest, const char* what) {
    const std::vector<std::string> toks = tokens_of(rest);
    if (toks.size() != 1) {
      throw ParseError(std::string("expected exactly one value after '") +
                       what + "'");
    }
    return parse_int(toks[0], what);
  };

  std::size_t at = 0;
  for (; at < lines.size(); ++at) {
    const std::string& line = lines[at];
    std::istringstream ls(line);
    std::string key;
    ls >> key;
    std::string rest;
    std::getline(ls, rest);
    if (key == "gamma") {
      if (have_gamma) throw ParseError("duplicate 'gamma' line");
      tds.gamma = single_int(rest, "gamma");
      have_gamma = true;
    } else if (key == "delta") {
      if (have_delta) throw ParseError("duplicate 'delta' line");
      tds.delta = single_int(rest, "delta");
      have_delta = true;
    } else if (key == "base") {
      if (have_base) throw ParseError("duplicate 'base' line");
      tds.base = single_int(rest, "base");
      have_base = true;
    } else if (key == "gen") {
      break;
    } else {
      throw ParseError("unexpected line '" + line + "'");
    }
  }
  if (!have_gamma || !have_delta) {
    throw ParseError("a .tds file needs 'gamma' and 'delta' lines");
  }
  if (tds.gamma < 1 || tds.delta < 1) {
    throw ParseError("gamma and delta must be >= 1");
  }
  if (tds.base < 0 || tds.base >= tds.delta) {
    throw ParseError("base point out of range");
  }

  while (at < lines.size()) {
    std::istringstream ls(lines[at]);
    std::string key;
    ls >> key;
    std::string rest;
    std::getline(ls, rest);
    if (key != "gen") throw ParseError("expected a 'gen' line, got '" + lines[at] + "'");
    tds.gens.push_back(parse_perm(rest, tds.gamma, "generator"));
    ++at;
    if (at >= lines.size()) {
      throw ParseError("'gen' line without a matching 'theta' line");
    }
    std::istringstream ts(lines[at]);
    ts >> key;
    std::getline(ts, rest);
    if (key != "theta") {
      throw ParseError("expected a 'theta' line after 'gen', got '" +
                       lines[at] + "'");
    }
    tds.theta_images.push_back(parse_perm(rest, tds.delta, "theta image"));
    ++at;
  }
  return tds;
}

TdsFile parse_tds(const std::string& text, bool cycle_notation) {
  std::istringstream in(text);
  return parse_tds(in, cycle_notation);
}

TdsFile load_tds(const std::string& path, bool cycle_notation) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return parse_tds(in, cycle_notation);
}

std::string format_tds(const TdsFile& tds) {
  std::ostringstream out;
  out << "gamma " << tds.gamma << '\n';
  out << "delta " << tds.delta << '\n';
  out << "base " << tds.base << '\n';
  for (std::size_t i = 0; i < tds.gens.size(); ++i) {
    out << "gen " << tds.gens[i].one_line() << '\n';
    out << "theta " << tds.theta_images[i].one_line() << '\n';
  }
  return out.str();
}

TransDigroupSpec spec_from_tds(const TdsFile& tds) {
  PermGroup group = PermGroup::closure(tds.gamma, tds.gens);
  GroupHomomorphism theta = GroupHomomorphism::from_generator_images(
      group, tds.delta, tds.theta_images);
  return TransDigroupSpec(tds.gamma, tds.delta, std::move(group),
                          std::move(theta), tds.base);
}

TdsFile tds_from_spec(const TransDigroupSpec& spec) {
  TdsFile tds;
  tds.gamma = spec.gamma_size();
  tds.delta = spec.delta_size();
  tds.base = spec.base_point();
  for (const Permutation& gen : spec.group().generators()) {
    tds.gens.push_back(gen);
    tds.theta_images.push_back(spec.theta()(gen));
  }
  return tds;
}

// ---------------------------------------------------------------------------
// Reports
// ---------------------------------------------------------------------------

AnalysisSection analyze(const Digroup& d) {
  AnalysisSection s;
  s.order = d.order();
  s.valid = true;
  s.halo = d.halo();
  s.identities = identities(d);
  const CentersPair c = centers(d);
  s.target_center = c.target;
  s.source_center = c.source;
  s.bar_unit = d.least_bar_unit();
  for (ElementId x = 0; x < d.order(); ++x) {
    s.inverse_table.push_back(inverses(d, x, *s.bar_unit));
  }
  return s;
}

EmbeddingSection embedding_section(const Digroup& d, const Embedding& e) {
  EmbeddingSection s;
  s.gamma = e.spec.gamma_size();
  s.delta = e.spec.delta_size();
  s.base = e.spec.base_point();
  for (ElementId x = 0; x < d.order(); ++x) {
    s.mapping.emplace_back(x, e.spec.label_of(e.spec.index_of(e.map[x])));
  }
  s.evidence = e.verified;
  return s;
}

ClassSummary class_summary(int index, const CatalogEntry& entry) {
  ClassSummary s;
  s.index = index;
  s.halo_size = static_cast<int>(entry.digroup.halo().size());
  s.identity_count = static_cast<int>(identities(entry.digroup).size());
  const CentersPair c = centers(entry.digroup);
  s.target_size = static_cast<int>(c.target.size());
  s.source_size = static_cast<int>(c.source.size());
  s.provenance = entry.provenance;
  return s;
}

std::string describe_violation(const Violation& v) {
  std::ostringstream out;
  out << v.law;
  if (v.law == "1.1a") {
    out << " [x>(y>z) = (x>y)>z]";
  } else if (v.law == "1.1b") {
    out << " [x>(y>z) = x>(y<z)]";
  } else if (v.law == "1.2") {
    out << " [(x<y)>z = x<(y>z)]";
  } else if (v.law == "1.3a") {
    out << " [(x>y)<z = (x<y)<z]";
  } else if (v.law == "1.3b") {
    out << " [(x<y)<z = x<(y<z)]";
  } else if (v.law == "bar-unit") {
    out << " [no e satisfies x>e = x = e<x for all x]";
  } else if (v.law == "left-inverse") {
    out << " [no left inverse w.r.t. any bar-unit]";
  } else if (v.law == "right-inverse") {
    out << " [no right inverse w.r.t. any bar-unit]";
  }
  if (v.witness.size() == 3) {
    out << " at (x,y,z) = (" << v.witness[0] << ", " << v.witness[1] << ", "
        << v.witness[2] << ")";
  } else if (v.witness.size() == 1) {
    out << " at element " << v.witness[0];
  }
  return out.str();
}

namespace {

std::string join_ids(const std::vector<ElementId>& ids) {
  if (ids.empty()) return "(none)";
  std::ostringstream out;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i) out << ' ';
    out << ids[i];
  }
  return out.str();
}

const char* yesno(bool b) { return b ? "yes" : "no"; }

void classes_to_text(std::ostringstream& out, const char* name,
                     const std::vector<ClassSummary>& classes) {
  out << "  " << name << " classes: " << classes.size() << '\n';
  for (const ClassSummary& c : classes) {
    out << "    class " << c.index << ": halo=" << c.halo_size
        << " identities=" << c.identity_count << " target=" << c.target_size
        << " source=" << c.source_size << " (" << c.provenance << ")\n";
  }
}

ordered_json classes_to_json(const std::vector<ClassSummary>& classes) {
  ordered_json arr = ordered_json::array();
  for (const ClassSummary& c : classes) {
    ordered_json j;
    j["index"] = c.index;
    j["halo_size"] = c.halo_size;
    j["identity_count"] = c.identity_count;
    j["target_center_size"] = c.target_size;
    j["source_center_size"] = c.source_size;
    j["provenance"] = c.provenance;
    arr.push_back(std::move(j));
  }
  return arr;
}

}  // namespace

std::string report_to_text(const ReportDocument& doc) {
  std::ostringstream out;
  if (doc.analysis) {
    const AnalysisSection& a = *doc.analysis;
    out << "order: " << a.order << '\n';
    out << "valid: " << (a.valid ? "true" : "false") << '\n';
    for (const Violation& v : a.violations) {
      out << "violation: " << describe_violation(v) << '\n';
    }
    if (a.valid) {
      out << "halo: " << join_ids(a.halo) << '\n';
      out << "identities: " << join_ids(a.identities) << '\n';
      out << "target-center: " << join_ids(a.target_center) << '\n';
      out << "source-center: " << join_ids(a.source_center) << '\n';
      out << "bar-unit: " << *a.bar_unit << '\n';
      out << "inverse-table:\n";
      for (std::size_t x = 0; x < a.inverse_table.size(); ++x) {
        out << "  " << x << ": left=" << a.inverse_table[x].left_inv
            << " right=" << a.inverse_table[x].right_inv << '\n';
      }
    }
  }
  if (doc.embedding) {
    const EmbeddingSection& e = *doc.embedding;
    out << "embedding:\n";
    out << "  gamma: " << e.gamma << '\n';
    out << "  delta: " << e.delta << '\n';
    out << "  base: " << e.base << '\n';
    out << "  injective: " << yesno(e.evidence.injective) << '\n';
    out << "  left-product: " << yesno(e.evidence.left_product_preserved)
        << '\n';
    out << "  right-product: " << yesno(e.evidence.right_product_preserved)
        << '\n';
    out << "  surjective: " << yesno(e.evidence.surjective) << '\n';
    out << "  order-factorization: " << yesno(e.evidence.order_factorization)
        << '\n';
    if (!e.evidence.failure.empty()) {
      out << "  failure: " << e.evidence.failure << '\n';
    }
    out << "  mapping:\n";
    for (const auto& [x, label] : e.mapping) {
      out << "    " << x << " -> " << label << '\n';
    }
  }
  if (doc.classification) {
    const ClassificationSection& c = *doc.classification;
    out << "classification:\n";
    out << "  order: " << c.order << '\n';
    out << "  method: " << c.method << '\n';
    if (c.method == "brute" || c.method == "both") {
      classes_to_text(out, "brute", c.brute_classes);
    }
    if (c.method == "constructive" || c.method == "both") {
      classes_to_text(out, "constructive", c.constructive_classes);
    }
    if (c.check) {
      out << "  cross-check: " << (c.check->matched ? "matched" : "MISMATCH")
          << '\n';
      for (const auto& [b, k] : c.check->matching) {
        out << "    brute " << b << " <-> constructive " << k << '\n';
      }
      if (!c.check->mismatch.empty()) {
        out << "    detail: " << c.check->mismatch << '\n';
      }
    }
  }
  return out.str();
}

std::string report_to_json(const ReportDocument& doc) {
  ordered_json j;
  if (doc.analysis) {
    const AnalysisSection& a = *doc.analysis;
    ordered_json ja;
    ja["order"] = a.order;
    ja["valid"] = a.valid;
    ordered_json viol = ordered_json::array();
    for (const Violation& v : a.violations) {
      ordered_json jv;
      jv["law"] = v.law;
      jv["witness"] = v.witness;
      viol.push_back(std::move(jv));
    }
    ja["violations"] = std::move(viol);
    ja["halo"] = a.halo;
    ja["identities"] = a.identities;
    ja["target_center"] = a.target_center;
    ja["source_center"] = a.source_center;
    if (a.bar_unit) {
      ja["bar_unit"] = *a.bar_unit;
      ordered_json inv = ordered_json::array();
      for (const InversePair& p : a.inverse_table) {
        inv.push_back({p.left_inv, p.right_inv});
      }
      ja["inverse_table"] = std::move(inv);
    }
    j["analysis"] = std::move(ja);
  }
  if (doc.embedding) {
    const EmbeddingSection& e = *doc.embedding;
    ordered_json je;
    je["gamma"] = e.gamma;
    je["delta"] = e.delta;
    je["base"] = e.base;
    je["injective"] = e.evidence.injective;
    je["left_product_preserved"] = e.evidence.left_product_preserved;
    je["right_product_preserved"] = e.evidence.right_product_preserved;
    je["surjective"] = e.evidence.surjective;
    je["order_factorization"] = e.evidence.order_factorization;
    ordered_json map = ordered_json::array();
    for (const auto& [x, label] : e.mapping) {
      map.push_back({x, label});
    }
    je["mapping"] = std::move(map);
    j["embedding"] = std::move(je);
  }
  if (doc.classification) {
    const ClassificationSection& c = *doc.classification;
    ordered_json jc;
    jc["order"] = c.order;
    jc["method"] = c.method;
    if (c.method == "brute" || c.method == "both") {
      jc["brute_count"] = c.brute_classes.size();
      jc["brute_classes"] = classes_to_json(c.brute_classes);
    }
    if (c.method == "constructive" || c.method == "both") {
      jc["constructive_count"] = c.constructive_classes.size();
      jc["constructive_classes"] = classes_to_json(c.constructive_classes);
    }
    if (c.check) {
      jc["matched"] = c.check->matched;
      ordered_json m = ordered_json::array();
      for (const auto& [b, k] : c.check->matching) m.push_back({b, k});
      jc["matching"] = std::move(m);
      if (!c.check->mismatch.empty()) jc["mismatch"] = c.check->mismatch;
    }
    j["classification"] = std::move(jc);
  }
  return j.dump(2) + "\n";
}

}  // namespace digroups
