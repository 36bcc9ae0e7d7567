// Command-line front end: verify, analyze, construct, embed, iso, classify.
//
// Exit codes: 0 success, 1 invalid algebra (or construction data), 2 parse
// error, 3 not isomorphic, 4 guard/usage/internal error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "digroups/cayley.hpp"
#include "digroups/digroup.hpp"
#include "digroups/enumerate.hpp"
#include "digroups/errors.hpp"
#include "digroups/io.hpp"
#include "digroups/trans.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitParse = 2;
constexpr int kExitNotIsomorphic = 3;
constexpr int kExitOther = 4;

// DIGROUPS_GUARD raises the size guards of construct/classify when set.
int guard_override(int fallback) {
  const char* env = std::getenv("DIGROUPS_GUARD");
  if (env == nullptr || *env == '\0') return fallback;
  try {
    const int v = std::stoi(env);
    return std::max(v, fallback);
  } catch (const std::exception&) {
    return fallback;
  }
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw digroups::ParseError("cannot write '" + path + "'");
  out << content;
}

// Prints the order/validity header and violations; returns the parsed
// tables.  Used by every .dgt-consuming command.
digroups::DgtFile load_and_report(const std::string& path, bool quiet,
                                  digroups::ValidationReport* report_out) {
  digroups::DgtFile f = digroups::load_dgt(path);
  digroups::ValidationReport rep = digroups::validate_digroup(f.left, f.right);
  if (!quiet || !rep.valid) {
    std::cout << "order: " << f.left.size() << '\n';
    std::cout << "valid: " << (rep.valid ? "true" : "false") << '\n';
    for (const digroups::Violation& v : rep.violations) {
      std::cout << "violation: " << digroups::describe_violation(v) << '\n';
    }
  }
  if (report_out != nullptr) *report_out = std::move(rep);
  return f;
}

int cmd_verify(const std::string& path) {
  digroups::ValidationReport rep;
  digroups::DgtFile f = load_and_report(path, /*quiet=*/false, &rep);
  if (!rep.valid) return kExitInvalid;
  std::cout << "halo: ";
  for (std::size_t i = 0; i < rep.halo.size(); ++i) {
    std::cout << (i ? " " : "") << rep.halo[i];
  }
  std::cout << '\n';
  return kExitOk;
}

int cmd_analyze(const std::string& path, const std::string& format) {
  digroups::ValidationReport rep;
  digroups::DgtFile f = load_and_report(path, /*quiet=*/true, &rep);
  if (!rep.valid) return kExitInvalid;
  digroups::Digroup d =
      digroups::Digroup::from_tables(std::move(f.left), std::move(f.right));
  digroups::ReportDocument doc;
  doc.analysis = digroups::analyze(d);
  std::cout << (format == "json" ? digroups::report_to_json(doc)
                                 : digroups::report_to_text(doc));
  return kExitOk;
}

int cmd_construct(const std::string& spec_path, const std::string& out_path,
                  bool cycles) {
  digroups::TdsFile tds = digroups::load_tds(spec_path, cycles);
  digroups::TransDigroupSpec spec = digroups::spec_from_tds(tds);
  const int guard = guard_override(digroups::kMaterializationGuard);
  digroups::Digroup d = spec.build(guard);
  std::vector<std::string> comments;
  comments.push_back("order " + std::to_string(d.order()) +
                     " transformation digroup; element labels:");
  for (int i = 0; i < d.order(); ++i) {
    comments.push_back(std::to_string(i) + " = " + spec.label_of(i));
  }
  write_file(out_path,
             digroups::format_dgt(d.left_table(), d.right_table(), comments));
  std::cout << "wrote " << out_path << " (order " << d.order() << ")\n";
  return kExitOk;
}

int cmd_embed(const std::string& path, const std::string& out_base) {
  digroups::ValidationReport rep;
  digroups::DgtFile f = load_and_report(path, /*quiet=*/true, &rep);
  if (!rep.valid) return kExitInvalid;
  digroups::Digroup d =
      digroups::Digroup::from_tables(std::move(f.left), std::move(f.right));
  digroups::Embedding e = digroups::embed(d, d.least_bar_unit());

  write_file(out_base + ".tds", digroups::format_tds(digroups::tds_from_spec(e.spec)));

  digroups::ReportDocument doc;
  doc.embedding = digroups::embedding_section(d, e);
  std::ostringstream map_text;
  map_text << "# element -> image in the transformation digroup\n";
  for (const auto& [x, label] : doc.embedding->mapping) {
    map_text << x << '\t' << label << '\n';
  }
  write_file(out_base + ".map", map_text.str());
  write_file(out_base + ".verify.txt", digroups::report_to_text(doc));

  std::cout << digroups::report_to_text(doc);
  std::cout << "wrote " << out_base << ".tds, " << out_base << ".map, "
            << out_base << ".verify.txt\n";
  return e.verified.all_passed() ? kExitOk : kExitOther;
}

int cmd_iso(const std::string& path_a, const std::string& path_b) {
  digroups::ValidationReport rep_a, rep_b;
  digroups::DgtFile fa = load_and_report(path_a, /*quiet=*/true, &rep_a);
  if (!rep_a.valid) return kExitInvalid;
  digroups::DgtFile fb = load_and_report(path_b, /*quiet=*/true, &rep_b);
  if (!rep_b.valid) return kExitInvalid;
  digroups::Digroup a =
      digroups::Digroup::from_tables(std::move(fa.left), std::move(fa.right));
  digroups::Digroup b =
      digroups::Digroup::from_tables(std::move(fb.left), std::move(fb.right));
  auto iso = digroups::find_isomorphism(a, b);
  if (!iso.has_value()) {
    std::cout << "not isomorphic\n";
    return kExitNotIsomorphic;
  }
  std::cout << "isomorphic\n";
  for (int x = 0; x < a.order(); ++x) {
    std::cout << x << " -> " << (*iso)[x] << '\n';
  }
  return kExitOk;
}

int cmd_classify(int order, const std::string& method,
                 const std::string& format) {
  digroups::ClassificationSection section;
  section.order = order;
  section.method = method;
  std::optional<digroups::Catalog> brute, constructive;
  if (method == "brute" || method == "both") {
    brute = digroups::brute_enumerate(order);
    for (std::size_t i = 0; i < brute->classes.size(); ++i) {
      section.brute_classes.push_back(
          digroups::class_summary(static_cast<int>(i), brute->classes[i]));
    }
  }
  if (method == "constructive" || method == "both") {
    const int guard = guard_override(digroups::kConstructiveGuard);
    constructive = digroups::constructive_enumerate(order, guard);
    for (std::size_t i = 0; i < constructive->classes.size(); ++i) {
      section.constructive_classes.push_back(
          digroups::class_summary(static_cast<int>(i),
                                  constructive->classes[i]));
    }
  }
  if (method == "both") {
    // The catalogs were just computed; cross_check recomputes them to stay a
    // self-contained oracle, which is cheap at these orders.
    section.check = digroups::cross_check(order);
  }
  digroups::ReportDocument doc;
  doc.classification = std::move(section);
  std::cout << (format == "json" ? digroups::report_to_json(doc)
                                 : digroups::report_to_text(doc));
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite digroup toolkit: tables, invariants, transformation "
               "digroups and Cayley-style embeddings"};
  app.require_subcommand(1);

  std::string path, path_b, out_path, spec_path;
  std::string format = "text";
  std::string method = "both";
  int order = 0;
  bool cycles = false;

  CLI::App* verify = app.add_subcommand("verify", "check the digroup laws of a .dgt file");
  verify->add_option("file", path, "input .dgt")->required();

  CLI::App* analyze = app.add_subcommand("analyze", "full invariant report of a .dgt file");
  analyze->add_option("file", path, "input .dgt")->required();
  analyze->add_option("--format", format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  CLI::App* construct = app.add_subcommand("construct", "materialize a .tds spec into a .dgt file");
  construct->add_option("spec", spec_path, "input .tds")->required();
  construct->add_option("-o,--output", out_path, "output .dgt")->required();
  construct->add_flag("--cycles", cycles, "permutations in cycle notation");

  CLI::App* embed = app.add_subcommand("embed", "embed a digroup into a transformation digroup");
  embed->add_option("file", path, "input .dgt")->required();
  embed->add_option("-o,--output", out_path, "output basename")->required();

  CLI::App* iso = app.add_subcommand("iso", "decide isomorphism of two .dgt files");
  iso->add_option("a", path, "first .dgt")->required();
  iso->add_option("b", path_b, "second .dgt")->required();

  CLI::App* classify = app.add_subcommand("classify", "enumerate digroups of a given order up to isomorphism");
  classify->add_option("--order", order, "carrier size")->required();
  classify->add_option("--method", method, "brute, constructive or both")
      ->check(CLI::IsMember({"brute", "constructive", "both"}));
  classify->add_option("--format", format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitOther;
  }

  try {
    if (verify->parsed()) return cmd_verify(path);
    if (analyze->parsed()) return cmd_analyze(path, format);
    if (construct->parsed()) return cmd_construct(spec_path, out_path, cycles);
    if (embed->parsed()) return cmd_embed(path, out_path);
    if (iso->parsed()) return cmd_iso(path, path_b);
    if (classify->parsed()) return cmd_classify(order, method, format);
  } catch (const digroups::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitParse;
  } catch (const digroups::HomomorphismError& e) {
    std::cerr << "invalid construction data: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const digroups::InvalidDigroup& e) {
    std::cerr << "invalid algebra: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const digroups::GuardError& e) {
    std::cerr << "guard exceeded: " << e.what() << '\n';
    return kExitOther;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitOther;
  }
  return kExitOther;
}
