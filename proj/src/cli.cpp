#include "mosaic/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "mosaic/catalog.hpp"
#include "mosaic/equivalence.hpp"
#include "mosaic/io.hpp"
#include "mosaic/nakano.hpp"

namespace mosaic::cli {

using nlohmann::json;

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError:
      return kParse;
    case ErrorCode::MissingOrtho:
      return kMissingOrtho;
    case ErrorCode::UnknownName:
    case ErrorCode::SizeTooLarge:
      return kUnknownName;
    case ErrorCode::ReconstructionFailure:
    case ErrorCode::PreconditionFailed:
      return kCheckFailed;
    default:
      return kValidation;
  }
}

namespace {

const std::vector<std::string> kChecks{"mosaic",       "lmosaic",   "polygroup",   "modular",
                                       "ortholattice", "orthomodular", "roundtrip", "nakano-props"};

struct Common {
  std::string format = "ascii";
  bool quiet = false;
  std::string output;
};

void add_common(CLI::App* sub, Common& common) {
  sub->add_option("--format", common.format, "Output format")
      ->check(CLI::IsMember({"ascii", "json"}));
  sub->add_flag("-q,--quiet", common.quiet, "Print nothing; report through the exit code only");
}

class Printer {
 public:
  Printer(const Common& common, std::ostream& out) : common_(common), out_(out) {}

  bool json_mode() const { return common_.format == "json"; }

  void emit(const std::string& text, const json& j) {
    if (common_.quiet) return;
    const std::string body = json_mode() ? j.dump(2) + "\n" : text;
    if (common_.output.empty()) {
      out_ << body;
      return;
    }
    std::ofstream file(common_.output, std::ios::binary);
    if (!file) throw Error(ErrorCode::ParseError, "cannot write " + common_.output);
    file << body;
  }

 private:
  const Common& common_;
  std::ostream& out_;
};

LatticeDocument load_input(const std::string& input) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(input, ec)) return read_lattice_file(input);
  if (input.find('/') != std::string::npos || input.ends_with(".json"))
    throw Error(ErrorCode::ParseError, "cannot read " + input);
  CatalogEntry entry = named(input);
  return LatticeDocument{entry.name, std::move(entry.lattice), std::move(entry.ortho)};
}

std::optional<Involution> resolve_ortho(const LatticeDocument& doc) {
  if (doc.ortho) return doc.ortho;
  auto all = orthocomplementations(doc.lattice);
  if (all.empty()) return std::nullopt;
  return all.front();
}

std::string label(const Lattice& l, Element x) {
  return x < l.size() ? l.name(x) : std::to_string(x);
}

std::string join_labels(const Lattice& l, const std::vector<Element>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? ", " : "") + label(l, xs[i]);
  return s;
}

std::string set_text(const LabelCell& cell) {
  std::string s = "{";
  for (std::size_t i = 0; i < cell.size(); ++i) s += (i ? "," : "") + cell[i];
  return s + "}";
}

struct CheckResult {
  std::string check;
  AxiomReport report;
};

json report_json(const CheckResult& r, const Lattice& l) {
  json j{{"check", r.check}, {"axiom", r.report.axiom}, {"holds", r.report.holds()}};
  if (r.report.witness) {
    json w = json::array();
    for (Element x : r.report.witness->elements) w.push_back(label(l, x));
    j["witness"] = w;
    j["reason"] = r.report.witness->reason;
  }
  return j;
}

std::string report_line(const CheckResult& r, const Lattice& l) {
  std::string line = std::string(r.report.holds() ? "PASS " : "FAIL ") + r.check + "/" + r.report.axiom;
  if (r.report.witness) {
    line += "  witness (" + join_labels(l, r.report.witness->elements) + ")";
    if (!r.report.witness->reason.empty()) line += ": " + r.report.witness->reason;
  }
  return line + "\n";
}

int print_reports(Printer& printer, const std::string& name, const Lattice& l,
                  const std::vector<CheckResult>& results) {
  bool ok = true;
  std::string text;
  json reports = json::array();
  for (const auto& r : results) {
    ok = ok && r.report.holds();
    text += report_line(r, l);
    reports.push_back(report_json(r, l));
  }
  text += ok ? "all checks passed\n" : "some checks failed\n";
  printer.emit(text, json{{"name", name}, {"ok", ok}, {"reports", reports}});
  return ok ? kOk : kCheckFailed;
}

std::vector<CheckResult> run_check(const std::string& check, const LatticeDocument& doc, Flavor flavor) {
  const Lattice& l = doc.lattice;
  std::vector<CheckResult> out;
  auto add = [&](const AxiomReport& r) { out.push_back({check, r}); };
  auto add_all = [&](const std::vector<AxiomReport>& rs) {
    for (const auto& r : rs) add(r);
  };
  auto require_ortho = [&]() {
    auto pi = resolve_ortho(doc);
    if (!pi) throw Error(ErrorCode::MissingOrtho, doc.name + " has no orthocomplementation");
    return *pi;
  };

  if (check == "mosaic") {
    add_all(verify_mosaic(nakano_table(l, flavor)).reports);
  } else if (check == "lmosaic") {
    add_all(verify_lmosaic(nakano(l, flavor).mosaic));
  } else if (check == "polygroup") {
    add(is_associative(nakano_table(l, flavor)));
  } else if (check == "modular") {
    add(is_modular(l));
  } else if (check == "ortholattice") {
    if (doc.ortho)
      add_all(check_orthocomplementation(l, *doc.ortho));
    else if (orthocomplementations(l).empty())
      add(AxiomReport::fail("ortholattice", {}, "no orthocomplementation exists"));
    else
      add(AxiomReport::pass("ortholattice"));
  } else if (check == "orthomodular") {
    const Involution pi = require_ortho();
    add(is_orthomodular(l, pi));
    add(is_orthomodular_mosaic(to_dualizable_lmosaic(OrthoPair{l, pi})));
  } else if (check == "roundtrip") {
    add(check_round_trip(OrthoPair{l, require_ortho()}));
  } else if (check == "nakano-props") {
    add_all(check_nakano_properties(l));
  }
  return out;
}

// ---------------------------------------------------------------------------

int cmd_validate(const std::string& input, const Common& common, std::ostream& out) {
  Printer printer(common, out);
  const LatticeDocument doc = load_input(input);
  const Lattice& l = doc.lattice;
  const LatticeFlags flags = classify(l, doc.ortho);
  std::ostringstream text;
  text << doc.name << ": valid bounded lattice with " << l.size() << " elements\n"
       << "  bottom " << l.name(l.bottom()) << ", top " << l.name(l.top()) << ", "
       << l.covers().size() << " covers\n"
       << "  ortho block: " << (doc.ortho ? "present" : "absent") << "\n"
       << "  modular: " << (flags.modular ? "yes" : "no")
       << ", ortholattice: " << (flags.ortholattice ? "yes" : "no")
       << ", orthomodular: " << (flags.orthomodular ? "yes" : "no") << "\n";
  printer.emit(text.str(), json{{"name", doc.name},
                                {"valid", true},
                                {"size", l.size()},
                                {"bottom", l.name(l.bottom())},
                                {"top", l.name(l.top())},
                                {"ortho", doc.ortho.has_value()},
                                {"modular", flags.modular},
                                {"ortholattice", flags.ortholattice},
                                {"orthomodular", flags.orthomodular}});
  return kOk;
}

int cmd_table(const std::string& input, Flavor flavor, const std::string& diff_path,
              const Common& common, std::ostream& out) {
  Printer printer(common, out);
  const LatticeDocument doc = load_input(input);
  const Lattice& l = doc.lattice;
  const Multioperation table = nakano_table(l, flavor);
  const Element neutral = flavor == Flavor::Additive ? l.bottom() : l.top();
  const TableDocument computed = table_document(doc.name + "_" + std::string(to_string(flavor)),
                                                table, l.names(), neutral, "recomputed");

  if (diff_path.empty()) {
    printer.emit(render_ascii(computed, flavor == Flavor::Additive ? "+" : "*"), table_to_json(computed));
    return kOk;
  }
  const TableDocument other = read_table_file(diff_path);
  const auto diffs = diff_tables(computed, other);
  std::string text;
  for (const auto& d : diffs) {
    text += "(" + d.row + ", " + d.column + "): expected " + set_text(d.expected) + ", got " +
            (d.missing ? std::string("nothing") : set_text(d.actual)) + "\n";
  }
  text += std::to_string(diffs.size()) + " differing cell(s)\n";
  printer.emit(text, json{{"name", computed.name}, {"against", other.name}, {"diff", diffs_to_json(diffs)}});
  return diffs.empty() ? kOk : kCheckFailed;
}

int cmd_check(const std::string& input, std::vector<std::string> checks, Flavor flavor,
              const Common& common, std::ostream& out) {
  Printer printer(common, out);
  const LatticeDocument doc = load_input(input);
  const bool everything = checks.empty() || std::count(checks.begin(), checks.end(), "all") > 0;
  if (everything) {
    checks = kChecks;
    if (!resolve_ortho(doc))
      std::erase_if(checks, [](const std::string& c) { return c == "orthomodular" || c == "roundtrip"; });
  }
  std::vector<CheckResult> results;
  for (const auto& check : checks) {
    auto rs = run_check(check, doc, flavor);
    results.insert(results.end(), rs.begin(), rs.end());
  }
  return print_reports(printer, doc.name, doc.lattice, results);
}

int cmd_orthocomplements(const std::string& input, const Common& common, std::ostream& out) {
  Printer printer(common, out);
  const LatticeDocument doc = load_input(input);
  const Lattice& l = doc.lattice;
  const auto all = orthocomplementations(l);
  std::string text = std::to_string(all.size()) + " orthocomplementation(s) of " + doc.name + "\n";
  json list = json::array();
  for (const auto& pi : all) {
    json pairs = json::array();
    std::string line = " ";
    for (Element x = 0; x < l.size(); ++x) {
      if (x > pi(x)) continue;
      pairs.push_back({l.name(x), l.name(pi(x))});
      line += " " + l.name(x) + "<->" + l.name(pi(x));
    }
    list.push_back(pairs);
    text += line + "\n";
  }
  printer.emit(text, json{{"name", doc.name}, {"orthocomplementations", list}});
  return kOk;
}

int cmd_roundtrip(const std::string& input, const Common& common, std::ostream& out) {
  Printer printer(common, out);
  const LatticeDocument doc = load_input(input);
  const auto pi = resolve_ortho(doc);
  if (!pi) throw Error(ErrorCode::MissingOrtho, doc.name + " has no orthocomplementation");
  const OrthoPair pair{doc.lattice, *pi};
  std::vector<CheckResult> results;
  const Mosaic m = additive_nakano(doc.lattice).mosaic;
  for (const auto& r : check_dualizable_lmosaic(m, *pi)) results.push_back({"roundtrip", r});
  results.push_back({"roundtrip", check_round_trip(pair)});
  if (all_hold(check_dualizable_lmosaic(m, *pi)))
    results.push_back({"roundtrip", check_table_round_trip(DualizableLMosaicPair{m, *pi})});
  return print_reports(printer, doc.name, doc.lattice, results);
}

std::string covers_text(const Lattice& l) {
  std::string s;
  for (const auto& [lo, hi] : l.covers()) s += (s.empty() ? "" : " ") + l.name(lo) + "<" + l.name(hi);
  return s.empty() ? "-" : s;
}

int cmd_census(std::size_t n, const Common& common, std::ostream& out) {
  Printer printer(common, out);
  const auto lattices = enumerate_lattices(n);
  const auto ortholattices = enumerate_ortholattices(n);
  std::size_t modular = 0, distributive = 0, ortho = 0, orthomodular = 0;
  std::ostringstream text;
  text << "n = " << n << ": " << lattices.size() << " lattice(s) up to isomorphism\n";
  text << std::left << "  " << std::setw(4) << "#" << std::setw(9) << "modular" << std::setw(14)
       << "distributive" << std::setw(7) << "ortho" << std::setw(14) << "orthomodular"
       << "covers\n";
  json rows = json::array();
  for (std::size_t i = 0; i < lattices.size(); ++i) {
    const Lattice& l = lattices[i];
    const LatticeFlags flags = classify(l);
    const bool dist = is_distributive(l).holds();
    // orthocomplementations counted up to automorphism
    std::size_t classes = 0;
    for (const auto& p : ortholattices)
      if (p.lattice == l) ++classes;
    modular += flags.modular;
    distributive += dist;
    ortho += classes > 0;
    orthomodular += flags.orthomodular;
    auto yes = [](bool b) { return b ? "yes" : "no"; };
    text << "  " << std::setw(4) << (i + 1) << std::setw(9) << yes(flags.modular) << std::setw(14)
         << yes(dist) << std::setw(7) << classes << std::setw(14) << yes(flags.orthomodular)
         << covers_text(l) << "\n";
    rows.push_back(json{{"index", i + 1},
                        {"lattice", lattice_to_json(LatticeDocument{"enum_" + std::to_string(n) + "_" +
                                                                        std::to_string(i + 1),
                                                                    l, std::nullopt})},
                        {"modular", flags.modular},
                        {"distributive", dist},
                        {"orthocomplementation_classes", classes},
                        {"orthomodular", flags.orthomodular}});
  }
  text << "totals: " << lattices.size() << " lattices, " << modular << " modular, " << distributive
       << " distributive, " << ortho << " ortholattices, " << orthomodular << " orthomodular\n";
  printer.emit(text.str(), json{{"n", n},
                                {"lattices", rows},
                                {"totals",
                                 {{"lattices", lattices.size()},
                                  {"modular", modular},
                                  {"distributive", distributive},
                                  {"ortholattices", ortho},
                                  {"orthomodular", orthomodular}}}});
  return kOk;
}

int cmd_catalog(std::vector<std::string> names, std::optional<std::size_t> enumerate, bool list,
                const Common& common, std::ostream& out) {
  if (enumerate) return cmd_census(*enumerate, common, out);
  Printer printer(common, out);
  if (list) {
    std::string text;
    json j = json::array();
    for (const auto& name : standard_names()) {
      text += name + "\n";
      j.push_back(name);
    }
    text += "(chain_N, boolean_N and MO_N accept other sizes)\n";
    printer.emit(text, j);
    return kOk;
  }
  if (!names.empty() && names.front() == "export") names.erase(names.begin());
  if (names.size() != 1) throw CLI::ValidationError("catalog", "expected one name, --enumerate or --list");
  CatalogEntry entry = named(names.front());
  const json j = lattice_to_json(LatticeDocument{entry.name, entry.lattice, entry.ortho});
  // the export is a lattice file, so it is JSON in either format
  Common as_json = common;
  as_json.format = "json";
  Printer(as_json, out).emit("", j);
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Nakano mosaics, L-mosaics and ortholattices on finite carriers", "mosaic_lab"};
  app.require_subcommand(1);
  Common common;
  std::string input;
  bool additive = false, multiplicative = false;

  auto add_input = [&](CLI::App* sub) {
    sub->add_option("input", input, "Lattice file or catalog name")->required();
  };
  auto add_flavor = [&](CLI::App* sub) {
    auto* a = sub->add_flag("--additive", additive, "Additive Nakano mosaic (default)");
    auto* m = sub->add_flag("--multiplicative", multiplicative, "Multiplicative Nakano mosaic");
    a->excludes(m);
  };

  auto* validate = app.add_subcommand("validate", "Parse and validate a lattice");
  add_input(validate);
  add_common(validate, common);

  std::string diff_path;
  auto* table = app.add_subcommand("table", "Print a Nakano multioperation table");
  add_input(table);
  add_flavor(table);
  add_common(table, common);
  table->add_option("--diff", diff_path, "Compare against a table file; exit 1 if any cell differs");
  table->add_option("-o,--output", common.output, "Write to a file instead of stdout");

  std::vector<std::string> checks;
  auto* check = app.add_subcommand("check", "Run axiom checks with witnesses");
  add_input(check);
  add_flavor(check);
  add_common(check, common);
  std::vector<std::string> allowed = kChecks;
  allowed.push_back("all");
  check->add_option("--checks", checks, "Checks to run (default: all)")
      ->delimiter(',')
      ->check(CLI::IsMember(allowed));

  auto* ortho = app.add_subcommand("orthocomplements", "List all orthocomplementations");
  add_input(ortho);
  add_common(ortho, common);

  auto* roundtrip = app.add_subcommand("roundtrip", "Ortholattice -> L-mosaic -> ortholattice");
  add_input(roundtrip);
  add_common(roundtrip, common);

  std::vector<std::string> names;
  std::optional<std::size_t> enumerate;
  bool list = false;
  auto* catalog = app.add_subcommand("catalog", "Export named lattices or enumerate small ones");
  catalog->add_option("name", names, "Catalog name (optionally preceded by 'export')");
  catalog->add_option("--enumerate", enumerate, "Print a census of all n-element lattices");
  catalog->add_flag("--list", list, "List standard names");
  catalog->add_option("-o,--output", common.output, "Write to a file instead of stdout");
  add_common(catalog, common);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kUsage;
  }

  const Flavor flavor = multiplicative ? Flavor::Multiplicative : Flavor::Additive;
  try {
    if (*validate) return cmd_validate(input, common, out);
    if (*table) return cmd_table(input, flavor, diff_path, common, out);
    if (*check) return cmd_check(input, checks, flavor, common, out);
    if (*ortho) return cmd_orthocomplements(input, common, out);
    if (*roundtrip) return cmd_roundtrip(input, common, out);
    if (*catalog) return cmd_catalog(names, enumerate, list, common, out);
  } catch (const Error& e) {
    if (!common.quiet) err << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const CLI::Error& e) {
    if (!common.quiet) err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace mosaic::cli
