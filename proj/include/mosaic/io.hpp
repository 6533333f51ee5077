#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "mosaic/hyperstructure.hpp"
#include "mosaic/lattice.hpp"

namespace mosaic {

// Lattice files:
//   {"name": "...", "elements": [...], "covers": [[lo, hi], ...],
//    "ortho": [[x, pi(x)], ...]}        ("ortho" optional)
struct LatticeDocument {
  std::string name;
  Lattice lattice;
  std::optional<Involution> ortho;
};

/// Throws ParseError (message carries line:column), UnknownElement,
/// DuplicateLabel, CyclicCovers, NotBounded, NotALattice, NotAnInvolution or
/// NotAnOrthocomplementation.
LatticeDocument parse_lattice_document(std::string_view text);
LatticeDocument read_lattice_file(const std::filesystem::path& path);
nlohmann::json lattice_to_json(const LatticeDocument& doc);

// Table files:
//   {"name": "...", "elements": [...], "neutral": "...",
//    "table": [[[labels...], ...], ...], "provenance": "..."}
// Cells are kept at label level so that transcriptions which mention labels
// outside "elements" can still be loaded and compared.
using LabelCell = std::vector<std::string>;

struct TableDocument {
  std::string name;
  std::vector<std::string> elements;
  std::string neutral;
  std::vector<std::vector<LabelCell>> table;
  std::optional<std::string> provenance;

  const LabelCell& cell(std::string_view row, std::string_view column) const;
  bool operator==(const TableDocument&) const = default;
};

/// Throws ParseError for malformed JSON or a table that is not n x n,
/// UnknownElement if the neutral is not listed, DuplicateLabel.
TableDocument parse_table_document(std::string_view text);
TableDocument read_table_file(const std::filesystem::path& path);
nlohmann::json table_to_json(const TableDocument& doc);

TableDocument table_document(std::string name, const Multioperation& op,
                             const std::vector<std::string>& labels, Element neutral,
                             std::optional<std::string> provenance = std::nullopt);

/// Cell contents as a set: duplicates removed, listed in element order with
/// foreign labels last (sorted).
LabelCell normalize_cell(const TableDocument& doc, const LabelCell& cell);

struct TableConversion {
  Multioperation op;
  Element neutral = 0;
  std::vector<std::string> foreign;  // labels dropped because they are not elements
};

TableConversion to_multioperation(const TableDocument& doc);

struct CellDiff {
  std::string row;
  std::string column;
  LabelCell expected;  // from the reference table
  LabelCell actual;    // from the compared table; empty when missing
  bool missing = false;

  bool operator==(const CellDiff&) const = default;
};

/// Cells (in the reference's order) whose label sets differ.
std::vector<CellDiff> diff_tables(const TableDocument& reference, const TableDocument& other);
nlohmann::json diffs_to_json(const std::vector<CellDiff>& diffs);
std::vector<CellDiff> diffs_from_json(const nlohmann::json& j);

/// Grid with a header row, one line per element, cells written {x,y}.
std::string render_ascii(const TableDocument& doc, std::string_view symbol);

std::string read_text_file(const std::filesystem::path& path);

}  // namespace mosaic
