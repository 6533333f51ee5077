#include "mosaic/io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "mosaic/error.hpp"

namespace mosaic {

using nlohmann::json;

namespace {

std::string position(std::string_view text, std::size_t byte) {
  std::size_t line = 1, column = 1;
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return std::to_string(line) + ":" + std::to_string(column);
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::ParseError, "at " + position(text, e.byte) + ": " + e.what());
  }
}

[[noreturn]] void malformed(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

std::vector<std::string> string_list(const json& j, const std::string& field) {
  if (!j.is_array()) malformed("\"" + field + "\" must be an array of strings");
  std::vector<std::string> out;
  for (const auto& v : j) {
    if (!v.is_string()) malformed("\"" + field + "\" must be an array of strings");
    out.push_back(v.get<std::string>());
  }
  return out;
}

std::vector<std::pair<std::string, std::string>> pair_list(const json& j, const std::string& field) {
  if (!j.is_array()) malformed("\"" + field + "\" must be an array of pairs");
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& v : j) {
    if (!v.is_array() || v.size() != 2 || !v[0].is_string() || !v[1].is_string())
      malformed("\"" + field + "\" entries must be [string, string]");
    out.emplace_back(v[0].get<std::string>(), v[1].get<std::string>());
  }
  return out;
}

const json& field(const json& j, const char* name) {
  if (!j.contains(name)) malformed(std::string("missing field \"") + name + "\"");
  return j.at(name);
}

std::string string_field(const json& j, const char* name) {
  const json& v = field(j, name);
  if (!v.is_string()) malformed(std::string("\"") + name + "\" must be a string");
  return v.get<std::string>();
}

}  // namespace

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ParseError, "cannot read " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

// ---------------------------------------------------------------------------
// Lattices

LatticeDocument parse_lattice_document(std::string_view text) {
  const json j = parse_json(text);
  if (!j.is_object()) malformed("top level must be an object");
  std::string name = j.contains("name") ? string_field(j, "name") : std::string("lattice");
  auto elements = string_list(field(j, "elements"), "elements");
  auto covers = pair_list(field(j, "covers"), "covers");
  Lattice lattice = build_from_covers(elements, covers);

  std::optional<Involution> ortho;
  if (j.contains("ortho") && !j.at("ortho").is_null()) {
    const std::size_t n = lattice.size();
    std::vector<Element> map(n, n);
    for (const auto& [x, y] : pair_list(j.at("ortho"), "ortho")) {
      const auto ix = lattice.index_of(x);
      const auto iy = lattice.index_of(y);
      if (!ix) throw Error(ErrorCode::UnknownElement, x);
      if (!iy) throw Error(ErrorCode::UnknownElement, y);
      if ((map[*ix] != n && map[*ix] != *iy) || (map[*iy] != n && map[*iy] != *ix))
        throw Error(ErrorCode::NotAnInvolution, "conflicting ortho pairs at " + x);
      map[*ix] = *iy;
      map[*iy] = *ix;
    }
    for (Element x = 0; x < n; ++x)
      if (map[x] == n) throw Error(ErrorCode::NotAnInvolution, "ortho misses " + lattice.name(x));
    ortho = Involution(std::move(map));
    if (!is_orthocomplementation(lattice, *ortho))
      throw Error(ErrorCode::NotAnOrthocomplementation, "ortho block is not an orthocomplementation");
  }
  return LatticeDocument{std::move(name), std::move(lattice), std::move(ortho)};
}

LatticeDocument read_lattice_file(const std::filesystem::path& path) {
  return parse_lattice_document(read_text_file(path));
}

json lattice_to_json(const LatticeDocument& doc) {
  const Lattice& l = doc.lattice;
  json j;
  j["name"] = doc.name;
  j["elements"] = l.names();
  json covers = json::array();
  for (const auto& [lo, hi] : l.covers()) covers.push_back({l.name(lo), l.name(hi)});
  j["covers"] = covers;
  if (doc.ortho) {
    json pairs = json::array();
    for (Element x = 0; x < l.size(); ++x)
      if (x <= (*doc.ortho)(x)) pairs.push_back({l.name(x), l.name((*doc.ortho)(x))});
    j["ortho"] = pairs;
  }
  return j;
}

// ---------------------------------------------------------------------------
// Tables

const LabelCell& TableDocument::cell(std::string_view row, std::string_view column) const {
  auto find = [&](std::string_view label) {
    auto it = std::find(elements.begin(), elements.end(), label);
    if (it == elements.end()) throw Error(ErrorCode::UnknownElement, std::string(label));
    return static_cast<std::size_t>(it - elements.begin());
  };
  return table[find(row)][find(column)];
}

TableDocument parse_table_document(std::string_view text) {
  const json j = parse_json(text);
  if (!j.is_object()) malformed("top level must be an object");
  TableDocument doc;
  doc.name = j.contains("name") ? string_field(j, "name") : std::string("table");
  doc.elements = string_list(field(j, "elements"), "elements");
  doc.neutral = string_field(j, "neutral");
  if (j.contains("provenance")) doc.provenance = string_field(j, "provenance");

  std::set<std::string> seen;
  for (const auto& e : doc.elements)
    if (!seen.insert(e).second) throw Error(ErrorCode::DuplicateLabel, e);
  if (!seen.count(doc.neutral)) throw Error(ErrorCode::UnknownElement, "neutral " + doc.neutral);

  const json& rows = field(j, "table");
  const std::size_t n = doc.elements.size();
  if (!rows.is_array() || rows.size() != n) malformed("\"table\" must have one row per element");
  for (const auto& row : rows) {
    if (!row.is_array() || row.size() != n) malformed("every table row must have one cell per element");
    std::vector<LabelCell> cells;
    for (const auto& cell : row) cells.push_back(string_list(cell, "table cell"));
    doc.table.push_back(std::move(cells));
  }
  return doc;
}

TableDocument read_table_file(const std::filesystem::path& path) {
  return parse_table_document(read_text_file(path));
}

json table_to_json(const TableDocument& doc) {
  json j;
  j["name"] = doc.name;
  j["elements"] = doc.elements;
  j["neutral"] = doc.neutral;
  j["table"] = doc.table;
  if (doc.provenance) j["provenance"] = *doc.provenance;
  return j;
}

TableDocument table_document(std::string name, const Multioperation& op,
                             const std::vector<std::string>& labels, Element neutral,
                             std::optional<std::string> provenance) {
  if (labels.size() != op.size()) throw Error(ErrorCode::SizeMismatch, "label count differs from table");
  TableDocument doc;
  doc.name = std::move(name);
  doc.elements = labels;
  doc.neutral = labels.at(neutral);
  doc.provenance = std::move(provenance);
  for (Element x = 0; x < op.size(); ++x) {
    std::vector<LabelCell> row;
    for (Element y = 0; y < op.size(); ++y) {
      LabelCell cell;
      for (Element z : op(x, y)) cell.push_back(labels[z]);
      row.push_back(std::move(cell));
    }
    doc.table.push_back(std::move(row));
  }
  return doc;
}

LabelCell normalize_cell(const TableDocument& doc, const LabelCell& cell) {
  LabelCell known, foreign;
  for (const auto& e : doc.elements)
    if (std::find(cell.begin(), cell.end(), e) != cell.end()) known.push_back(e);
  for (const auto& label : cell)
    if (std::find(doc.elements.begin(), doc.elements.end(), label) == doc.elements.end())
      foreign.push_back(label);
  std::sort(foreign.begin(), foreign.end());
  foreign.erase(std::unique(foreign.begin(), foreign.end()), foreign.end());
  known.insert(known.end(), foreign.begin(), foreign.end());
  return known;
}

TableConversion to_multioperation(const TableDocument& doc) {
  const std::size_t n = doc.elements.size();
  if (n > kMaxCarrier) throw Error(ErrorCode::SizeTooLarge, "table has more than 64 elements");
  std::map<std::string, Element> index;
  for (Element i = 0; i < n; ++i) index[doc.elements[i]] = i;
  TableConversion out{Multioperation(n), index.at(doc.neutral), {}};
  std::set<std::string> foreign;
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) {
      ElementSet cell;
      for (const auto& label : doc.table[x][y]) {
        auto it = index.find(label);
        if (it == index.end())
          foreign.insert(label);
        else
          cell.insert(it->second);
      }
      out.op.set(x, y, cell);
    }
  out.foreign.assign(foreign.begin(), foreign.end());
  return out;
}

std::vector<CellDiff> diff_tables(const TableDocument& reference, const TableDocument& other) {
  auto position_of = [](const TableDocument& doc, const std::string& label) -> std::optional<std::size_t> {
    auto it = std::find(doc.elements.begin(), doc.elements.end(), label);
    if (it == doc.elements.end()) return std::nullopt;
    return static_cast<std::size_t>(it - doc.elements.begin());
  };
  std::vector<CellDiff> diffs;
  for (std::size_t i = 0; i < reference.elements.size(); ++i)
    for (std::size_t k = 0; k < reference.elements.size(); ++k) {
      const std::string& row = reference.elements[i];
      const std::string& column = reference.elements[k];
      CellDiff d{row, column, normalize_cell(reference, reference.table[i][k]), {}, false};
      const auto oi = position_of(other, row);
      const auto ok = position_of(other, column);
      if (!oi || !ok) {
        d.missing = true;
        diffs.push_back(std::move(d));
        continue;
      }
      // normalize against the reference's element order so both sides compare as sets
      d.actual = normalize_cell(reference, other.table[*oi][*ok]);
      if (d.actual != d.expected) diffs.push_back(std::move(d));
    }
  return diffs;
}

json diffs_to_json(const std::vector<CellDiff>& diffs) {
  json out = json::array();
  for (const auto& d : diffs) {
    json j{{"row", d.row}, {"column", d.column}, {"expected", d.expected}, {"actual", d.actual}};
    if (d.missing) j["missing"] = true;
    out.push_back(j);
  }
  return out;
}

std::vector<CellDiff> diffs_from_json(const json& j) {
  if (!j.is_array()) malformed("diff list must be an array");
  std::vector<CellDiff> out;
  for (const auto& d : j) {
    if (!d.is_object()) malformed("diff entries must be objects");
    out.push_back(CellDiff{string_field(d, "row"), string_field(d, "column"),
                           string_list(field(d, "expected"), "expected"),
                           string_list(field(d, "actual"), "actual"),
                           d.value("missing", false)});
  }
  return out;
}

std::string render_ascii(const TableDocument& doc, std::string_view symbol) {
  const std::size_t n = doc.elements.size();
  std::vector<std::vector<std::string>> grid(n + 1, std::vector<std::string>(n + 1));
  grid[0][0] = std::string(symbol);
  for (std::size_t i = 0; i < n; ++i) {
    grid[0][i + 1] = doc.elements[i];
    grid[i + 1][0] = doc.elements[i];
    for (std::size_t k = 0; k < n; ++k) {
      std::string cell = "{";
      const auto labels = normalize_cell(doc, doc.table[i][k]);
      for (std::size_t t = 0; t < labels.size(); ++t) cell += (t ? "," : "") + labels[t];
      grid[i + 1][k + 1] = cell + "}";
    }
  }
  std::vector<std::size_t> width(n + 1, 0);
  for (const auto& row : grid)
    for (std::size_t c = 0; c <= n; ++c) width[c] = std::max(width[c], row[c].size());

  std::ostringstream out;
  auto rule = [&] {
    out << '+';
    for (std::size_t c = 0; c <= n; ++c) out << std::string(width[c] + 2, '-') << '+';
    out << '\n';
  };
  rule();
  for (std::size_t r = 0; r <= n; ++r) {
    out << '|';
    for (std::size_t c = 0; c <= n; ++c)
      out << ' ' << grid[r][c] << std::string(width[c] - grid[r][c].size() + 1, ' ') << '|';
    out << '\n';
    rule();
  }
  return out.str();
}

}  // namespace mosaic
