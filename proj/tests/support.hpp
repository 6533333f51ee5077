#pragma once

#include <string>
#include <vector>

#include "mosaic/catalog.hpp"
#include "mosaic/lattice.hpp"

namespace support {

inline mosaic::Element at(const mosaic::Lattice& l, const std::string& label) {
  auto i = l.index_of(label);
  if (!i) throw std::runtime_error("no label " + label);
  return *i;
}

inline std::vector<mosaic::Element> elements_of(const mosaic::Lattice& l, const std::vector<std::string>& labels) {
  std::vector<mosaic::Element> out;
  for (const auto& s : labels) out.push_back(at(l, s));
  return out;
}

inline mosaic::ElementSet set_of(const mosaic::Lattice& l, const std::vector<std::string>& labels) {
  mosaic::ElementSet s;
  for (const auto& label : labels) s.insert(at(l, label));
  return s;
}

// Lattices used by the exhaustive suites: every class up to `n`, plus the
// named examples.
inline std::vector<mosaic::Lattice> corpus(std::size_t n) {
  std::vector<mosaic::Lattice> out;
  for (std::size_t k = 1; k <= n; ++k)
    for (auto& l : mosaic::enumerate_lattices(k)) out.push_back(std::move(l));
  for (const auto& name : mosaic::standard_names()) out.push_back(mosaic::named(name).lattice);
  return out;
}

}  // namespace support
