#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mosaic/equivalence.hpp"
#include "mosaic/lattice.hpp"

namespace mosaic {

struct LatticeFlags {
  bool modular = false;
  bool ortholattice = false;
  bool orthomodular = false;

  bool operator==(const LatticeFlags&) const = default;
};

struct CatalogEntry {
  std::string name;
  Lattice lattice;
  std::optional<Involution> ortho;
  LatticeFlags expected;
};

/// Named structures: chain_N, boolean_N, pentagon, hexagon, diamond_M3,
/// MO_N. Throws UnknownName.
CatalogEntry named(std::string_view name);

/// A representative list of names, small enough for exhaustive suites.
std::vector<std::string> standard_names();

/// Recomputes the flags. With `ortho` given, ortholattice/orthomodular refer
/// to that involution; otherwise to any orthocomplementation.
LatticeFlags classify(const Lattice& l, const std::optional<Involution>& ortho = std::nullopt);

/// Canonical key: the lexicographically least up-set matrix over all
/// relabelings that list elements by increasing height. Two lattices are
/// isomorphic iff their keys are equal.
std::vector<std::uint64_t> canonical_key(const Lattice& l);

/// The lattice relabeled into canonical order, with labels 0, x1, x2, ..., 1.
Lattice canonical_lattice(const Lattice& l);

/// One lattice per isomorphism class of n-element bounded lattices, sorted
/// by canonical key (1 <= n <= 8; SizeTooLarge otherwise).
std::vector<Lattice> enumerate_lattices(std::size_t n);

/// Each enumerated lattice paired with its orthocomplementations, one per
/// orbit under the lattice's automorphisms (1 <= n <= 8).
std::vector<OrthoPair> enumerate_ortholattices(std::size_t n);

}  // namespace mosaic
