#pragma once

#include <string>
#include <vector>

#include "mosaic/axiom_report.hpp"
#include "mosaic/hyperstructure.hpp"
#include "mosaic/lattice.hpp"

namespace mosaic {

enum class Flavor { Additive, Multiplicative };

std::string_view to_string(Flavor flavor);

/// Nakano mosaic of a bounded lattice.
///   additive:        x⊞y = {z : x∨y = x∨z = z∨y}, neutral 0
///   multiplicative:  x⊡y = {z : x∧y = x∧z = z∧y}, neutral 1
/// In both, every element is its own inverse.
struct NakanoMosaic {
  Lattice base;
  Flavor flavor;
  Mosaic mosaic;
};

/// The raw table, without verification.
Multioperation nakano_table(const Lattice& l, Flavor flavor);

NakanoMosaic additive_nakano(const Lattice& l);
NakanoMosaic multiplicative_nakano(const Lattice& l);
NakanoMosaic nakano(const Lattice& l, Flavor flavor);

/// The unique u with (u ∈ x·x ⟹ x = u) for all x: the top of an additive
/// mosaic, the bottom of a multiplicative one. Throws NoUniqueExtremum.
Element extremum_by_characterization(const NakanoMosaic& m);

/// Cellwise intersection of the table with a sublattice containing the
/// neutral bound. Errors: NotASublattice, MissingBound.
Restriction restrict_to_sublattice(const NakanoMosaic& m, ElementSet sub);

/// Order-theoretic facts about the Nakano mosaics of `l`: antisymmetry
/// (x,y ∈ x⊞y ⟺ x = y), Lms2-style idempotence of down-sets, z ∈ x⊞y ⟹
/// z ≤ x∨y and its dual, the join/meet characterizations, the triple
/// containment for x⊞(y⊞z), the Lms3 corollary, the induced order, and the
/// extremum characterizations.
std::vector<AxiomReport> check_nakano_properties(const Lattice& l);

}  // namespace mosaic
