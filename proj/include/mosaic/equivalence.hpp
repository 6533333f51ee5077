#pragma once

#include <string>
#include <vector>

#include "mosaic/axiom_report.hpp"
#include "mosaic/hyperstructure.hpp"
#include "mosaic/lattice.hpp"

namespace mosaic {

/// An ortholattice together with one of its orthocomplementations.
struct OrthoPair {
  Lattice lattice;
  Involution pi;
};

/// Throws NotAnOrthocomplementation unless `pi` is an orthocomplementation.
OrthoPair make_ortho_pair(Lattice lattice, Involution pi);

/// An L-mosaic together with an involution π for which the π-dual is again
/// an L-mosaic with neutral π(e).
struct DualizableLMosaicPair {
  Mosaic mosaic;
  Involution pi;
};

/// "lmosaic", "dualizable", "dual-lmosaic" reports for a candidate pair.
std::vector<AxiomReport> check_dualizable_lmosaic(const Mosaic& m, const Involution& pi);

/// π reverses the induced order and π(e) ∈ x⊞π(x) for every x. Dualizability
/// alone does not force this (with the outer-π dual every involution is an
/// isomorphism onto its transport, e.g. the identity on the 2-element chain
/// mosaic), and reconstruction succeeds exactly when it holds.
AxiomReport check_pi_orthocomplementing(const Mosaic& m, const Involution& pi);

/// Throws PreconditionFailed unless check_dualizable_lmosaic passes.
DualizableLMosaicPair make_dualizable_pair(Mosaic m, Involution pi);

/// Object map from ortholattices to dualizable L-mosaics: the additive
/// Nakano mosaic, paired with the same π.
DualizableLMosaicPair to_dualizable_lmosaic(const OrthoPair& ortho);

/// Inverse object map. The lattice lives on the same carrier as the mosaic:
/// x ≤ y iff x ∈ y⊞y, x∨y is the unique z of Lms4, x∧y = π(π(x)∨π(y)),
/// bottom = e, top = π(e). Throws ReconstructionFailure (naming the
/// offending pair) if any step fails or if the additive Nakano mosaic of the
/// result differs from the input table. Labels default to "e0", "e1", ...
OrthoPair reconstruct_lattice(const DualizableLMosaicPair& pair,
                              std::vector<std::string> names = {});

/// reconstruct_lattice(to_dualizable_lmosaic(p)) against p: "roundtrip"
/// fails with the first (x, y) whose order, join or meet differs, or with
/// the first x whose π image differs. Reconstruction errors become failures.
AxiomReport check_round_trip(const OrthoPair& p);

/// to_dualizable_lmosaic(reconstruct_lattice(p)) against p: "table-roundtrip"
/// fails with the first differing cell (or reconstruction error).
AxiomReport check_table_round_trip(const DualizableLMosaicPair& p);

/// Status of one map between ortholattices on both sides of the
/// correspondence.
struct MorphismTransfer {
  bool lattice_morphism = false;  // preserves ∧ and ∨
  bool join_zero_morphism = false; // preserves ∨ and sends 0 to 0'
  bool mosaic_morphism = false;    // unitary morphism of additive Nakano mosaics
  bool intertwines_pi = false;     // f∘π = π'∘f
  AxiomReport report;

  bool lattice_arrow() const { return lattice_morphism && intertwines_pi; }
  bool mosaic_arrow() const { return mosaic_morphism && intertwines_pi; }
};

/// Evaluates `f` as a lattice map and as a mosaic map. The report holds iff
/// f is an arrow between the ortholattices exactly when it is an arrow
/// between their dualizable L-mosaics, and f is a mosaic morphism exactly
/// when it preserves joins and the bottom.
MorphismTransfer morphism_transfer_check(const std::vector<Element>& f, const OrthoPair& from,
                                         const OrthoPair& to);

/// x ∈ y⊞y and 1 ∈ x⊞π(y) ⟹ x = y, with 1 := π(e). Throws
/// PreconditionFailed if π(e) is not the element characterized by
/// (u ∈ x⊞x ⟹ x = u) or if 1⊞1 is not the whole carrier.
AxiomReport is_orthomodular_mosaic(const DualizableLMosaicPair& pair);

/// Least subset containing x, y, e, π(e) closed under π and under the
/// reconstructed lattice's ∧ and ∨.
ElementSet generated_ortho_submosaic(const DualizableLMosaicPair& pair, Element x, Element y);

/// Restricts the table to generated_ortho_submosaic(x, y) and checks that it
/// is an associative mosaic. Throws PreconditionFailed unless the pair
/// satisfies is_orthomodular_mosaic.
AxiomReport generated_polygroup_check(const DualizableLMosaicPair& pair, Element x, Element y);

/// Every dualizable L-mosaic pair on {0..n-1} with neutral element 0
/// (1 ≤ n ≤ 4; SizeTooLarge otherwise). Candidate tables are generated
/// with Lms1 and unique self-inverses built in.
std::vector<DualizableLMosaicPair> enumerate_dualizable_lmosaics(std::size_t n);

}  // namespace mosaic
