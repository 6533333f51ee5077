#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mosaic/axiom_report.hpp"
#include "mosaic/element_set.hpp"

namespace mosaic {

/// A self-inverse map on a carrier {0..n-1}.
class Involution {
 public:
  Involution() = default;
  /// Throws Error(NotAnInvolution) unless map∘map = id on {0..map.size()-1}.
  explicit Involution(std::vector<Element> map);

  static Involution identity(std::size_t n);

  std::size_t size() const { return map_.size(); }
  Element operator()(Element x) const { return map_[x]; }
  const std::vector<Element>& map() const { return map_; }
  ElementSet image(ElementSet s) const;

  bool operator==(const Involution&) const = default;

 private:
  std::vector<Element> map_;
};

/// Finite bounded lattice on the canonical carrier {0..n-1}.
///
/// Instances are only produced by validating constructors, so every object
/// satisfies the lattice laws: `leq` is a partial order with bottom and top,
/// and `join`/`meet` are the tabulated least upper and greatest lower
/// bounds. Labels are presentation only; all queries use indices.
class Lattice {
 public:
  /// Builds the lattice whose order has `up_sets[x] = {y : x <= y}`.
  /// Throws on non-orders (CyclicCovers), missing bounds (NotBounded), or a
  /// pair without a unique lub/glb (NotALattice).
  static Lattice from_order(std::vector<std::string> names, std::vector<ElementSet> up_sets);
  /// As from_order, but returns nullopt instead of throwing.
  static std::optional<Lattice> try_from_order(std::vector<std::string> names,
                                               std::vector<ElementSet> up_sets);

  std::size_t size() const { return names_.size(); }
  ElementSet carrier() const { return ElementSet::full(size()); }

  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(Element x) const { return names_[x]; }
  std::optional<Element> index_of(std::string_view label) const;

  bool leq(Element x, Element y) const { return up_[x].contains(y); }
  Element join(Element x, Element y) const { return join_[x * size() + y]; }
  Element meet(Element x, Element y) const { return meet_[x * size() + y]; }
  Element bottom() const { return bottom_; }
  Element top() const { return top_; }

  ElementSet up_set(Element x) const { return up_[x]; }
  ElementSet down_set(Element x) const { return down_[x]; }

  /// Cover pairs (x, y): x < y with nothing strictly between.
  std::vector<std::pair<Element, Element>> covers() const;

  /// The sublattice on `members` with indices renumbered in increasing
  /// order. Throws NotASublattice unless `members` is closed under ∧ and ∨.
  Lattice sublattice(ElementSet members) const;

  /// Same order and tables; labels are ignored.
  bool same_structure(const Lattice& other) const;
  bool operator==(const Lattice& other) const {
    return names_ == other.names_ && same_structure(other);
  }

 private:
  Lattice() = default;
  static std::optional<Lattice> build(std::vector<std::string> names,
                                      std::vector<ElementSet> up_sets, bool raise);

  std::vector<std::string> names_;
  std::vector<ElementSet> up_;
  std::vector<ElementSet> down_;
  std::vector<Element> join_;
  std::vector<Element> meet_;
  Element bottom_ = 0;
  Element top_ = 0;
};

/// Builds a lattice from cover pairs (lower, upper) given by label.
/// Errors: DuplicateLabel, UnknownElement, CyclicCovers, NotBounded, NotALattice.
Lattice build_from_covers(std::vector<std::string> names,
                          const std::vector<std::pair<std::string, std::string>>& covers);
Lattice build_from_covers(std::vector<std::string> names,
                          const std::vector<std::pair<Element, Element>>& covers);

// ---------------------------------------------------------------------------
// Complements and orthocomplementations

/// {y : x ∨ y = 1 and x ∧ y = 0}
ElementSet complements(const Lattice& l, Element x);

/// All involutions selecting a complement pointwise, without the
/// order-reversal requirement.
std::vector<Involution> complement_involutions(const Lattice& l);

/// Involution, pointwise complement, OC1 (order reversal), OC2 and OC3
/// (De Morgan), reported separately.
std::vector<AxiomReport> check_orthocomplementation(const Lattice& l, const Involution& pi);
bool is_orthocomplementation(const Lattice& l, const Involution& pi);

/// Every orthocomplementation of `l`, in lexicographic order of their maps.
/// Empty when `l` is not an ortholattice.
std::vector<Involution> orthocomplementations(const Lattice& l);

// ---------------------------------------------------------------------------
// Identities and forbidden sublattices

/// x∨(y∧(x∨z)) = (x∨y)∧(x∨z) for all triples.
AxiomReport is_modular(const Lattice& l);
/// Same identity restricted to triples from a ∧,∨-closed subset.
AxiomReport is_modular(const Lattice& l, ElementSet subset);

/// x∧(y∨z) = (x∧y)∨(x∧z) on a ∧,∨-closed subset (NotASublattice otherwise).
AxiomReport is_distributive(const Lattice& l, ElementSet subset);
AxiomReport is_distributive(const Lattice& l);

/// Injective ∧,∨-preserving map pattern -> l, if one exists. The returned
/// vector is indexed by pattern elements.
std::optional<std::vector<Element>> find_sublattice_copy(const Lattice& l, const Lattice& pattern);

/// Least superset of `seeds` closed under ∧ and ∨ (and `pi`, if given).
ElementSet generated_sublattice(const Lattice& l, ElementSet seeds);
ElementSet generated_sublattice(const Lattice& l, ElementSet seeds, const Involution& pi);

/// x ≤ y ⟹ x∨(π(x)∧y) = y. Throws NotAnOrthocomplementation.
AxiomReport is_orthomodular(const Lattice& l, const Involution& pi);

/// OM1 (definition), OM2 (x ≤ y, x∨π(y) = 1 ⟹ x = y), OM3 (no hexagon
/// sublattice), OM4 (generated π-closed sublattices of comparable pairs are
/// distributive). Throws NotAnOrthocomplementation.
std::vector<AxiomReport> check_om_equivalences(const Lattice& l, const Involution& pi);

// ---------------------------------------------------------------------------
// Duality and isomorphism

/// Reversed order, swapped tables and bounds; labels unchanged.
Lattice dual_lattice(const Lattice& l);

/// An order isomorphism a -> b (indexed by elements of a), if any.
std::optional<std::vector<Element>> find_isomorphism(const Lattice& a, const Lattice& b);

/// All automorphisms of `l`.
std::vector<std::vector<Element>> automorphisms(const Lattice& l);

/// The hexagon as an ortholattice pattern: elements 0, a, b, a', b', 1 with
/// b < a and a' < b'.
const Lattice& hexagon_pattern();
/// The pentagon: 0, a, b, c, 1 with b < a.
const Lattice& pentagon_pattern();

}  // namespace mosaic
