#pragma once

#include <optional>
#include <vector>

#include "mosaic/axiom_report.hpp"
#include "mosaic/element_set.hpp"
#include "mosaic/lattice.hpp"

namespace mosaic {

/// A multimap A ⊸ B: each element of A goes to a subset of B.
class Multimap {
 public:
  Multimap(std::size_t domain, std::size_t codomain);
  Multimap(std::size_t codomain, std::vector<ElementSet> images);
  static Multimap identity(std::size_t n);

  std::size_t domain_size() const { return images_.size(); }
  std::size_t codomain_size() const { return codomain_; }
  ElementSet operator()(Element x) const { return images_[x]; }
  void set(Element x, ElementSet image);

  bool operator==(const Multimap&) const = default;

 private:
  std::size_t codomain_;
  std::vector<ElementSet> images_;
};

/// (g∘f)(x) = ⋃_{y ∈ f(x)} g(y). Throws SizeMismatch unless f's codomain is g's domain.
Multimap compose_relations(const Multimap& f, const Multimap& g);

/// A binary multioperation on {0..n-1}: an n×n table of subsets. Empty
/// cells are allowed (partial magma).
class Multioperation {
 public:
  explicit Multioperation(std::size_t n);

  std::size_t size() const { return n_; }
  ElementSet carrier() const { return ElementSet::full(n_); }
  ElementSet operator()(Element x, Element y) const { return cells_[x * n_ + y]; }
  void set(Element x, Element y, ElementSet cell);

  /// Set-extended product: ⋃_{x ∈ lhs, y ∈ rhs} x⊡y.
  ElementSet apply(ElementSet lhs, ElementSet rhs) const;
  /// x⊡ᵈy := y⊡x
  Multioperation dual() const;

  bool operator==(const Multioperation&) const = default;

 private:
  std::size_t n_;
  std::vector<ElementSet> cells_;
};

/// A verified commutative mosaic: neutral element and the involution ρ
/// sending each element to its unique inverse.
struct Mosaic {
  Multioperation op;
  Element neutral = 0;
  Involution rho;

  std::size_t size() const { return op.size(); }
};

std::optional<Element> find_neutral(const Multioperation& op);

/// {y : e ∈ (x⊡y) ∩ (y⊡x)}
ElementSet inverses(const Multioperation& op, Element neutral, Element x);

struct MosaicCheck {
  std::vector<AxiomReport> reports;
  std::optional<Mosaic> mosaic;

  bool ok() const { return mosaic.has_value(); }
};

/// Runs the mosaic pipeline: totality, commutativity, neutral element,
/// unique inverses, ρ-reversibility for ρ = inversion, then the consequences
/// that must follow (ρ(e) = e, ρ involutive, RINV, ρ a strong isomorphism
/// onto the dual table, three-way membership equivalence). Later stages are
/// skipped once a stage they depend on fails. `mosaic` is set iff every
/// evaluated report holds.
MosaicCheck verify_mosaic(const Multioperation& op);

AxiomReport is_total(const Multioperation& op);
AxiomReport is_commutative(const Multioperation& op);
/// (x⊡y)⊡z = x⊡(y⊡z), both sides set-extended.
AxiomReport is_associative(const Multioperation& op);
/// x⊡A = A for every x.
AxiomReport is_reproductive(const Multioperation& op);
/// z ∈ x⊡y ⟹ x ∈ z⊡ρ(y) and y ∈ ρ(x)⊡z.
AxiomReport is_reversible(const Multioperation& op, const std::vector<Element>& rho);

/// Verified mosaic that is also associative.
bool is_polygroup(const Multioperation& op);

enum class MorphismKind {
  Morphism,  // f(x⊡y) ⊆ f(x)⊡f(y)
  Strong,    // f(x⊡y) = f(x)⊡f(y)
  Embedding, // injective, f(x⊡y) = (f(x)⊡f(y)) ∩ f(A)
};

/// Checks a map between mosaics: the condition for `kind`, unitarity
/// f(e) = e', and (when both hold) preservation of inverses.
AxiomReport check_morphism(const std::vector<Element>& f, const Mosaic& from, const Mosaic& to,
                           MorphismKind kind);

/// Lms1..Lms4, one report each.
std::vector<AxiomReport> verify_lmosaic(const Mosaic& m);
bool is_lmosaic(const Mosaic& m);

/// The order y ≤ x :⟺ y ∈ x⊞x of an L-mosaic, as up-sets (row y holds
/// every x with y ≤ x). Throws NotAnLMosaic.
std::vector<ElementSet> induced_order(const Mosaic& m);

/// Table restricted to `members`, renumbered in increasing order.
struct Restriction {
  std::vector<Element> members;
  Multioperation op;
};
Restriction restrict_to(const Multioperation& op, ElementSet members);

/// B contains e and (B, ⊞ ∩ B) is itself a mosaic.
bool is_submosaic(const Mosaic& m, ElementSet subset);
/// Submosaic whose products never leave B.
bool is_strong_submosaic(const Mosaic& m, ElementSet subset);

/// ⋃_{x ∈ B} x⊞x. Requires Lms1 and Lms2 (NotAnLMosaic) and B a submosaic
/// (NotASubmosaic).
ElementSet strong_closure(const Mosaic& m, ElementSet subset);

enum class DualFormula {
  Corrected,  // x ⊞π y := π(π(x) ⊞ π(y))
  Literal,    // x ⊞π y := π(x) ⊞ π(y)
};

/// The π-transported table, before any verification.
Multioperation transport(const Multioperation& op, const Involution& pi,
                         DualFormula formula = DualFormula::Corrected);

/// The π-dual mosaic with neutral π(e), or nullopt when the transported
/// table is not a commutative mosaic with that neutral element.
std::optional<Mosaic> dualize(const Mosaic& m, const Involution& pi,
                              DualFormula formula = DualFormula::Corrected);

/// A bijection f with f(x⊡y) = f(x)⊡'f(y) for all x, y, if any.
std::optional<std::vector<Element>> find_mosaic_isomorphism(const Multioperation& a,
                                                            const Multioperation& b);

}  // namespace mosaic
