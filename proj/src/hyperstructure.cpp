#include "mosaic/hyperstructure.hpp"

#include <utility>

#include "mosaic/error.hpp"
#include "search.hpp"

namespace mosaic {

namespace {

ElementSet image_of(const std::vector<Element>& f, ElementSet s) {
  ElementSet out;
  for (Element x : s) out.insert(f[x]);
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// Multimaps

Multimap::Multimap(std::size_t domain, std::size_t codomain)
    : codomain_(codomain), images_(domain) {}

Multimap::Multimap(std::size_t codomain, std::vector<ElementSet> images)
    : codomain_(codomain), images_(std::move(images)) {
  for (ElementSet s : images_)
    if (!s.is_subset_of(ElementSet::full(codomain_)))
      throw Error(ErrorCode::SizeMismatch, "image outside the codomain");
}

Multimap Multimap::identity(std::size_t n) {
  Multimap id(n, n);
  for (Element x = 0; x < n; ++x) id.images_[x] = ElementSet::single(x);
  return id;
}

void Multimap::set(Element x, ElementSet image) {
  if (!image.is_subset_of(ElementSet::full(codomain_)))
    throw Error(ErrorCode::SizeMismatch, "image outside the codomain");
  images_.at(x) = image;
}

Multimap compose_relations(const Multimap& f, const Multimap& g) {
  if (f.codomain_size() != g.domain_size())
    throw Error(ErrorCode::SizeMismatch, "codomain of f is not the domain of g");
  Multimap out(f.domain_size(), g.codomain_size());
  for (Element x = 0; x < f.domain_size(); ++x) {
    ElementSet image;
    for (Element y : f(x)) image |= g(y);
    out.set(x, image);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Multioperations

Multioperation::Multioperation(std::size_t n) : n_(n), cells_(n * n) {
  if (n > kMaxCarrier)
    throw Error(ErrorCode::SizeTooLarge, "carrier exceeds " + std::to_string(kMaxCarrier));
}

void Multioperation::set(Element x, Element y, ElementSet cell) {
  if (x >= n_ || y >= n_ || !cell.is_subset_of(carrier()))
    throw Error(ErrorCode::SizeMismatch, "cell outside the carrier");
  cells_[x * n_ + y] = cell;
}

ElementSet Multioperation::apply(ElementSet lhs, ElementSet rhs) const {
  ElementSet out;
  for (Element x : lhs)
    for (Element y : rhs) out |= (*this)(x, y);
  return out;
}

Multioperation Multioperation::dual() const {
  Multioperation d(n_);
  for (Element x = 0; x < n_; ++x)
    for (Element y = 0; y < n_; ++y) d.cells_[x * n_ + y] = (*this)(y, x);
  return d;
}

std::optional<Element> find_neutral(const Multioperation& op) {
  for (Element e = 0; e < op.size(); ++e) {
    bool neutral = true;
    for (Element x = 0; x < op.size() && neutral; ++x) {
      const ElementSet just_x = ElementSet::single(x);
      neutral = op(e, x) == just_x && op(x, e) == just_x;
    }
    if (neutral) return e;
  }
  return std::nullopt;
}

ElementSet inverses(const Multioperation& op, Element neutral, Element x) {
  ElementSet out;
  for (Element y = 0; y < op.size(); ++y)
    if (op(x, y).contains(neutral) && op(y, x).contains(neutral)) out.insert(y);
  return out;
}

AxiomReport is_total(const Multioperation& op) {
  for (Element x = 0; x < op.size(); ++x)
    for (Element y = 0; y < op.size(); ++y)
      if (op(x, y).empty()) return AxiomReport::fail("totality", {x, y}, "empty cell");
  return AxiomReport::pass("totality");
}

AxiomReport is_commutative(const Multioperation& op) {
  for (Element x = 0; x < op.size(); ++x)
    for (Element y = x + 1; y < op.size(); ++y)
      if (op(x, y) != op(y, x)) return AxiomReport::fail("commutativity", {x, y}, "x*y != y*x");
  return AxiomReport::pass("commutativity");
}

AxiomReport is_associative(const Multioperation& op) {
  const std::size_t n = op.size();
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      for (Element z = 0; z < n; ++z) {
        const ElementSet left = op.apply(op(x, y), ElementSet::single(z));
        const ElementSet right = op.apply(ElementSet::single(x), op(y, z));
        if (left != right)
          return AxiomReport::fail("associativity", {x, y, z}, "(x*y)*z != x*(y*z)");
      }
  return AxiomReport::pass("associativity");
}

AxiomReport is_reproductive(const Multioperation& op) {
  for (Element x = 0; x < op.size(); ++x)
    if (op.apply(ElementSet::single(x), op.carrier()) != op.carrier())
      return AxiomReport::fail("reproductivity", {x}, "x*A != A");
  return AxiomReport::pass("reproductivity");
}

AxiomReport is_reversible(const Multioperation& op, const std::vector<Element>& rho) {
  const std::size_t n = op.size();
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      for (Element z : op(x, y)) {
        if (!op(z, rho[y]).contains(x))
          return AxiomReport::fail("reversibility", {x, y, z}, "z in x*y but x not in z*rho(y)");
        if (!op(rho[x], z).contains(y))
          return AxiomReport::fail("reversibility", {x, y, z}, "z in x*y but y not in rho(x)*z");
      }
  return AxiomReport::pass("reversibility");
}

namespace {

// Consequences of reversibility for a unital magma with inversion rho.
void check_inversion_consequences(const Multioperation& op, Element e,
                                  const std::vector<Element>& rho,
                                  std::vector<AxiomReport>& reports) {
  const std::size_t n = op.size();
  reports.push_back(rho[e] == e ? AxiomReport::pass("rho-fixes-neutral")
                                : AxiomReport::fail("rho-fixes-neutral", {e}, "rho(e) != e"));

  AxiomReport involution = AxiomReport::pass("rho-involution");
  AxiomReport rinv = AxiomReport::pass("rinv");
  for (Element x = 0; x < n; ++x) {
    if (involution.holds() && rho[rho[x]] != x)
      involution = AxiomReport::fail("rho-involution", {x}, "rho(rho(x)) != x");
    if (rinv.holds() && !(op(x, rho[x]).contains(e) && op(rho[x], x).contains(e)))
      rinv = AxiomReport::fail("rinv", {x}, "e not in x*rho(x) and rho(x)*x");
  }
  reports.push_back(involution);
  reports.push_back(rinv);

  // ρ: (A, ⊡) -> (A, ⊡ᵈ) is a bijective strong morphism.
  const Multioperation dual = op.dual();
  AxiomReport dual_iso = AxiomReport::pass("rho-dual-isomorphism");
  if (image_of(rho, op.carrier()) != op.carrier())
    dual_iso = AxiomReport::fail("rho-dual-isomorphism", {}, "rho is not bijective");
  for (Element x = 0; x < n && dual_iso.holds(); ++x)
    for (Element y = 0; y < n; ++y)
      if (image_of(rho, op(x, y)) != dual(rho[x], rho[y])) {
        dual_iso = AxiomReport::fail("rho-dual-isomorphism", {x, y},
                                     "rho(x*y) != rho(x) *d rho(y)");
        break;
      }
  reports.push_back(dual_iso);

  AxiomReport three_way = AxiomReport::pass("three-way-equivalence");
  for (Element x = 0; x < n && three_way.holds(); ++x)
    for (Element y = 0; y < n && three_way.holds(); ++y)
      for (Element z = 0; z < n; ++z) {
        const bool a = op(x, y).contains(z);
        const bool b = op(z, rho[y]).contains(x);
        const bool c = op(rho[x], z).contains(y);
        if (a != b || b != c) {
          three_way = AxiomReport::fail("three-way-equivalence", {x, y, z},
                                        "z in x*y, x in z*rho(y), y in rho(x)*z disagree");
          break;
        }
      }
  reports.push_back(three_way);
}

}  // namespace

MosaicCheck verify_mosaic(const Multioperation& op) {
  MosaicCheck check;
  auto& reports = check.reports;
  reports.push_back(is_total(op));
  reports.push_back(is_commutative(op));

  const auto neutral = find_neutral(op);
  if (!neutral) {
    reports.push_back(AxiomReport::fail("neutral", {}, "no neutral element"));
    return check;
  }
  reports.push_back(AxiomReport::pass("neutral"));

  std::vector<Element> rho(op.size());
  AxiomReport invertible = AxiomReport::pass("invertibility");
  for (Element x = 0; x < op.size(); ++x) {
    const ElementSet inv = inverses(op, *neutral, x);
    if (inv.size() != 1) {
      invertible = AxiomReport::fail("invertibility", {x},
                                     inv.empty() ? "no inverse" : "several inverses");
      break;
    }
    rho[x] = inv.front();
  }
  reports.push_back(invertible);
  if (!invertible.holds()) return check;

  reports.push_back(is_reversible(op, rho));
  if (!reports.back().holds()) return check;

  check_inversion_consequences(op, *neutral, rho, reports);
  if (all_hold(reports)) check.mosaic = Mosaic{op, *neutral, Involution(rho)};
  return check;
}

bool is_polygroup(const Multioperation& op) {
  return verify_mosaic(op).ok() && is_associative(op).holds();
}

// ---------------------------------------------------------------------------
// Morphisms

AxiomReport check_morphism(const std::vector<Element>& f, const Mosaic& from, const Mosaic& to,
                           MorphismKind kind) {
  const char* name = kind == MorphismKind::Morphism ? "morphism"
                     : kind == MorphismKind::Strong ? "strong-morphism"
                                                    : "embedding";
  if (f.size() != from.size())
    throw Error(ErrorCode::SizeMismatch, "map is not total on the source carrier");
  for (Element y : f)
    if (y >= to.size()) throw Error(ErrorCode::SizeMismatch, "map leaves the target carrier");

  if (f[from.neutral] != to.neutral)
    return AxiomReport::fail(name, {from.neutral}, "not unitary: f(e) != e'");

  const ElementSet range = image_of(f, from.op.carrier());
  if (kind == MorphismKind::Embedding && range.size() != f.size())
    return AxiomReport::fail(name, {}, "not injective");

  for (Element x = 0; x < from.size(); ++x)
    for (Element y = 0; y < from.size(); ++y) {
      const ElementSet mapped = image_of(f, from.op(x, y));
      const ElementSet target = to.op(f[x], f[y]);
      switch (kind) {
        case MorphismKind::Morphism:
          if (!mapped.is_subset_of(target))
            return AxiomReport::fail(name, {x, y}, "f(x*y) not within f(x)*f(y)");
          break;
        case MorphismKind::Strong:
          if (mapped != target) return AxiomReport::fail(name, {x, y}, "f(x*y) != f(x)*f(y)");
          break;
        case MorphismKind::Embedding:
          if (mapped != (target & range))
            return AxiomReport::fail(name, {x, y}, "f(x*y) != (f(x)*f(y)) & f(A)");
          break;
      }
    }

  // Unitary morphisms between invertible magmas preserve inverses.
  for (Element x = 0; x < from.size(); ++x)
    if (f[from.rho(x)] != to.rho(f[x]))
      return AxiomReport::fail(name, {x}, "f(x^-1) != f(x)^-1");
  return AxiomReport::pass(name);
}

// ---------------------------------------------------------------------------
// L-mosaics

std::vector<AxiomReport> verify_lmosaic(const Mosaic& m) {
  const auto& op = m.op;
  const std::size_t n = m.size();
  AxiomReport lms1 = AxiomReport::pass("Lms1");
  AxiomReport lms2 = AxiomReport::pass("Lms2");
  for (Element x = 0; x < n; ++x) {
    const ElementSet xx = op(x, x);
    if (lms1.holds() && !(xx.contains(m.neutral) && xx.contains(x)))
      lms1 = AxiomReport::fail("Lms1", {x}, "0 or x missing from x+x");
    if (lms2.holds() && op.apply(xx, xx) != xx)
      lms2 = AxiomReport::fail("Lms2", {x}, "(x+x)+(x+x) != x+x");
  }

  AxiomReport lms3 = AxiomReport::pass("Lms3");
  AxiomReport lms4 = AxiomReport::pass("Lms4");
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) {
      const ElementSet xy = op(x, y);
      if (lms3.holds()) {
        const ElementSet both =
            op.apply(ElementSet::single(x), xy) & op.apply(xy, ElementSet::single(y));
        if (!both.is_subset_of(xy))
          lms3 = AxiomReport::fail("Lms3", {x, y}, "(x+(x+y)) & ((x+y)+y) not within x+y");
      }
      if (lms4.holds()) {
        std::vector<Element> witness{x, y};
        for (Element z : xy)
          if (op(z, z).contains(x) && op(z, z).contains(y)) witness.push_back(z);
        if (witness.size() != 3)
          lms4 = AxiomReport::fail("Lms4", witness,
                                   witness.size() == 2 ? "no z in x+y with x,y in z+z"
                                                       : "several z in x+y with x,y in z+z");
      }
    }
  return {lms1, lms2, lms3, lms4};
}

bool is_lmosaic(const Mosaic& m) { return all_hold(verify_lmosaic(m)); }

std::vector<ElementSet> induced_order(const Mosaic& m) {
  if (!is_lmosaic(m)) throw Error(ErrorCode::NotAnLMosaic, "Lms1-Lms4 do not all hold");
  std::vector<ElementSet> up(m.size());
  for (Element x = 0; x < m.size(); ++x)
    for (Element y : m.op(x, x)) up[y].insert(x);
  return up;
}

Restriction restrict_to(const Multioperation& op, ElementSet members) {
  if (!members.is_subset_of(op.carrier()))
    throw Error(ErrorCode::SizeMismatch, "subset outside the carrier");
  Restriction r{members.to_vector(), Multioperation(members.size())};
  std::vector<Element> local(op.size(), 0);
  for (std::size_t i = 0; i < r.members.size(); ++i) local[r.members[i]] = i;
  for (std::size_t i = 0; i < r.members.size(); ++i)
    for (std::size_t j = 0; j < r.members.size(); ++j) {
      ElementSet cell;
      for (Element z : op(r.members[i], r.members[j]) & members) cell.insert(local[z]);
      r.op.set(i, j, cell);
    }
  return r;
}

bool is_submosaic(const Mosaic& m, ElementSet subset) {
  if (!subset.contains(m.neutral) || !subset.is_subset_of(m.op.carrier())) return false;
  return verify_mosaic(restrict_to(m.op, subset).op).ok();
}

bool is_strong_submosaic(const Mosaic& m, ElementSet subset) {
  if (!is_submosaic(m, subset)) return false;
  return m.op.apply(subset, subset).is_subset_of(subset);
}

ElementSet strong_closure(const Mosaic& m, ElementSet subset) {
  const auto lms = verify_lmosaic(m);
  if (!lms[0].holds() || !lms[1].holds())
    throw Error(ErrorCode::NotAnLMosaic, "strong closure needs Lms1 and Lms2");
  if (!is_submosaic(m, subset)) throw Error(ErrorCode::NotASubmosaic, "subset is not a submosaic");
  ElementSet closure;
  for (Element x : subset) closure |= m.op(x, x);
  return closure;
}

// ---------------------------------------------------------------------------
// π-duals

Multioperation transport(const Multioperation& op, const Involution& pi, DualFormula formula) {
  if (pi.size() != op.size())
    throw Error(ErrorCode::SizeMismatch, "involution and carrier sizes differ");
  Multioperation out(op.size());
  for (Element x = 0; x < op.size(); ++x)
    for (Element y = 0; y < op.size(); ++y) {
      const ElementSet cell = op(pi(x), pi(y));
      out.set(x, y, formula == DualFormula::Corrected ? pi.image(cell) : cell);
    }
  return out;
}

std::optional<Mosaic> dualize(const Mosaic& m, const Involution& pi, DualFormula formula) {
  auto check = verify_mosaic(transport(m.op, pi, formula));
  if (!check.ok() || check.mosaic->neutral != pi(m.neutral)) return std::nullopt;
  return std::move(check.mosaic);
}

std::optional<std::vector<Element>> find_mosaic_isomorphism(const Multioperation& a,
                                                            const Multioperation& b) {
  if (a.size() != b.size()) return std::nullopt;
  const std::size_t n = a.size();
  auto signature = [n](const Multioperation& op, Element x) {
    std::size_t row = 0;
    for (Element y = 0; y < n; ++y) row += op(x, y).size();
    return std::pair{op(x, x).size(), row};
  };
  std::vector<ElementSet> candidates(n);
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      if (signature(a, x) == signature(b, y)) candidates[x].insert(y);

  std::optional<std::vector<Element>> found;
  detail::search_injections(
      n, n, [&](std::size_t i) { return candidates[i]; },
      [&](const std::vector<Element>& f, std::size_t i) {
        const ElementSet assigned = ElementSet::full(i + 1);
        ElementSet assigned_image;
        for (Element k = 0; k <= i; ++k) assigned_image.insert(f[k]);
        for (Element x = 0; x <= i; ++x)
          for (Element y = 0; y <= i; ++y) {
            if (x != i && y != i && i > 0) {
              // Cells already checked against a smaller assignment still need
              // the new element i compared on both sides.
              const bool in_a = a(x, y).contains(i);
              const bool in_b = b(f[x], f[y]).contains(f[i]);
              if (in_a != in_b) return false;
              continue;
            }
            const ElementSet cell = a(x, y);
            const ElementSet target = b(f[x], f[y]);
            if (cell.size() != target.size()) return false;
            if (image_of(f, cell & assigned) != (target & assigned_image)) return false;
          }
        return true;
      },
      [&](const std::vector<Element>& f) {
        found = f;
        return true;
      });
  return found;
}

}  // namespace mosaic
