#include "mosaic/equivalence.hpp"

#include <optional>

#include "mosaic/error.hpp"
#include "mosaic/nakano.hpp"

namespace mosaic {

OrthoPair make_ortho_pair(Lattice lattice, Involution pi) {
  if (!is_orthocomplementation(lattice, pi))
    throw Error(ErrorCode::NotAnOrthocomplementation, "pi is not an orthocomplementation");
  return OrthoPair{std::move(lattice), std::move(pi)};
}

std::vector<AxiomReport> check_dualizable_lmosaic(const Mosaic& m, const Involution& pi) {
  std::vector<AxiomReport> reports;
  const auto lms = verify_lmosaic(m);
  for (const auto& r : lms)
    if (!r.holds()) {
      reports.push_back(AxiomReport::fail("lmosaic", r.witness->elements, r.axiom));
      break;
    }
  if (reports.empty()) reports.push_back(AxiomReport::pass("lmosaic"));

  if (pi.size() != m.size()) {
    reports.push_back(AxiomReport::fail("dualizable", {}, "involution size differs"));
    return reports;
  }
  const auto dual = dualize(m, pi);
  if (!dual) {
    reports.push_back(AxiomReport::fail("dualizable", {}, "pi-dual is not a mosaic with neutral pi(e)"));
    return reports;
  }
  reports.push_back(AxiomReport::pass("dualizable"));
  reports.push_back(is_lmosaic(*dual) ? AxiomReport::pass("dual-lmosaic")
                                      : AxiomReport::fail("dual-lmosaic", {}, "pi-dual fails Lms1-4"));
  return reports;
}

AxiomReport check_pi_orthocomplementing(const Mosaic& m, const Involution& pi) {
  if (pi.size() != m.size()) throw Error(ErrorCode::SizeMismatch, "involution size differs");
  const Element one = pi(m.neutral);
  for (Element x = 0; x < m.size(); ++x) {
    if (!m.op(x, pi(x)).contains(one))
      return AxiomReport::fail("pi-orthocomplementing", {x}, "pi(e) not in x+pi(x)");
    for (Element y = 0; y < m.size(); ++y)
      if (m.op(y, y).contains(x) && !m.op(pi(x), pi(x)).contains(pi(y)))
        return AxiomReport::fail("pi-orthocomplementing", {x, y}, "x <= y but not pi(y) <= pi(x)");
  }
  return AxiomReport::pass("pi-orthocomplementing");
}

DualizableLMosaicPair make_dualizable_pair(Mosaic m, Involution pi) {
  for (const auto& r : check_dualizable_lmosaic(m, pi))
    if (!r.holds()) throw Error(ErrorCode::PreconditionFailed, r.axiom + ": " + r.witness->reason);
  return DualizableLMosaicPair{std::move(m), std::move(pi)};
}

DualizableLMosaicPair to_dualizable_lmosaic(const OrthoPair& ortho) {
  return make_dualizable_pair(additive_nakano(ortho.lattice).mosaic, ortho.pi);
}

// ---------------------------------------------------------------------------

OrthoPair reconstruct_lattice(const DualizableLMosaicPair& pair, std::vector<std::string> names) {
  const Mosaic& m = pair.mosaic;
  const Involution& pi = pair.pi;
  const std::size_t n = m.size();
  auto failure = [](const std::string& what, Element x, Element y) {
    return Error(ErrorCode::ReconstructionFailure,
                 what + " at (" + std::to_string(x) + ", " + std::to_string(y) + ")");
  };
  for (const auto& r : check_dualizable_lmosaic(m, pi))
    if (!r.holds()) throw Error(ErrorCode::ReconstructionFailure, r.axiom + " fails");

  if (names.empty())
    for (Element x = 0; x < n; ++x) names.push_back("e" + std::to_string(x));
  if (names.size() != n) throw Error(ErrorCode::SizeMismatch, "label count differs from carrier");

  auto lattice = Lattice::try_from_order(std::move(names), induced_order(m));
  if (!lattice) throw Error(ErrorCode::ReconstructionFailure, "induced order is not a lattice");
  const Lattice& l = *lattice;
  if (l.bottom() != m.neutral) throw failure("bottom differs from neutral", l.bottom(), m.neutral);
  if (l.top() != pi(m.neutral)) throw failure("top differs from pi(neutral)", l.top(), m.neutral);

  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) {
      std::optional<Element> lub;
      for (Element z : m.op(x, y))
        if (m.op(z, z).contains(x) && m.op(z, z).contains(y)) lub = z;
      if (!lub || *lub != l.join(x, y)) throw failure("Lms4 element is not the join", x, y);
      if (pi(l.join(pi(x), pi(y))) != l.meet(x, y))
        throw failure("pi(pi(x) v pi(y)) is not the meet", x, y);
    }
  if (!is_orthocomplementation(l, pi))
    throw Error(ErrorCode::ReconstructionFailure, "pi is not an orthocomplementation");

  const Multioperation table = nakano_table(l, Flavor::Additive);
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      if (table(x, y) != m.op(x, y)) throw failure("table differs from the Nakano table", x, y);
  return OrthoPair{std::move(*lattice), pi};
}

AxiomReport check_round_trip(const OrthoPair& p) {
  const Lattice& l = p.lattice;
  std::optional<OrthoPair> back;
  try {
    back = reconstruct_lattice(to_dualizable_lmosaic(p), l.names());
  } catch (const Error& e) {
    return AxiomReport::fail("roundtrip", {}, e.what());
  }
  for (Element x = 0; x < l.size(); ++x) {
    for (Element y = 0; y < l.size(); ++y) {
      if (back->lattice.leq(x, y) != l.leq(x, y))
        return AxiomReport::fail("roundtrip", {x, y}, "order differs");
      if (back->lattice.join(x, y) != l.join(x, y))
        return AxiomReport::fail("roundtrip", {x, y}, "join differs");
      if (back->lattice.meet(x, y) != l.meet(x, y))
        return AxiomReport::fail("roundtrip", {x, y}, "meet differs");
    }
    if (back->pi(x) != p.pi(x)) return AxiomReport::fail("roundtrip", {x}, "pi differs");
  }
  return AxiomReport::pass("roundtrip");
}

AxiomReport check_table_round_trip(const DualizableLMosaicPair& p) {
  std::optional<DualizableLMosaicPair> again;
  try {
    again = to_dualizable_lmosaic(reconstruct_lattice(p));
  } catch (const Error& e) {
    return AxiomReport::fail("table-roundtrip", {}, e.what());
  }
  const Mosaic& m = p.mosaic;
  for (Element x = 0; x < m.size(); ++x)
    for (Element y = 0; y < m.size(); ++y)
      if (again->mosaic.op(x, y) != m.op(x, y))
        return AxiomReport::fail("table-roundtrip", {x, y}, "cell differs");
  if (again->mosaic.neutral != m.neutral)
    return AxiomReport::fail("table-roundtrip", {m.neutral}, "neutral differs");
  if (!(again->pi == p.pi)) return AxiomReport::fail("table-roundtrip", {}, "pi differs");
  return AxiomReport::pass("table-roundtrip");
}

// ---------------------------------------------------------------------------

MorphismTransfer morphism_transfer_check(const std::vector<Element>& f, const OrthoPair& from,
                                         const OrthoPair& to) {
  const Lattice& a = from.lattice;
  const Lattice& b = to.lattice;
  if (f.size() != a.size()) throw Error(ErrorCode::SizeMismatch, "map is not total");
  for (Element y : f)
    if (y >= b.size()) throw Error(ErrorCode::SizeMismatch, "map leaves the target carrier");

  MorphismTransfer t;
  bool joins = true, meets = true;
  for (Element x = 0; x < a.size(); ++x)
    for (Element y = 0; y < a.size(); ++y) {
      joins = joins && f[a.join(x, y)] == b.join(f[x], f[y]);
      meets = meets && f[a.meet(x, y)] == b.meet(f[x], f[y]);
    }
  t.lattice_morphism = joins && meets;
  t.join_zero_morphism = joins && f[a.bottom()] == b.bottom();

  t.intertwines_pi = true;
  for (Element x = 0; x < a.size(); ++x)
    t.intertwines_pi = t.intertwines_pi && f[from.pi(x)] == to.pi(f[x]);

  const Mosaic source = additive_nakano(a).mosaic;
  const Mosaic target = additive_nakano(b).mosaic;
  t.mosaic_morphism = check_morphism(f, source, target, MorphismKind::Morphism).holds();

  if (t.lattice_arrow() != t.mosaic_arrow())
    t.report = AxiomReport::fail("morphism-transfer", f, "arrow status differs between sides");
  else if (t.mosaic_morphism != t.join_zero_morphism)
    t.report = AxiomReport::fail("morphism-transfer", f,
                                 "mosaic morphism status differs from (v, 0)-preservation");
  else
    t.report = AxiomReport::pass("morphism-transfer");
  return t;
}

// ---------------------------------------------------------------------------

AxiomReport is_orthomodular_mosaic(const DualizableLMosaicPair& pair) {
  const Mosaic& m = pair.mosaic;
  const Element one = pair.pi(m.neutral);
  if (m.op(one, one) != m.op.carrier())
    throw Error(ErrorCode::PreconditionFailed, "1+1 is not the whole carrier");
  for (Element u = 0; u < m.size(); ++u) {
    bool extremal = true;
    for (Element x = 0; x < m.size() && extremal; ++x)
      extremal = !(m.op(x, x).contains(u) && x != u);
    if (extremal != (u == one))
      throw Error(ErrorCode::PreconditionFailed, "pi(e) is not the characterized top element");
  }

  for (Element x = 0; x < m.size(); ++x)
    for (Element y = 0; y < m.size(); ++y)
      if (x != y && m.op(y, y).contains(x) && m.op(x, pair.pi(y)).contains(one))
        return AxiomReport::fail("orthomodular-mosaic", {x, y},
                                 "x in y+y and 1 in x+pi(y) but x != y");
  return AxiomReport::pass("orthomodular-mosaic");
}

ElementSet generated_ortho_submosaic(const DualizableLMosaicPair& pair, Element x, Element y) {
  const OrthoPair ortho = reconstruct_lattice(pair);
  const Element e = pair.mosaic.neutral;
  return generated_sublattice(ortho.lattice, ElementSet{x, y, e, pair.pi(e)}, pair.pi);
}

AxiomReport generated_polygroup_check(const DualizableLMosaicPair& pair, Element x, Element y) {
  if (!is_orthomodular_mosaic(pair).holds())
    throw Error(ErrorCode::PreconditionFailed, "pair does not satisfy the orthomodularity criterion");
  const ElementSet generated = generated_ortho_submosaic(pair, x, y);
  const Restriction r = restrict_to(pair.mosaic.op, generated);
  const auto check = verify_mosaic(r.op);
  if (!check.ok())
    return AxiomReport::fail("generated-polygroup", {x, y}, "restriction is not a mosaic");
  if (!is_associative(r.op).holds())
    return AxiomReport::fail("generated-polygroup", {x, y}, "restriction is not associative");
  return AxiomReport::pass("generated-polygroup");
}

// ---------------------------------------------------------------------------

namespace {

std::vector<Involution> all_involutions(std::size_t n) {
  std::vector<Involution> out;
  std::vector<Element> map(n, n);
  auto rec = [&](auto&& self, Element x) -> void {
    while (x < n && map[x] != n) ++x;
    if (x == n) {
      out.emplace_back(map);
      return;
    }
    for (Element y = x; y < n; ++y) {
      if (map[y] != n) continue;
      map[x] = y;
      map[y] = x;
      self(self, x + 1);
      map[x] = map[y] = n;
    }
  };
  rec(rec, 0);
  return out;
}

}  // namespace

std::vector<DualizableLMosaicPair> enumerate_dualizable_lmosaics(std::size_t n) {
  if (n == 0 || n > 4)
    throw Error(ErrorCode::SizeTooLarge, "dualizable L-mosaic search is limited to 1..4 elements");
  const ElementSet carrier = ElementSet::full(n);
  const ElementSet nonzero = carrier - ElementSet{0};

  // Free cells: (x, y) with 1 <= x <= y < n. Diagonal cells must contain
  // {0, x}; off-diagonal cells are nonempty and avoid 0 so that every
  // element is its own unique inverse.
  struct Slot {
    Element x, y;
    std::vector<ElementSet> options;
  };
  std::vector<Slot> slots;
  for (Element x = 1; x < n; ++x)
    for (Element y = x; y < n; ++y) {
      Slot slot{x, y, {}};
      if (x == y) {
        const ElementSet required{0, x};
        const ElementSet rest = carrier - required;
        for (std::uint64_t sub = rest.bits();; sub = (sub - 1) & rest.bits()) {
          slot.options.push_back(required | ElementSet::from_bits(sub));
          if (sub == 0) break;
        }
      } else {
        for (std::uint64_t sub = nonzero.bits(); sub != 0; sub = (sub - 1) & nonzero.bits())
          slot.options.push_back(ElementSet::from_bits(sub));
      }
      slots.push_back(std::move(slot));
    }

  const auto involutions = all_involutions(n);
  std::vector<DualizableLMosaicPair> out;
  Multioperation table(n);
  for (Element x = 0; x < n; ++x) {
    table.set(0, x, ElementSet::single(x));
    table.set(x, 0, ElementSet::single(x));
  }
  auto rec = [&](auto&& self, std::size_t k) -> void {
    if (k == slots.size()) {
      auto check = verify_mosaic(table);
      if (!check.ok() || !is_lmosaic(*check.mosaic)) return;
      for (const auto& pi : involutions)
        if (all_hold(check_dualizable_lmosaic(*check.mosaic, pi)))
          out.push_back(DualizableLMosaicPair{*check.mosaic, pi});
      return;
    }
    const Slot& slot = slots[k];
    for (ElementSet option : slot.options) {
      table.set(slot.x, slot.y, option);
      table.set(slot.y, slot.x, option);
      self(self, k + 1);
    }
  };
  rec(rec, 0);
  return out;
}

}  // namespace mosaic
