#include "mosaic/nakano.hpp"

#include <optional>
#include <stdexcept>

#include "mosaic/error.hpp"

namespace mosaic {

std::string_view to_string(Flavor flavor) {
  return flavor == Flavor::Additive ? "additive" : "multiplicative";
}

Multioperation nakano_table(const Lattice& l, Flavor flavor) {
  const std::size_t n = l.size();
  auto op = [&](Element x, Element y) {
    return flavor == Flavor::Additive ? l.join(x, y) : l.meet(x, y);
  };
  Multioperation table(n);
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) {
      const Element xy = op(x, y);
      ElementSet cell;
      for (Element z = 0; z < n; ++z)
        if (op(x, z) == xy && op(z, y) == xy) cell.insert(z);
      table.set(x, y, cell);
    }
  return table;
}

NakanoMosaic nakano(const Lattice& l, Flavor flavor) {
  auto check = verify_mosaic(nakano_table(l, flavor));
  const Element expected = flavor == Flavor::Additive ? l.bottom() : l.top();
  if (!check.ok() || check.mosaic->neutral != expected ||
      check.mosaic->rho != Involution::identity(l.size()))
    throw std::logic_error("Nakano table of a lattice failed mosaic verification");
  return NakanoMosaic{l, flavor, std::move(*check.mosaic)};
}

NakanoMosaic additive_nakano(const Lattice& l) { return nakano(l, Flavor::Additive); }
NakanoMosaic multiplicative_nakano(const Lattice& l) { return nakano(l, Flavor::Multiplicative); }

Element extremum_by_characterization(const NakanoMosaic& m) {
  const auto& op = m.mosaic.op;
  std::optional<Element> found;
  for (Element u = 0; u < op.size(); ++u) {
    bool extremal = true;
    for (Element x = 0; x < op.size() && extremal; ++x)
      if (op(x, x).contains(u) && x != u) extremal = false;
    if (!extremal) continue;
    if (found) throw Error(ErrorCode::NoUniqueExtremum, "several candidates");
    found = u;
  }
  if (!found) throw Error(ErrorCode::NoUniqueExtremum, "no candidate");
  return *found;
}

Restriction restrict_to_sublattice(const NakanoMosaic& m, ElementSet sub) {
  (void)m.base.sublattice(sub);  // validates closure
  const Element bound = m.flavor == Flavor::Additive ? m.base.bottom() : m.base.top();
  if (!sub.contains(bound))
    throw Error(ErrorCode::MissingBound, "sublattice lacks the neutral bound " + m.base.name(bound));
  return restrict_to(m.mosaic.op, sub);
}

std::vector<AxiomReport> check_nakano_properties(const Lattice& l) {
  const std::size_t n = l.size();
  const Multioperation add = nakano_table(l, Flavor::Additive);
  const Multioperation mul = nakano_table(l, Flavor::Multiplicative);
  std::vector<AxiomReport> reports;

  AxiomReport antisym = AxiomReport::pass("antisym");
  AxiomReport sup = AxiomReport::pass("sup");
  AxiomReport inf = AxiomReport::pass("inf");
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) {
      const ElementSet xy = add(x, y);
      if (antisym.holds() && (xy.contains(x) && xy.contains(y)) != (x == y))
        antisym = AxiomReport::fail("antisym", {x, y}, "x,y in x+y disagrees with x = y");
      for (Element z = 0; z < n; ++z) {
        const bool is_join = z == l.join(x, y);
        const bool characterized =
            add(z, z).contains(x) && add(z, z).contains(y) && add(x, y).contains(z);
        if (sup.holds() && is_join != characterized)
          sup = AxiomReport::fail("sup", {x, y, z}, "join characterization fails");
        const bool is_meet = z == l.meet(x, y);
        const bool dual_characterized =
            mul(z, z).contains(x) && mul(z, z).contains(y) && mul(x, y).contains(z);
        if (inf.holds() && is_meet != dual_characterized)
          inf = AxiomReport::fail("inf", {x, y, z}, "meet characterization fails");
      }
    }
  reports.push_back(antisym);

  AxiomReport trans = AxiomReport::pass("trans");
  AxiomReport order = AxiomReport::pass("induced-order");
  for (Element x = 0; x < n; ++x) {
    const ElementSet xx = add(x, x);
    if (trans.holds() && add.apply(xx, xx) != xx)
      trans = AxiomReport::fail("trans", {x}, "(x+x)+(x+x) != x+x");
    if (order.holds() && xx != l.down_set(x))
      order = AxiomReport::fail("induced-order", {x}, "x+x is not the down-set of x");
  }
  reports.push_back(trans);

  AxiomReport leqsup = AxiomReport::pass("leqsup");
  AxiomReport geqinf = AxiomReport::pass("geqinf");
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) {
      for (Element z : add(x, y))
        if (leqsup.holds() && !l.leq(z, l.join(x, y)))
          leqsup = AxiomReport::fail("leqsup", {x, y, z}, "z in x+y but not z <= x v y");
      for (Element z : mul(x, y))
        if (geqinf.holds() && !l.leq(l.meet(x, y), z))
          geqinf = AxiomReport::fail("geqinf", {x, y, z}, "z in x.y but not z >= x ^ y");
    }
  reports.push_back(leqsup);
  reports.push_back(geqinf);
  reports.push_back(sup);
  reports.push_back(inf);

  AxiomReport cl = AxiomReport::pass("CL");
  for (Element x = 0; x < n && cl.holds(); ++x)
    for (Element y = 0; y < n && cl.holds(); ++y)
      for (Element z = 0; z < n; ++z) {
        const Element all = l.join(l.join(x, y), z);
        bool inside = true;
        for (Element t : add.apply(ElementSet::single(x), add(y, z))) {
          inside = l.join(t, l.join(x, y)) == all && l.join(t, l.join(x, z)) == all &&
                   l.join(t, l.join(y, z)) == all;
          if (!inside) break;
        }
        if (!inside) {
          cl = AxiomReport::fail("CL", {x, y, z}, "x+(y+z) escapes the join condition");
          break;
        }
      }
  reports.push_back(cl);

  AxiomReport lemlm3 = AxiomReport::pass("lemlm3");
  for (Element x = 0; x < n && lemlm3.holds(); ++x)
    for (Element y = 0; y < n; ++y) {
      const ElementSet xy = add(x, y);
      const ElementSet both =
          add.apply(ElementSet::single(x), xy) & add.apply(xy, ElementSet::single(y));
      if (!both.is_subset_of(xy)) {
        lemlm3 = AxiomReport::fail("lemlm3", {x, y}, "(x+(x+y)) & ((x+y)+y) not within x+y");
        break;
      }
    }
  reports.push_back(lemlm3);
  reports.push_back(order);

  const Element top = extremum_by_characterization(additive_nakano(l));
  reports.push_back(top == l.top()
                        ? AxiomReport::pass("top-characterization")
                        : AxiomReport::fail("top-characterization", {top}, "extremum is not 1"));
  const Element bottom = extremum_by_characterization(multiplicative_nakano(l));
  reports.push_back(bottom == l.bottom() ? AxiomReport::pass("bottom-characterization")
                                         : AxiomReport::fail("bottom-characterization",
                                                             {bottom}, "extremum is not 0"));
  return reports;
}

}  // namespace mosaic
