#include "mosaic/lattice.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

#include "mosaic/error.hpp"
#include "search.hpp"

namespace mosaic {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::UnknownElement: return "UnknownElement";
    case ErrorCode::DuplicateLabel: return "DuplicateLabel";
    case ErrorCode::SizeMismatch: return "SizeMismatch";
    case ErrorCode::CyclicCovers: return "CyclicCovers";
    case ErrorCode::NotBounded: return "NotBounded";
    case ErrorCode::NotALattice: return "NotALattice";
    case ErrorCode::NotAnInvolution: return "NotAnInvolution";
    case ErrorCode::NotAnOrthocomplementation: return "NotAnOrthocomplementation";
    case ErrorCode::NotASublattice: return "NotASublattice";
    case ErrorCode::NotAnLMosaic: return "NotAnLMosaic";
    case ErrorCode::NotASubmosaic: return "NotASubmosaic";
    case ErrorCode::MissingBound: return "MissingBound";
    case ErrorCode::NoUniqueExtremum: return "NoUniqueExtremum";
    case ErrorCode::ReconstructionFailure: return "ReconstructionFailure";
    case ErrorCode::PreconditionFailed: return "PreconditionFailed";
    case ErrorCode::UnknownName: return "UnknownName";
    case ErrorCode::SizeTooLarge: return "SizeTooLarge";
    case ErrorCode::MissingOrtho: return "MissingOrtho";
  }
  return "Unknown";
}

// ---------------------------------------------------------------------------
// Involution

Involution::Involution(std::vector<Element> map) : map_(std::move(map)) {
  for (Element x = 0; x < map_.size(); ++x) {
    if (map_[x] >= map_.size() || map_[map_[x]] != x)
      throw Error(ErrorCode::NotAnInvolution,
                  "map is not self-inverse at element " + std::to_string(x));
  }
}

Involution Involution::identity(std::size_t n) {
  std::vector<Element> map(n);
  for (Element x = 0; x < n; ++x) map[x] = x;
  return Involution(std::move(map));
}

ElementSet Involution::image(ElementSet s) const {
  ElementSet out;
  for (Element x : s) out.insert(map_[x]);
  return out;
}

// ---------------------------------------------------------------------------
// Lattice construction

std::optional<Lattice> Lattice::build(std::vector<std::string> names,
                                      std::vector<ElementSet> up_sets, bool raise) {
  auto fail = [raise](ErrorCode code, const std::string& msg) -> std::optional<Lattice> {
    if (raise) throw Error(code, msg);
    return std::nullopt;
  };
  const std::size_t n = names.size();
  if (n == 0) return fail(ErrorCode::NotBounded, "empty carrier has no bounds");
  if (n > kMaxCarrier)
    return fail(ErrorCode::SizeTooLarge, "carrier exceeds " + std::to_string(kMaxCarrier));
  if (up_sets.size() != n) return fail(ErrorCode::SizeMismatch, "order matrix size");
  {
    std::set<std::string_view> seen;
    for (const auto& name : names)
      if (!seen.insert(name).second) return fail(ErrorCode::DuplicateLabel, name);
  }

  const ElementSet all = ElementSet::full(n);
  for (Element x = 0; x < n; ++x) {
    if (!up_sets[x].contains(x) || !up_sets[x].is_subset_of(all))
      return fail(ErrorCode::NotALattice, "order is not reflexive at " + names[x]);
    for (Element y : up_sets[x]) {
      if (y != x && up_sets[y].contains(x))
        return fail(ErrorCode::CyclicCovers, names[x] + " and " + names[y] + " lie on a cycle");
      if (!up_sets[y].is_subset_of(up_sets[x]))
        return fail(ErrorCode::NotALattice, "order is not transitive through " + names[y]);
    }
  }

  Lattice l;
  l.names_ = std::move(names);
  l.up_ = std::move(up_sets);
  l.down_.assign(n, ElementSet{});
  for (Element x = 0; x < n; ++x)
    for (Element y : l.up_[x]) l.down_[y].insert(x);

  std::optional<Element> bottom, top;
  for (Element x = 0; x < n; ++x) {
    if (l.up_[x] == all) bottom = x;
    if (l.down_[x] == all) top = x;
  }
  if (!bottom) return fail(ErrorCode::NotBounded, "no bottom element");
  if (!top) return fail(ErrorCode::NotBounded, "no top element");
  l.bottom_ = *bottom;
  l.top_ = *top;

  l.join_.assign(n * n, 0);
  l.meet_.assign(n * n, 0);
  for (Element x = 0; x < n; ++x) {
    for (Element y = x; y < n; ++y) {
      const ElementSet upper = l.up_[x] & l.up_[y];
      const ElementSet lower = l.down_[x] & l.down_[y];
      std::optional<Element> lub, glb;
      for (Element u : upper)
        if (upper.is_subset_of(l.up_[u])) lub = u;
      for (Element d : lower)
        if (lower.is_subset_of(l.down_[d])) glb = d;
      if (!lub)
        return fail(ErrorCode::NotALattice,
                    l.names_[x] + " and " + l.names_[y] + " have no least upper bound");
      if (!glb)
        return fail(ErrorCode::NotALattice,
                    l.names_[x] + " and " + l.names_[y] + " have no greatest lower bound");
      l.join_[x * n + y] = l.join_[y * n + x] = *lub;
      l.meet_[x * n + y] = l.meet_[y * n + x] = *glb;
    }
  }
  return l;
}

Lattice Lattice::from_order(std::vector<std::string> names, std::vector<ElementSet> up_sets) {
  return *build(std::move(names), std::move(up_sets), true);
}

std::optional<Lattice> Lattice::try_from_order(std::vector<std::string> names,
                                               std::vector<ElementSet> up_sets) {
  return build(std::move(names), std::move(up_sets), false);
}

std::optional<Element> Lattice::index_of(std::string_view label) const {
  for (Element x = 0; x < names_.size(); ++x)
    if (names_[x] == label) return x;
  return std::nullopt;
}

std::vector<std::pair<Element, Element>> Lattice::covers() const {
  std::vector<std::pair<Element, Element>> out;
  for (Element x = 0; x < size(); ++x)
    for (Element y : up_[x])
      if (y != x && (up_[x] & down_[y]) == ElementSet{x, y}) out.emplace_back(x, y);
  return out;
}

Lattice Lattice::sublattice(ElementSet members) const {
  if (members.empty() || !members.is_subset_of(carrier()))
    throw Error(ErrorCode::NotASublattice, "subset is empty or outside the carrier");
  for (Element x : members)
    for (Element y : members)
      if (!members.contains(join(x, y)) || !members.contains(meet(x, y)))
        throw Error(ErrorCode::NotASublattice,
                    "not closed at " + name(x) + ", " + name(y));
  const std::vector<Element> order = members.to_vector();
  std::vector<std::string> names;
  std::vector<ElementSet> up(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    names.push_back(name(order[i]));
    for (std::size_t j = 0; j < order.size(); ++j)
      if (leq(order[i], order[j])) up[i].insert(j);
  }
  return from_order(std::move(names), std::move(up));
}

bool Lattice::same_structure(const Lattice& other) const {
  return up_ == other.up_ && join_ == other.join_ && meet_ == other.meet_ &&
         bottom_ == other.bottom_ && top_ == other.top_;
}

Lattice build_from_covers(std::vector<std::string> names,
                          const std::vector<std::pair<Element, Element>>& covers) {
  const std::size_t n = names.size();
  if (n > kMaxCarrier)
    throw Error(ErrorCode::SizeTooLarge, "carrier exceeds " + std::to_string(kMaxCarrier));
  {
    std::set<std::string_view> seen;
    for (const auto& name : names)
      if (!seen.insert(name).second) throw Error(ErrorCode::DuplicateLabel, name);
  }
  std::vector<ElementSet> up(n);
  for (Element x = 0; x < n; ++x) up[x].insert(x);
  for (auto [lo, hi] : covers) {
    if (lo >= n || hi >= n) throw Error(ErrorCode::UnknownElement, "cover index out of range");
    if (lo == hi) throw Error(ErrorCode::CyclicCovers, names[lo] + " covers itself");
    up[lo].insert(hi);
  }
  // Warshall closure over bitset rows.
  for (Element k = 0; k < n; ++k)
    for (Element x = 0; x < n; ++x)
      if (up[x].contains(k)) up[x] |= up[k];
  return Lattice::from_order(std::move(names), std::move(up));
}

Lattice build_from_covers(std::vector<std::string> names,
                          const std::vector<std::pair<std::string, std::string>>& covers) {
  std::map<std::string, Element, std::less<>> index;
  for (Element x = 0; x < names.size(); ++x)
    if (!index.emplace(names[x], x).second) throw Error(ErrorCode::DuplicateLabel, names[x]);
  auto lookup = [&](const std::string& label) {
    auto it = index.find(label);
    if (it == index.end()) throw Error(ErrorCode::UnknownElement, label);
    return it->second;
  };
  std::vector<std::pair<Element, Element>> indexed;
  for (const auto& [lo, hi] : covers) indexed.emplace_back(lookup(lo), lookup(hi));
  return build_from_covers(std::move(names), indexed);
}

// ---------------------------------------------------------------------------
// Complements

ElementSet complements(const Lattice& l, Element x) {
  ElementSet out;
  for (Element y = 0; y < l.size(); ++y)
    if (l.join(x, y) == l.top() && l.meet(x, y) == l.bottom()) out.insert(y);
  return out;
}

std::vector<Involution> complement_involutions(const Lattice& l) {
  const std::size_t n = l.size();
  const Element unset = n;
  std::vector<ElementSet> omega(n);
  for (Element x = 0; x < n; ++x) omega[x] = complements(l, x);

  std::vector<Involution> out;
  std::vector<Element> map(n, unset);
  auto rec = [&](auto&& self) -> void {
    auto free = std::find(map.begin(), map.end(), unset);
    if (free == map.end()) {
      out.emplace_back(map);
      return;
    }
    const Element x = static_cast<Element>(free - map.begin());
    for (Element y : omega[x]) {
      if (map[y] != unset) continue;
      map[x] = y;
      map[y] = x;
      self(self);
      map[x] = map[y] = unset;
    }
  };
  rec(rec);
  std::sort(out.begin(), out.end(),
            [](const Involution& a, const Involution& b) { return a.map() < b.map(); });
  return out;
}

std::vector<AxiomReport> check_orthocomplementation(const Lattice& l, const Involution& pi) {
  if (pi.size() != l.size())
    throw Error(ErrorCode::SizeMismatch, "involution and lattice sizes differ");
  const std::size_t n = l.size();
  std::vector<AxiomReport> reports;

  AxiomReport complement = AxiomReport::pass("complement");
  for (Element x = 0; x < n && complement.holds(); ++x)
    if (!complements(l, x).contains(pi(x)))
      complement = AxiomReport::fail("complement", {x}, "x and pi(x) are not complements");
  reports.push_back(complement);

  AxiomReport oc1 = AxiomReport::pass("OC1");
  AxiomReport oc2 = AxiomReport::pass("OC2");
  AxiomReport oc3 = AxiomReport::pass("OC3");
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      if (oc1.holds() && l.leq(x, y) != l.leq(pi(y), pi(x)))
        oc1 = AxiomReport::fail("OC1", {x, y}, "x<=y differs from pi(y)<=pi(x)");
      if (oc2.holds() && pi(l.join(x, y)) != l.meet(pi(x), pi(y)))
        oc2 = AxiomReport::fail("OC2", {x, y}, "pi(x v y) != pi(x) ^ pi(y)");
      if (oc3.holds() && pi(l.meet(x, y)) != l.join(pi(x), pi(y)))
        oc3 = AxiomReport::fail("OC3", {x, y}, "pi(x ^ y) != pi(x) v pi(y)");
    }
  }
  reports.push_back(oc1);
  reports.push_back(oc2);
  reports.push_back(oc3);
  return reports;
}

bool is_orthocomplementation(const Lattice& l, const Involution& pi) {
  return pi.size() == l.size() && all_hold(check_orthocomplementation(l, pi));
}

std::vector<Involution> orthocomplementations(const Lattice& l) {
  std::vector<Involution> out;
  for (auto& pi : complement_involutions(l)) {
    const auto reports = check_orthocomplementation(l, pi);
    if (!find_report(reports, "OC1")->holds()) continue;
    // De Morgan laws follow from OC1 for complement-selecting involutions.
    if (!all_hold(reports)) throw std::logic_error("order-reversing complement map breaks De Morgan");
    out.push_back(std::move(pi));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Identities

namespace {

void require_closed(const Lattice& l, ElementSet subset) {
  if (!subset.is_subset_of(l.carrier()))
    throw Error(ErrorCode::NotASublattice, "subset outside the carrier");
  for (Element x : subset)
    for (Element y : subset)
      if (!subset.contains(l.join(x, y)) || !subset.contains(l.meet(x, y)))
        throw Error(ErrorCode::NotASublattice, "not closed at " + l.name(x) + ", " + l.name(y));
}

AxiomReport modular_on(const Lattice& l, ElementSet subset) {
  for (Element x : subset)
    for (Element y : subset)
      for (Element z : subset) {
        const Element xz = l.join(x, z);
        if (l.join(x, l.meet(y, xz)) != l.meet(l.join(x, y), xz))
          return AxiomReport::fail("modular", {x, y, z}, "x v (y ^ (x v z)) != (x v y) ^ (x v z)");
      }
  return AxiomReport::pass("modular");
}

}  // namespace

AxiomReport is_modular(const Lattice& l) { return modular_on(l, l.carrier()); }

AxiomReport is_modular(const Lattice& l, ElementSet subset) {
  require_closed(l, subset);
  return modular_on(l, subset);
}

AxiomReport is_distributive(const Lattice& l, ElementSet subset) {
  require_closed(l, subset);
  for (Element x : subset)
    for (Element y : subset)
      for (Element z : subset)
        if (l.meet(x, l.join(y, z)) != l.join(l.meet(x, y), l.meet(x, z)))
          return AxiomReport::fail("distributive", {x, y, z},
                                   "x ^ (y v z) != (x ^ y) v (x ^ z)");
  return AxiomReport::pass("distributive");
}

AxiomReport is_distributive(const Lattice& l) { return is_distributive(l, l.carrier()); }

std::optional<std::vector<Element>> find_sublattice_copy(const Lattice& l, const Lattice& pattern) {
  if (pattern.size() > l.size()) return std::nullopt;
  std::optional<std::vector<Element>> found;
  const ElementSet any = l.carrier();
  detail::search_injections(
      pattern.size(), l.size(), [&](std::size_t) { return any; },
      [&](const std::vector<Element>& f, std::size_t i) {
        for (Element a = 0; a <= i; ++a) {
          for (Element b = 0; b <= i; ++b) {
            const Element j = pattern.join(a, b);
            const Element m = pattern.meet(a, b);
            const bool fresh = a == i || b == i;
            if (j <= i && (fresh || j == i) && l.join(f[a], f[b]) != f[j]) return false;
            if (m <= i && (fresh || m == i) && l.meet(f[a], f[b]) != f[m]) return false;
          }
        }
        return true;
      },
      [&](const std::vector<Element>& f) {
        found = f;
        return true;
      });
  return found;
}

ElementSet generated_sublattice(const Lattice& l, ElementSet seeds) {
  ElementSet current = seeds;
  for (;;) {
    ElementSet next = current;
    for (Element x : current)
      for (Element y : current) {
        next.insert(l.join(x, y));
        next.insert(l.meet(x, y));
      }
    if (next == current) return current;
    current = next;
  }
}

ElementSet generated_sublattice(const Lattice& l, ElementSet seeds, const Involution& pi) {
  ElementSet current = seeds;
  for (;;) {
    ElementSet next = generated_sublattice(l, current);
    next |= pi.image(next);
    if (next == current) return current;
    current = next;
  }
}

AxiomReport is_orthomodular(const Lattice& l, const Involution& pi) {
  if (!is_orthocomplementation(l, pi))
    throw Error(ErrorCode::NotAnOrthocomplementation, "pi is not an orthocomplementation");
  for (Element x = 0; x < l.size(); ++x)
    for (Element y : l.up_set(x))
      if (l.join(x, l.meet(pi(x), y)) != y)
        return AxiomReport::fail("orthomodular", {x, y}, "x <= y but x v (pi(x) ^ y) != y");
  return AxiomReport::pass("orthomodular");
}

std::vector<AxiomReport> check_om_equivalences(const Lattice& l, const Involution& pi) {
  std::vector<AxiomReport> reports;
  AxiomReport om1 = is_orthomodular(l, pi);
  om1.axiom = "OM1";
  reports.push_back(om1);

  AxiomReport om2 = AxiomReport::pass("OM2");
  for (Element x = 0; x < l.size() && om2.holds(); ++x)
    for (Element y : l.up_set(x))
      if (y != x && l.join(x, pi(y)) == l.top()) {
        om2 = AxiomReport::fail("OM2", {x, y}, "x <= y and x v pi(y) = 1 but x != y");
        break;
      }
  reports.push_back(om2);

  if (auto copy = find_sublattice_copy(l, hexagon_pattern()))
    reports.push_back(AxiomReport::fail("OM3", *copy, "hexagon sublattice"));
  else
    reports.push_back(AxiomReport::pass("OM3"));

  AxiomReport om4 = AxiomReport::pass("OM4");
  for (Element x = 0; x < l.size() && om4.holds(); ++x)
    for (Element y : l.up_set(x)) {
      const ElementSet generated = generated_sublattice(l, ElementSet{x, y}, pi);
      if (!is_distributive(l, generated).holds()) {
        om4 = AxiomReport::fail("OM4", {x, y}, "generated pi-closed sublattice not distributive");
        break;
      }
    }
  reports.push_back(om4);
  return reports;
}

// ---------------------------------------------------------------------------
// Duality and isomorphism

Lattice dual_lattice(const Lattice& l) {
  std::vector<ElementSet> up(l.size());
  for (Element x = 0; x < l.size(); ++x) up[x] = l.down_set(x);
  return Lattice::from_order(l.names(), std::move(up));
}

namespace {

void search_isomorphisms(const Lattice& a, const Lattice& b,
                         const std::function<bool(const std::vector<Element>&)>& visit) {
  if (a.size() != b.size()) return;
  const std::size_t n = a.size();
  auto signature = [](const Lattice& l, Element x) {
    return std::pair{l.up_set(x).size(), l.down_set(x).size()};
  };
  std::vector<ElementSet> candidates(n);
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      if (signature(a, x) == signature(b, y)) candidates[x].insert(y);
  detail::search_injections(
      n, n, [&](std::size_t i) { return candidates[i]; },
      [&](const std::vector<Element>& f, std::size_t i) {
        for (Element k = 0; k < i; ++k)
          if (a.leq(i, k) != b.leq(f[i], f[k]) || a.leq(k, i) != b.leq(f[k], f[i])) return false;
        return true;
      },
      visit);
}

}  // namespace

std::optional<std::vector<Element>> find_isomorphism(const Lattice& a, const Lattice& b) {
  std::optional<std::vector<Element>> found;
  search_isomorphisms(a, b, [&](const std::vector<Element>& f) {
    found = f;
    return true;
  });
  return found;
}

std::vector<std::vector<Element>> automorphisms(const Lattice& l) {
  std::vector<std::vector<Element>> out;
  search_isomorphisms(l, l, [&](const std::vector<Element>& f) {
    out.push_back(f);
    return false;
  });
  return out;
}

const Lattice& hexagon_pattern() {
  static const Lattice hexagon = build_from_covers(
      {"0", "a", "b", "a'", "b'", "1"},
      std::vector<std::pair<std::string, std::string>>{
          {"0", "b"}, {"b", "a"}, {"a", "1"}, {"0", "a'"}, {"a'", "b'"}, {"b'", "1"}});
  return hexagon;
}

const Lattice& pentagon_pattern() {
  static const Lattice pentagon = build_from_covers(
      {"0", "a", "b", "c", "1"},
      std::vector<std::pair<std::string, std::string>>{
          {"0", "b"}, {"b", "a"}, {"a", "1"}, {"0", "c"}, {"c", "1"}});
  return pentagon;
}

}  // namespace mosaic
