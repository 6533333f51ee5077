#include "mosaic/catalog.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <set>

#include "mosaic/error.hpp"

namespace mosaic {

namespace {

using Covers = std::vector<std::pair<Element, Element>>;

std::optional<std::size_t> parse_suffix(std::string_view name, std::string_view prefix) {
  if (!name.starts_with(prefix)) return std::nullopt;
  const std::string_view digits = name.substr(prefix.size());
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (digits.empty() || ec != std::errc{} || ptr != digits.data() + digits.size())
    return std::nullopt;
  return value;
}

Lattice chain(std::size_t n) {
  std::vector<std::string> names;
  Covers covers;
  for (Element i = 0; i < n; ++i) {
    names.push_back(std::to_string(i));
    if (i > 0) covers.emplace_back(i - 1, i);
  }
  if (n == 2) names = {"0", "1"};
  return build_from_covers(std::move(names), covers);
}

std::string subset_label(std::uint64_t bits, std::size_t atoms) {
  if (bits == 0) return "0";
  if (bits == (std::uint64_t{1} << atoms) - 1) return "1";
  std::string label;
  for (std::size_t i = 0; i < atoms; ++i)
    if ((bits >> i) & 1U) label.push_back(static_cast<char>('a' + i));
  return label;
}

CatalogEntry boolean(std::size_t atoms) {
  const std::size_t n = std::size_t{1} << atoms;
  std::vector<std::string> names;
  Covers covers;
  std::vector<Element> complement(n);
  for (Element s = 0; s < n; ++s) {
    names.push_back(subset_label(s, atoms));
    complement[s] = (n - 1) ^ s;
    for (std::size_t i = 0; i < atoms; ++i)
      if (!((s >> i) & 1U)) covers.emplace_back(s, s | (Element{1} << i));
  }
  return {"boolean_" + std::to_string(atoms), build_from_covers(std::move(names), covers),
          Involution(std::move(complement)), {true, true, true}};
}

std::string atom_label(std::size_t i) {
  return i < 26 ? std::string(1, static_cast<char>('a' + i)) : "p" + std::to_string(i);
}

CatalogEntry mo(std::size_t pairs) {
  const std::size_t n = 2 * pairs + 2;
  std::vector<std::string> names{"0"};
  Covers covers;
  std::vector<Element> pi(n);
  pi[0] = n - 1;
  pi[n - 1] = 0;
  for (std::size_t i = 0; i < pairs; ++i) {
    const Element atom = 1 + 2 * i;
    names.push_back(atom_label(i));
    names.push_back(atom_label(i) + "'");
    pi[atom] = atom + 1;
    pi[atom + 1] = atom;
  }
  names.push_back("1");
  for (Element atom = 1; atom + 1 < n; ++atom) {
    covers.emplace_back(0, atom);
    covers.emplace_back(atom, n - 1);
  }
  return {"MO_" + std::to_string(pairs), build_from_covers(std::move(names), covers),
          Involution(std::move(pi)), {true, true, true}};
}

}  // namespace

CatalogEntry named(std::string_view name) {
  if (name == "pentagon") return {"pentagon", pentagon_pattern(), std::nullopt, {false, false, false}};
  if (name == "hexagon") {
    const Lattice& h = hexagon_pattern();
    // 0 <-> 1, a <-> a', b <-> b'
    return {"hexagon", h, Involution({5, 3, 4, 1, 2, 0}), {false, true, false}};
  }
  if (name == "diamond_M3") {
    return {"diamond_M3",
            build_from_covers({"0", "a", "b", "c", "1"},
                              Covers{{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}}),
            std::nullopt,
            {true, false, false}};
  }
  if (auto n = parse_suffix(name, "chain_")) {
    if (*n < 1 || *n > kMaxCarrier) throw Error(ErrorCode::SizeTooLarge, std::string(name));
    std::optional<Involution> pi;
    if (*n == 1) pi = Involution::identity(1);
    if (*n == 2) pi = Involution({1, 0});
    const bool ortho = *n <= 2;
    return {std::string(name), chain(*n), pi, {true, ortho, ortho}};
  }
  if (auto atoms = parse_suffix(name, "boolean_")) {
    if (*atoms > 6) throw Error(ErrorCode::SizeTooLarge, std::string(name));
    return boolean(*atoms);
  }
  if (auto pairs = parse_suffix(name, "MO_")) {
    if (*pairs < 1 || 2 * *pairs + 2 > kMaxCarrier)
      throw Error(ErrorCode::SizeTooLarge, std::string(name));
    return mo(*pairs);
  }
  throw Error(ErrorCode::UnknownName, std::string(name));
}

std::vector<std::string> standard_names() {
  return {"chain_1",   "chain_2",   "chain_3",   "chain_4",    "boolean_1", "boolean_2",
          "boolean_3", "pentagon",  "hexagon",   "diamond_M3", "MO_2",      "MO_3"};
}

LatticeFlags classify(const Lattice& l, const std::optional<Involution>& ortho) {
  LatticeFlags flags;
  flags.modular = is_modular(l).holds();
  std::vector<Involution> candidates;
  if (ortho) {
    if (is_orthocomplementation(l, *ortho)) candidates.push_back(*ortho);
  } else {
    candidates = orthocomplementations(l);
  }
  flags.ortholattice = !candidates.empty();
  for (const auto& pi : candidates)
    if (is_orthomodular(l, pi).holds()) flags.orthomodular = true;
  return flags;
}

// ---------------------------------------------------------------------------
// Canonical forms

namespace {

std::vector<std::size_t> heights(const Lattice& l) {
  std::vector<Element> order(l.size());
  for (Element x = 0; x < l.size(); ++x) order[x] = x;
  std::sort(order.begin(), order.end(), [&](Element a, Element b) {
    return l.down_set(a).size() < l.down_set(b).size();
  });
  std::vector<std::size_t> h(l.size(), 0);
  for (Element x : order)
    for (Element y : l.down_set(x))
      if (y != x) h[x] = std::max(h[x], h[y] + 1);
  return h;
}

// Calls visit(perm) for every new->old relabeling that lists elements by
// increasing height, permuting freely within each height class.
template <class Visit>
void for_each_graded_relabeling(const Lattice& l, Visit&& visit) {
  const auto h = heights(l);
  std::map<std::size_t, std::vector<Element>> levels;
  for (Element x = 0; x < l.size(); ++x) levels[h[x]].push_back(x);
  std::vector<std::vector<Element>> groups;
  for (auto& [height, members] : levels) groups.push_back(std::move(members));

  std::vector<Element> perm;
  auto rec = [&](auto&& self, std::size_t g) -> void {
    if (g == groups.size()) {
      visit(static_cast<const std::vector<Element>&>(perm));
      return;
    }
    auto& group = groups[g];
    std::sort(group.begin(), group.end());
    do {
      perm.insert(perm.end(), group.begin(), group.end());
      self(self, g + 1);
      perm.resize(perm.size() - group.size());
    } while (std::next_permutation(group.begin(), group.end()));
  };
  rec(rec, 0);
}

std::vector<std::uint64_t> relabeled_rows(const Lattice& l, const std::vector<Element>& perm) {
  std::vector<Element> position(l.size());
  for (Element i = 0; i < perm.size(); ++i) position[perm[i]] = i;
  std::vector<std::uint64_t> rows(l.size());
  for (Element i = 0; i < perm.size(); ++i) {
    ElementSet row;
    for (Element y : l.up_set(perm[i])) row.insert(position[y]);
    rows[i] = row.bits();
  }
  return rows;
}

std::vector<Element> canonical_relabeling(const Lattice& l) {
  std::vector<Element> best_perm;
  std::vector<std::uint64_t> best;
  for_each_graded_relabeling(l, [&](const std::vector<Element>& perm) {
    auto rows = relabeled_rows(l, perm);
    if (best_perm.empty() || rows < best) {
      best = std::move(rows);
      best_perm = perm;
    }
  });
  return best_perm;
}

}  // namespace

std::vector<std::uint64_t> canonical_key(const Lattice& l) {
  return relabeled_rows(l, canonical_relabeling(l));
}

Lattice canonical_lattice(const Lattice& l) {
  const auto rows = canonical_key(l);
  const std::size_t n = l.size();
  std::vector<std::string> names(n);
  std::vector<ElementSet> up(n);
  for (Element i = 0; i < n; ++i) {
    up[i] = ElementSet::from_bits(rows[i]);
    names[i] = i == 0 ? "0" : i + 1 == n ? "1" : "x" + std::to_string(i);
  }
  return Lattice::from_order(std::move(names), std::move(up));
}

// ---------------------------------------------------------------------------
// Enumeration

std::vector<Lattice> enumerate_lattices(std::size_t n) {
  if (n < 1 || n > 8) throw Error(ErrorCode::SizeTooLarge, "enumeration supports 1..8 elements");
  if (n == 1) return {canonical_lattice(chain(1))};

  // Posets on the n-2 middle elements, grown one element at a time: each new
  // element picks a down-closed set of earlier elements as its strict
  // down-set. Bottom and top are then adjoined.
  const std::size_t middle = n - 2;
  std::set<std::vector<std::uint64_t>> seen;
  std::vector<Lattice> out;
  std::vector<ElementSet> below(middle);  // strict down-sets among middle elements

  auto emit = [&]() {
    std::vector<ElementSet> up(n);
    up[0] = ElementSet::full(n);
    up[n - 1] = ElementSet{n - 1};
    for (Element i = 0; i < middle; ++i) up[i + 1] = ElementSet{i + 1, n - 1};
    for (Element i = 0; i < middle; ++i)
      for (Element j : below[i]) up[j + 1].insert(i + 1);
    std::vector<std::string> names(n);
    for (Element i = 0; i < n; ++i) names[i] = std::to_string(i);
    auto lattice = Lattice::try_from_order(std::move(names), std::move(up));
    if (!lattice) return;
    auto key = canonical_key(*lattice);
    if (seen.insert(key).second) out.push_back(canonical_lattice(*lattice));
  };

  auto rec = [&](auto&& self, Element k) -> void {
    if (k == middle) {
      emit();
      return;
    }
    const std::uint64_t limit = std::uint64_t{1} << k;
    for (std::uint64_t bits = 0; bits < limit; ++bits) {
      const ElementSet down = ElementSet::from_bits(bits);
      bool closed = true;
      for (Element d : down) closed = closed && below[d].is_subset_of(down);
      if (!closed) continue;
      below[k] = down;
      self(self, k + 1);
    }
  };
  rec(rec, 0);

  std::sort(out.begin(), out.end(), [](const Lattice& a, const Lattice& b) {
    return canonical_key(a) < canonical_key(b);
  });
  return out;
}

std::vector<OrthoPair> enumerate_ortholattices(std::size_t n) {
  std::vector<OrthoPair> out;
  for (const Lattice& l : enumerate_lattices(n)) {
    const auto pis = orthocomplementations(l);
    if (pis.empty()) continue;
    const auto autos = automorphisms(l);
    std::set<std::vector<Element>> covered;
    for (const auto& pi : pis) {
      if (covered.count(pi.map())) continue;
      for (const auto& sigma : autos) {
        // σ∘π∘σ⁻¹
        std::vector<Element> conj(l.size());
        for (Element x = 0; x < l.size(); ++x) conj[sigma[x]] = sigma[pi(x)];
        covered.insert(conj);
      }
      out.push_back(OrthoPair{l, pi});
    }
  }
  return out;
}

}  // namespace mosaic
