#include <doctest.h>

#include <numeric>
#include <random>

#include "mosaic/catalog.hpp"
#include "mosaic/error.hpp"
#include "oracle/enumeration.hpp"
#include "oracle/order.hpp"
#include "support.hpp"

using namespace mosaic;

namespace {

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::ParseError;
}

Lattice relabel(const Lattice& l, const std::vector<Element>& perm) {
  // element x of l becomes perm[x]
  std::vector<std::string> names(l.size());
  std::vector<ElementSet> up(l.size());
  for (Element x = 0; x < l.size(); ++x) {
    names[perm[x]] = l.name(x);
    for (Element y : l.up_set(x)) up[perm[x]].insert(perm[y]);
  }
  return Lattice::from_order(std::move(names), std::move(up));
}

}  // namespace

TEST_CASE("named entries") {
  const auto p = named("pentagon");
  CHECK(p.lattice.size() == 5);
  CHECK_FALSE(p.ortho.has_value());
  CHECK(p.expected == LatticeFlags{false, false, false});

  const auto h = named("hexagon");
  CHECK(h.lattice.names() == std::vector<std::string>{"0", "a", "b", "a'", "b'", "1"});
  CHECK(h.expected == LatticeFlags{false, true, false});

  CHECK(named("chain_1").lattice.size() == 1);
  CHECK(*named("chain_1").ortho == Involution::identity(1));
  CHECK(named("chain_2").lattice.names() == std::vector<std::string>{"0", "1"});
  CHECK_FALSE(named("chain_5").ortho.has_value());
  CHECK(named("boolean_3").lattice.size() == 8);
  CHECK(named("boolean_2").lattice.names() == std::vector<std::string>{"0", "a", "b", "1"});
  CHECK(named("boolean_0").lattice.size() == 1);
  CHECK(named("MO_2").lattice.names() == std::vector<std::string>{"0", "a", "a'", "b", "b'", "1"});
  CHECK(named("diamond_M3").expected == LatticeFlags{true, false, false});
}

TEST_CASE("catalog errors") {
  CHECK(code_of([] { named("heptagon"); }) == ErrorCode::UnknownName);
  CHECK(code_of([] { named("chain_"); }) == ErrorCode::UnknownName);
  CHECK(code_of([] { named("chain_x"); }) == ErrorCode::UnknownName);
  CHECK(code_of([] { named("chain_0"); }) == ErrorCode::SizeTooLarge);
  CHECK(code_of([] { named("chain_65"); }) == ErrorCode::SizeTooLarge);
  CHECK(code_of([] { named("boolean_7"); }) == ErrorCode::SizeTooLarge);
  CHECK(code_of([] { named("MO_0"); }) == ErrorCode::SizeTooLarge);
  CHECK(code_of([] { named("MO_32"); }) == ErrorCode::SizeTooLarge);
  CHECK(code_of([] { enumerate_lattices(9); }) == ErrorCode::SizeTooLarge);
  CHECK(code_of([] { enumerate_lattices(0); }) == ErrorCode::SizeTooLarge);
  CHECK(code_of([] { enumerate_ortholattices(9); }) == ErrorCode::SizeTooLarge);
}

TEST_CASE("expected flags recompute") {
  for (const auto& name : standard_names()) {
    INFO(name);
    const auto e = named(name);
    CHECK(classify(e.lattice, e.ortho) == e.expected);
    CHECK(classify(e.lattice) == e.expected);
  }
  for (const auto& name : {"chain_8", "boolean_4", "MO_5"}) {
    const auto e = named(name);
    CHECK(classify(e.lattice, e.ortho) == e.expected);
  }
}

TEST_CASE("enumeration matches the brute-force oracle") {
  // counts produced by the oracle and frozen here
  const std::vector<std::size_t> frozen{1, 1, 1, 2, 5, 15, 53, 222};
  for (std::size_t n = 1; n <= 8; ++n) {
    const auto lattices = enumerate_lattices(n);
    const auto classes = oracle::lattice_classes(static_cast<int>(n));
    CHECK(lattices.size() == classes.size());
    CHECK(lattices.size() == frozen[n - 1]);
    std::set<std::vector<bool>> seen;
    for (const auto& l : lattices) {
      CHECK(l.size() == n);
      seen.insert(oracle::canonical_bits(oracle::leq_matrix(l)));
    }
    CHECK(seen == classes);
  }
}

TEST_CASE("enumeration output is canonical and sorted") {
  for (std::size_t n = 1; n <= 7; ++n) {
    const auto lattices = enumerate_lattices(n);
    for (std::size_t i = 0; i < lattices.size(); ++i) {
      CHECK(canonical_lattice(lattices[i]) == lattices[i]);
      if (i > 0) CHECK(canonical_key(lattices[i - 1]) < canonical_key(lattices[i]));
    }
  }
}

TEST_CASE("canonical keys ignore labeling") {
  std::mt19937 rng(7);
  for (const Lattice& l : support::corpus(6)) {
    std::vector<Element> perm(l.size());
    std::iota(perm.begin(), perm.end(), 0);
    for (int trial = 0; trial < 5; ++trial) {
      std::shuffle(perm.begin(), perm.end(), rng);
      CHECK(canonical_key(relabel(l, perm)) == canonical_key(l));
    }
  }
  CHECK(canonical_key(named("pentagon").lattice) != canonical_key(named("diamond_M3").lattice));
}

TEST_CASE("ortholattice enumeration") {
  const std::vector<std::size_t> frozen{1, 1, 0, 1, 0, 2, 0, 5};
  for (std::size_t n = 1; n <= 8; ++n) {
    const auto pairs = enumerate_ortholattices(n);
    CHECK(pairs.size() == frozen[n - 1]);
    // brute force: orbits of orthocomplementations under automorphisms
    std::size_t orbits = 0;
    for (const auto& l : enumerate_lattices(n)) {
      const auto all = oracle::orthocomplementations(oracle::leq_matrix(l));
      const auto autos = automorphisms(l);
      std::set<std::vector<int>> remaining(all.begin(), all.end());
      while (!remaining.empty()) {
        const auto pi = *remaining.begin();
        for (const auto& s : autos) {
          std::vector<int> conj(l.size());
          for (Element x = 0; x < l.size(); ++x) conj[s[x]] = static_cast<int>(s[pi[x]]);
          remaining.erase(conj);
        }
        ++orbits;
      }
    }
    CHECK(pairs.size() == orbits);
    for (const auto& p : pairs) CHECK(is_orthocomplementation(p.lattice, p.pi));
  }

  const auto two = enumerate_ortholattices(2);
  REQUIRE(two.size() == 1);
  CHECK(two[0].pi == Involution({1, 0}));

  const auto six = enumerate_ortholattices(6);
  const auto h = named("hexagon");
  bool has_hexagon = false;
  for (const auto& p : six)
    if (auto iso = find_isomorphism(h.lattice, p.lattice)) {
      bool commutes = true;
      for (Element x = 0; x < 6; ++x) commutes = commutes && (*iso)[(*h.ortho)(x)] == p.pi((*iso)[x]);
      has_hexagon = has_hexagon || commutes;
    }
  CHECK(has_hexagon);
}

TEST_CASE("classifier facts over the enumeration") {
  const Lattice& pentagon = pentagon_pattern();
  const Lattice& hexagon = hexagon_pattern();
  for (std::size_t n = 1; n <= 8; ++n) {
    for (const auto& l : enumerate_lattices(n))
      CHECK(classify(l).modular == !find_sublattice_copy(l, pentagon).has_value());
    for (const auto& p : enumerate_ortholattices(n))
      CHECK(is_orthomodular(p.lattice, p.pi).holds() == !find_sublattice_copy(p.lattice, hexagon).has_value());
  }
}

TEST_CASE("modular and distributive counts") {
  // identity checks over the oracle classes; values frozen from its output
  const std::vector<std::size_t> modular{1, 1, 1, 2, 4, 8, 16, 34};
  const std::vector<std::size_t> distributive{1, 1, 1, 2, 3, 5, 8, 15};
  for (std::size_t n = 1; n <= 8; ++n) {
    std::size_t m = 0, d = 0;
    for (const auto& bits : oracle::lattice_classes(static_cast<int>(n))) {
      const auto matrix = oracle::from_bits(bits);
      m += oracle::is_modular(matrix);
      d += oracle::is_distributive(matrix);
    }
    CHECK(m == modular[n - 1]);
    CHECK(d == distributive[n - 1]);
  }
}
