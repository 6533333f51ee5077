#include <doctest.h>

#include <random>

#include "mosaic/catalog.hpp"
#include "mosaic/error.hpp"
#include "mosaic/hyperstructure.hpp"
#include "mosaic/nakano.hpp"
#include "oracle/hyper.hpp"
#include "support.hpp"

using namespace mosaic;
using support::at;
using support::set_of;

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

// Z/3 as a classical group, written as a multioperation with singleton cells.
Multioperation cyclic3() {
  Multioperation op(3);
  for (Element x = 0; x < 3; ++x)
    for (Element y = 0; y < 3; ++y) op.set(x, y, ElementSet::single((x + y) % 3));
  return op;
}

}  // namespace

TEST_CASE("multimap composition") {
  // f: 2 -> 3, g: 3 -> 2; (g . f)(x) = union of g over f(x)
  Multimap f(2, 3), g(3, 2);
  f.set(0, ElementSet{0, 2});
  f.set(1, ElementSet{});
  g.set(0, ElementSet{1});
  g.set(1, ElementSet{0, 1});
  g.set(2, ElementSet{0});
  const Multimap h = compose_relations(f, g);
  CHECK(h.domain_size() == 2);
  CHECK(h.codomain_size() == 2);
  CHECK(h(0) == ElementSet{0, 1});
  CHECK(h(1).empty());
  CHECK(compose_relations(Multimap::identity(2), f) == f);
  CHECK(code_of([&] { compose_relations(f, f); }) == ErrorCode::SizeMismatch);
}

TEST_CASE("set-level application") {
  const Multioperation op = cyclic3();
  CHECK(op.apply(ElementSet{1, 2}, ElementSet{1}) == ElementSet{0, 2});
  CHECK(op.apply(ElementSet{}, ElementSet{1}).empty());
  CHECK(op.dual() == op);
}

TEST_CASE("a classical group is a mosaic and a polygroup") {
  const auto check = verify_mosaic(cyclic3());
  REQUIRE(check.ok());
  CHECK(check.mosaic->neutral == 0);
  CHECK(check.mosaic->rho == Involution({0, 2, 1}));
  CHECK(is_polygroup(cyclic3()));
  CHECK(is_reproductive(cyclic3()).holds());
}

TEST_CASE("mosaic verification on small broken tables") {
  SUBCASE("partial") {
    Multioperation op(2);
    op.set(0, 0, ElementSet{0});
    op.set(0, 1, ElementSet{1});
    op.set(1, 0, ElementSet{1});
    const auto check = verify_mosaic(op);
    CHECK_FALSE(check.ok());
    CHECK(find_report(check.reports, "totality")->witness->elements == std::vector<Element>{1, 1});
  }
  SUBCASE("no neutral") {
    Multioperation op(2);
    for (Element x = 0; x < 2; ++x)
      for (Element y = 0; y < 2; ++y) op.set(x, y, ElementSet{0, 1});
    const auto check = verify_mosaic(op);
    CHECK_FALSE(find_report(check.reports, "neutral")->holds());
  }
  SUBCASE("several inverses") {
    Multioperation op(3);
    for (Element x = 0; x < 3; ++x) {
      op.set(0, x, ElementSet::single(x));
      op.set(x, 0, ElementSet::single(x));
    }
    for (Element x = 1; x < 3; ++x)
      for (Element y = 1; y < 3; ++y) op.set(x, y, ElementSet{0, 1, 2});
    const auto check = verify_mosaic(op);
    CHECK_FALSE(find_report(check.reports, "invertibility")->holds());
  }
}

TEST_CASE("mosaic verification agrees with the oracle on perturbed tables") {
  std::mt19937 rng(20240611);
  int mosaics = 0;
  for (const Lattice& l : support::corpus(5)) {
    for (bool additive : {true, false}) {
      const Multioperation base = nakano_table(l, additive ? Flavor::Additive : Flavor::Multiplicative);
      for (int trial = 0; trial < 30; ++trial) {
        Multioperation op = base;
        const std::size_t n = l.size();
        std::uniform_int_distribution<Element> pick(0, n - 1);
        std::uniform_int_distribution<std::uint64_t> bits(0, (std::uint64_t{1} << n) - 1);
        const int edits = trial % 3;  // trial 0, 3, ... keep the table intact
        for (int e = 0; e < edits; ++e) {
          const Element x = pick(rng), y = pick(rng);
          const ElementSet cell = ElementSet::from_bits(bits(rng));
          op.set(x, y, cell);
          if (trial % 2 == 0) op.set(y, x, cell);
        }
        const bool expected = oracle::is_mosaic(oracle::from_library(op));
        CHECK(verify_mosaic(op).ok() == expected);
        mosaics += expected;
        CHECK(is_associative(op).holds() == oracle::associative(oracle::from_library(op)));
      }
    }
  }
  CHECK(mosaics > 0);
}

TEST_CASE("associativity witness on the pentagon") {
  const Lattice p = named("pentagon").lattice;
  const Multioperation op = nakano_table(p, Flavor::Additive);
  const auto report = is_associative(op);
  REQUIRE_FALSE(report.holds());
  CHECK(report.witness->elements == support::elements_of(p, {"a", "b", "c"}));
  const Element a = at(p, "a"), b = at(p, "b"), c = at(p, "c");
  CHECK(op.apply(ElementSet::single(a), op(b, c)) == set_of(p, {"c", "1"}));
  CHECK(op.apply(op(a, b), ElementSet::single(c)) == set_of(p, {"1"}));
}

TEST_CASE("morphisms between Nakano mosaics") {
  const Mosaic p = additive_nakano(named("pentagon").lattice).mosaic;
  const Mosaic two = additive_nakano(named("chain_2").lattice).mosaic;
  std::vector<Element> identity(p.size());
  for (Element x = 0; x < p.size(); ++x) identity[x] = x;
  CHECK(check_morphism(identity, p, p, MorphismKind::Embedding).holds());

  // constant map to the neutral: e+e = {e}, so even strong
  const std::vector<Element> constant(p.size(), 0);
  CHECK(check_morphism(constant, p, p, MorphismKind::Strong).holds());
  CHECK_FALSE(check_morphism(constant, p, p, MorphismKind::Embedding).holds());

  // collapse everything above 0: f(a+b) = {1} but 1+1 = {0,1}
  const std::vector<Element> collapse{0, 1, 1, 1, 1};
  CHECK(check_morphism(collapse, p, two, MorphismKind::Morphism).holds());
  CHECK_FALSE(check_morphism(collapse, p, two, MorphismKind::Strong).holds());

  // not unitary
  const std::vector<Element> to_top(p.size(), 1);
  const auto r = check_morphism(to_top, p, two, MorphismKind::Morphism);
  CHECK_FALSE(r.holds());
  CHECK(r.witness->reason.find("unitary") != std::string::npos);
  CHECK(code_of([&] { check_morphism({0, 1}, p, two, MorphismKind::Morphism); }) ==
        ErrorCode::SizeMismatch);
}

TEST_CASE("L-mosaic axioms and the induced order") {
  for (const Lattice& l : support::corpus(6)) {
    for (Flavor flavor : {Flavor::Additive, Flavor::Multiplicative}) {
      const Mosaic m = nakano(l, flavor).mosaic;
      for (const auto& r : verify_lmosaic(m)) CHECK(r.holds());
      const auto up = induced_order(m);
      for (Element x = 0; x < l.size(); ++x)
        for (Element y = 0; y < l.size(); ++y)
          CHECK(up[x].contains(y) == (flavor == Flavor::Additive ? l.leq(x, y) : l.leq(y, x)));
    }
  }
  const Mosaic g = *verify_mosaic(cyclic3()).mosaic;
  CHECK_FALSE(is_lmosaic(g));
  CHECK(code_of([&] { induced_order(g); }) == ErrorCode::NotAnLMosaic);
}

TEST_CASE("submosaics and strong closure") {
  const Lattice p = named("pentagon").lattice;
  const Mosaic m = additive_nakano(p).mosaic;
  CHECK(is_submosaic(m, set_of(p, {"0", "a"})));
  CHECK_FALSE(is_strong_submosaic(m, set_of(p, {"0", "a"})));
  CHECK(strong_closure(m, set_of(p, {"0", "a"})) == set_of(p, {"0", "a", "b"}));
  CHECK(is_strong_submosaic(m, set_of(p, {"0", "a", "b"})));
  CHECK(strong_closure(m, set_of(p, {"0"})) == set_of(p, {"0"}));
  CHECK(strong_closure(m, p.carrier()) == p.carrier());
  // {a} misses the neutral element
  CHECK_FALSE(is_submosaic(m, set_of(p, {"a"})));
  CHECK(code_of([&] { strong_closure(m, set_of(p, {"a"})); }) == ErrorCode::NotASubmosaic);
  const Mosaic g = *verify_mosaic(cyclic3()).mosaic;
  CHECK(code_of([&] { strong_closure(g, ElementSet{0}); }) == ErrorCode::NotAnLMosaic);

  const Restriction r = restrict_to(m.op, set_of(p, {"0", "b", "a"}));
  CHECK(r.members == support::elements_of(p, {"0", "a", "b"}));
  CHECK(r.op(1, 1) == ElementSet{0, 1, 2});
}

TEST_CASE("pi-duals") {
  const auto h = named("hexagon");
  const Mosaic join = additive_nakano(h.lattice).mosaic;
  const Mosaic meet = multiplicative_nakano(h.lattice).mosaic;
  const auto dual = dualize(join, *h.ortho);
  REQUIRE(dual.has_value());
  CHECK(dual->op == meet.op);
  CHECK(dual->neutral == h.lattice.top());
  const auto back = dualize(*dual, *h.ortho);
  REQUIRE(back.has_value());
  CHECK(back->op == join.op);

  // the identity involution dualizes any mosaic to itself
  const Mosaic p = additive_nakano(named("pentagon").lattice).mosaic;
  const auto same = dualize(p, Involution::identity(p.size()));
  REQUIRE(same.has_value());
  CHECK(same->op == p.op);

  // without the outer pi, pi(0) is not neutral
  CHECK_FALSE(dualize(join, *h.ortho, DualFormula::Literal).has_value());
  const Multioperation literal = transport(join.op, *h.ortho, DualFormula::Literal);
  const Element top = h.lattice.top(), a = at(h.lattice, "a");
  CHECK(literal(top, a) == ElementSet::single((*h.ortho)(a)));
}

TEST_CASE("pentagon with every involution") {
  // P has no orthocomplementation; record which involutions still dualize.
  const Lattice p = named("pentagon").lattice;
  const Mosaic m = additive_nakano(p).mosaic;
  std::vector<Element> perm{0, 1, 2, 3, 4};
  int involutions = 0, dualizable = 0;
  do {
    bool inv = true;
    for (Element x = 0; x < 5; ++x) inv = inv && perm[perm[x]] == x;
    if (!inv) continue;
    ++involutions;
    dualizable += dualize(m, Involution(perm)).has_value();
  } while (std::next_permutation(perm.begin(), perm.end()));
  CHECK(involutions == 26);
  // π-transport always yields an isomorphic mosaic
  CHECK(dualizable == 26);
}

TEST_CASE("mosaic isomorphism") {
  const Lattice p = named("pentagon").lattice;
  const auto add = nakano_table(p, Flavor::Additive);
  const auto mul = nakano_table(p, Flavor::Multiplicative);
  // P is self-dual, so the two Nakano mosaics of P are isomorphic as
  // multioperations via the order-reversing bijection
  CHECK(find_mosaic_isomorphism(add, mul).has_value());
  CHECK_FALSE(find_mosaic_isomorphism(add, nakano_table(named("diamond_M3").lattice, Flavor::Additive)));
  CHECK_FALSE(find_mosaic_isomorphism(add, cyclic3()));
}
