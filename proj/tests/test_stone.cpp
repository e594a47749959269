#include <doctest.h>

#include <algorithm>

#include "germkit/error.hpp"
#include "germkit/partial_bijection.hpp"
#include "germkit/stone.hpp"
#include "oracles.hpp"

using namespace germkit;

namespace {

std::shared_ptr<const BooleanInverseMonoid> symmetric(std::size_t n) {
  return oracle::boolean(symmetric_inverse_monoid(PointSet(n)).monoid);
}

// Counts maps E -> {0,1} preserving 0, 1, products and joins, without using
// the atom construction.
std::size_t count_homomorphisms(const BooleanAlgebraView& b) {
  const auto& E = b.carrier();
  const std::size_t m = E.size();
  auto pos = [&](Element p) { return std::size_t(std::find(E.begin(), E.end(), p) - E.begin()); };
  std::size_t count = 0;
  for (std::size_t mask = 0; mask < (std::size_t(1) << m); ++mask) {
    auto val = [&](Element p) { return bool(mask >> pos(p) & 1); };
    bool ok = !val(b.bottom()) && val(b.top());
    for (std::size_t i = 0; i < m && ok; ++i)
      for (std::size_t j = 0; j < m && ok; ++j) {
        const bool vi = val(E[i]), vj = val(E[j]);
        ok = val(b.meet(E[i], E[j])) == (vi && vj) && val(b.join(E[i], E[j])) == (vi || vj);
      }
    count += ok;
  }
  return count;
}

} // namespace

TEST_CASE("idempotent algebra of I(n) is the power set of n points") {
  for (std::size_t n = 1; n <= 3; ++n) {
    const auto m = symmetric_inverse_monoid(PointSet(n));
    const BooleanAlgebraView b(oracle::boolean(m.monoid));
    CHECK(b.carrier().size() == (std::size_t(1) << n));
    for (Element p : b.carrier())
      CHECK(m.maps[p] == PartialBijection::identity_on(PointSet(n), m.maps[p].domain_mask()));
    CHECK(b.validate().passed());

    // join and complement as union and set complement of domains
    for (Element p : b.carrier()) {
      CHECK(m.maps[b.complement(p)].domain_mask() == ((1u << n) - 1 & ~m.maps[p].domain_mask()));
      for (Element q : b.carrier())
        CHECK(m.maps[b.join(p, q)].domain_mask() == (m.maps[p].domain_mask() | m.maps[q].domain_mask()));
    }
  }
}

TEST_CASE("atoms and characters") {
  SUBCASE("I(3) has the three point identities as atoms") {
    const auto m = symmetric_inverse_monoid(PointSet(3));
    const BooleanAlgebraView b(oracle::boolean(m.monoid));
    const auto as = atoms(b);
    REQUIRE(as.size() == 3);
    for (Element a : as)
      CHECK(m.maps[a].graph().size() == 1);
    const auto xs = characters(b);
    CHECK(xs.size() == 3);
    CHECK(count_homomorphisms(b) == 3);
    for (std::size_t i = 0; i < xs.size(); ++i) {
      CHECK(xs[i].index == i);
      CHECK(evaluate(b, xs[i], b.top()));
      CHECK_FALSE(evaluate(b, xs[i], b.bottom()));
      CHECK(evaluate(b, xs[i], xs[i].atom));
    }
  }
  SUBCASE("two-element monoid has one character") {
    const BooleanAlgebraView b(oracle::boolean(oracle::two_element_monoid()));
    CHECK(atoms(b) == std::vector<Element>{1});
    CHECK(characters(b).size() == 1);
    CHECK(count_homomorphisms(b) == 1);
  }
  SUBCASE("brute-force oracle agrees on I(4)") {
    const BooleanAlgebraView b(symmetric(4));
    CHECK(b.carrier().size() == 16);
    CHECK(characters(b, 16).size() == 4);
    CHECK(count_homomorphisms(b) == 4);
  }
}

TEST_CASE("evaluate rejects non-idempotents") {
  const auto m = symmetric_inverse_monoid(PointSet(2));
  const BooleanAlgebraView b(oracle::boolean(m.monoid));
  const auto xs = characters(b);
  const Element swap = *m.monoid.find("{0->1,1->0}");
  CHECK_THROWS_AS(evaluate(b, xs[0], swap), PreconditionError);
  CHECK_THROWS_AS(b.meet(swap, b.top()), PreconditionError);
}

TEST_CASE("character space: basic opens") {
  const auto m = symmetric_inverse_monoid(PointSet(3));
  const CharacterSpace space(BooleanAlgebraView(oracle::boolean(m.monoid)));
  CHECK(space.size() == 3);
  CHECK(space.all() == CharacterSet{0, 1, 2});
  CHECK(space.basic_open(space.algebra().bottom()).empty());
  CHECK(space.basic_open(space.algebra().top()) == space.all());
  // basic_open(e) is the set of points in dom(e)
  for (Element e : space.algebra().carrier()) {
    CharacterSet expected;
    for (std::size_t x = 0; x < space.size(); ++x)
      if (m.maps[e].domain_mask() & m.maps[space[x].atom].domain_mask())
        expected.push_back(x);
    CHECK(space.basic_open(e) == expected);
  }
  for (std::size_t x = 0; x < space.size(); ++x)
    CHECK(space.index_of_atom(space[x].atom) == x);
  CHECK_THROWS_AS(space.index_of_atom(m.monoid.one()), PreconditionError);

  const Report r = verify_character_space(space);
  CHECK(r.passed());
  REQUIRE(r.find("|E(S)| = 2^(number of atoms)") != nullptr);
}

TEST_CASE("character space checks pass on I(n), n <= 4") {
  for (std::size_t n = 1; n <= 4; ++n) {
    const CharacterSpace space(BooleanAlgebraView(symmetric(n)));
    CHECK(space.size() == n);
    CHECK_MESSAGE(verify_character_space(space).passed(), n);
  }
}
