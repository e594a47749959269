#include <doctest.h>

#include "germkit/error.hpp"
#include "germkit/inverse_monoid.hpp"
#include "germkit/partial_bijection.hpp"
#include "oracles.hpp"

using namespace germkit;

namespace {

Element idx(const ConcreteInverseMonoid& m, const std::string& name) {
  auto e = m.monoid.find(name);
  REQUIRE_MESSAGE(e.has_value(), name);
  return *e;
}

} // namespace

TEST_CASE("partial bijections reject non-injective graphs") {
  CHECK_THROWS_AS(PartialBijection(PointSet(2), {{0, 1}, {1, 1}}), InputError);
  CHECK_THROWS_AS(PartialBijection(PointSet(2), {{0, 2}}), InputError);
  CHECK_THROWS_AS(PointSet(0), InputError);
}

TEST_CASE("symmetric inverse monoid sizes match sum_k C(n,k)^2 k!") {
  CHECK(oracle::symmetric_monoid_size(1) == 2);
  CHECK(oracle::symmetric_monoid_size(2) == 7);
  CHECK(oracle::symmetric_monoid_size(3) == 34);
  for (std::size_t n = 1; n <= 4; ++n)
    CHECK(symmetric_inverse_monoid(PointSet(n)).monoid.size() == oracle::symmetric_monoid_size(n));
}

TEST_CASE("symmetric inverse monoid: canonical order, zero and identity") {
  const auto m = symmetric_inverse_monoid(PointSet(2));
  CHECK(std::is_sorted(m.maps.begin(), m.maps.end()));
  CHECK(m.monoid.name(m.monoid.zero()) == "{}");
  CHECK(m.monoid.name(m.monoid.one()) == "{0->0,1->1}");
  // domain bitmask first: {} < {0->0} < {0->1} < {1->0} < {1->1} < {0->0,1->1} < {0->1,1->0}
  const std::vector<std::string> expected{"{}", "{0->0}", "{0->1}", "{1->0}", "{1->1}", "{0->0,1->1}", "{0->1,1->0}"};
  CHECK(m.monoid.names() == expected);
  CHECK_THROWS_AS(symmetric_inverse_monoid(PointSet(6)), SizeError);
}

TEST_CASE("compose") {
  const auto m = symmetric_inverse_monoid(PointSet(2));
  const auto& s = m.monoid;
  for (Element a = 0; a < s.size(); ++a) {
    CHECK(compose(s, s.one(), a) == a);
    CHECK(compose(s, s.zero(), a) == s.zero());
  }
  // f = {0->1} after g = {1->0} is {1->1}
  CHECK(compose(s, idx(m, "{0->1}"), idx(m, "{1->0}")) == idx(m, "{1->1}"));
  CHECK_THROWS_AS(compose(s, 7, 0), PreconditionError);
}

TEST_CASE("inverse_of matches graph reversal") {
  for (std::size_t n = 1; n <= 3; ++n) {
    const auto m = symmetric_inverse_monoid(PointSet(n));
    const auto& s = m.monoid;
    CHECK(inverse_of(s, s.one()) == s.one());
    CHECK(inverse_of(s, s.zero()) == s.zero());
    for (Element a = 0; a < s.size(); ++a) {
      const auto rev = oracle::from_graph(n, oracle::reverse(oracle::graph_of(m.maps[a])));
      CHECK(m.maps[inverse_of(s, a)] == rev);
      // uniqueness by exhaustive search
      std::size_t count = 0;
      for (Element b = 0; b < s.size(); ++b)
        count += s.multiply(a, b, a) == a && s.multiply(b, a, b) == b;
      CHECK(count == 1);
    }
  }
  const auto m = symmetric_inverse_monoid(PointSet(2));
  CHECK(inverse_of(m.monoid, idx(m, "{0->1}")) == idx(m, "{1->0}"));
}

TEST_CASE("natural order") {
  const auto m = symmetric_inverse_monoid(PointSet(3));
  const auto& s = m.monoid;
  for (Element a = 0; a < s.size(); ++a) {
    CHECK(natural_leq(s, s.zero(), a));
    CHECK(natural_leq(s, a, a));
  }
  CHECK(natural_leq(s, idx(m, "{0->1}"), idx(m, "{0->1,2->0}")));
  CHECK_FALSE(natural_leq(s, idx(m, "{0->1,2->0}"), idx(m, "{0->1}")));
  CHECK_FALSE(natural_leq(s, idx(m, "{0->2}"), idx(m, "{0->1,2->0}")));

  // For I(X) the order is graph inclusion.
  for (Element a = 0; a < s.size(); ++a)
    for (Element b = 0; b < s.size(); ++b) {
      const auto ga = oracle::graph_of(m.maps[a]);
      const auto gb = oracle::graph_of(m.maps[b]);
      CHECK(natural_leq(s, a, b) == (oracle::meet(ga, gb) == ga));
    }
}

TEST_CASE("orthogonality") {
  const auto m = symmetric_inverse_monoid(PointSet(2));
  const auto& s = m.monoid;
  for (Element a = 0; a < s.size(); ++a)
    CHECK(is_orthogonal(s, s.zero(), a));
  CHECK_FALSE(is_orthogonal(s, s.one(), s.one()));
  CHECK(is_orthogonal(s, idx(m, "{0->0}"), idx(m, "{1->1}")));
  // same image point
  CHECK_FALSE(is_orthogonal(s, idx(m, "{0->0}"), idx(m, "{1->0}")));
  // same domain point
  CHECK_FALSE(is_orthogonal(s, idx(m, "{0->0}"), idx(m, "{0->1}")));
}

TEST_CASE("meet, join and relative complement") {
  const auto m = symmetric_inverse_monoid(PointSet(2));
  const auto& s = m.monoid;
  for (Element a = 0; a < s.size(); ++a) {
    CHECK(meet(s, a, a) == a);
    CHECK(meet(s, a, s.zero()) == s.zero());
    CHECK(orthogonal_join(s, a, s.zero()) == a);
    CHECK(relative_complement(s, a, a) == s.zero());
    CHECK(relative_complement(s, a, s.zero()) == a);
  }
  CHECK(meet(s, idx(m, "{0->0,1->1}"), idx(m, "{0->0}")) == idx(m, "{0->0}"));
  CHECK(orthogonal_join(s, idx(m, "{0->0}"), idx(m, "{1->1}")) == s.one());
  CHECK(orthogonal_join(s, idx(m, "{0->1}"), idx(m, "{1->0}")) == idx(m, "{0->1,1->0}"));
  CHECK(relative_complement(s, s.one(), idx(m, "{0->0}")) == idx(m, "{1->1}"));

  CHECK_THROWS_AS(orthogonal_join(s, s.one(), s.one()), PreconditionError);
  CHECK_THROWS_AS(relative_complement(s, idx(m, "{0->0}"), s.one()), PreconditionError);
}

TEST_CASE("meet/join/complement agree with partial-map formulas on every pair of I(3)") {
  const std::size_t n = 3;
  const auto m = symmetric_inverse_monoid(PointSet(n));
  const auto& s = m.monoid;
  const OrderTables t(s);
  for (Element a = 0; a < s.size(); ++a)
    for (Element b = 0; b < s.size(); ++b) {
      const auto ga = oracle::graph_of(m.maps[a]);
      const auto gb = oracle::graph_of(m.maps[b]);
      const Element mt = meet(s, a, b);
      CHECK(m.maps[mt] == oracle::from_graph(n, oracle::meet(ga, gb)));
      CHECK(t.meet(a, b) == mt);
      if (is_orthogonal(s, a, b)) {
        const Element j = orthogonal_join(s, a, b);
        CHECK(m.maps[j] == oracle::from_graph(n, oracle::join(ga, gb)));
        CHECK(t.join(a, b) == j);
        CHECK(mt == s.zero());
      }
      const Element d = relative_complement(s, a, mt);
      CHECK(m.maps[d] == oracle::from_graph(n, oracle::difference(ga, oracle::meet(ga, gb))));
    }
}

TEST_CASE("order invariants hold exhaustively on I(3)") {
  const auto m = symmetric_inverse_monoid(PointSet(3));
  const auto& s = m.monoid;
  const OrderTables t(s);
  const auto& E = s.idempotents();
  CHECK(E.size() == 8);
  for (Element p : E)
    for (Element q : E) {
      CHECK(s.multiply(p, q) == s.multiply(q, p));
      CHECK(t.meet(p, q) == s.multiply(p, q));
    }
  for (Element a = 0; a < s.size(); ++a)
    for (Element b = 0; b < s.size(); ++b) {
      const Element mt = t.meet(a, b);
      CHECK(t.leq(mt, a));
      CHECK(t.leq(mt, b));
      for (Element c = 0; c < s.size(); ++c)
        if (t.leq(c, a) && t.leq(c, b))
          CHECK(t.leq(c, mt));
      CHECK(t.complement_candidates(a, mt).size() == 1);
    }
}

TEST_CASE("Boolean axiom report") {
  SUBCASE("I(n) passes for n <= 3") {
    for (std::size_t n = 1; n <= 3; ++n) {
      const Report r = verify_boolean_inverse_monoid(symmetric_inverse_monoid(PointSet(n)).monoid);
      CHECK_MESSAGE(r.passed(), n);
    }
  }
  SUBCASE("two-element monoid passes") { CHECK(verify_boolean_inverse_monoid(oracle::two_element_monoid()).passed()); }
  SUBCASE("chain monoid fails complement uniqueness") {
    const auto chain = oracle::chain_monoid();
    const Report r = verify_boolean_inverse_monoid(chain);
    CHECK_FALSE(r.passed());
    const auto* rc = r.find("relative complements exist and are unique");
    REQUIRE(rc != nullptr);
    CHECK_FALSE(rc->passed);
    CHECK(rc->witness == "1 \\ e has 0 candidates");
    CHECK_FALSE(r.find("idempotents are complemented")->passed);
    CHECK(r.find("binary meets exist")->passed);
    CHECK_THROWS_AS(relative_complement(chain, 1, 2), StructureError);
    CHECK_THROWS_AS(BooleanInverseMonoid{chain}, StructureError);
  }
}

TEST_CASE("construction validates the table") {
  // degenerate 0 = 1
  CHECK_THROWS_AS(FiniteInverseMonoid({"0"}, {{0}}, 0, 0), StructureError);
  // wrong shape
  CHECK_THROWS_AS(FiniteInverseMonoid({"0", "1"}, {{0, 0}}, 0, 1), InputError);
  CHECK_THROWS_AS(FiniteInverseMonoid({"0", "1"}, {{0, 0}, {0, 2}}, 0, 1), InputError);
  CHECK_THROWS_AS(FiniteInverseMonoid({"a", "a"}, {{0, 0}, {0, 1}}, 0, 1), InputError);
  // not absorbing
  CHECK_THROWS_AS(FiniteInverseMonoid({"0", "1"}, {{1, 0}, {0, 1}}, 0, 1), StructureError);
  // {0, 1, a} with a^2 = 1: a group element plus zero is inverse; a^2 = 0 (nilpotent) is not.
  CHECK_NOTHROW(FiniteInverseMonoid({"0", "1", "a"}, {{0, 0, 0}, {0, 1, 2}, {0, 2, 1}}, 0, 1));
  CHECK_THROWS_AS(FiniteInverseMonoid({"0", "1", "a"}, {{0, 0, 0}, {0, 1, 2}, {0, 2, 0}}, 0, 1), StructureError);
  // element cap
  CHECK_THROWS_AS(FiniteInverseMonoid({"0", "1"}, {{0, 0}, {0, 1}}, 0, 1, 1), SizeError);
}

TEST_CASE("BooleanInverseMonoid tabulates operations") {
  const auto m = symmetric_inverse_monoid(PointSet(2));
  const BooleanInverseMonoid b(m.monoid);
  const Element e0 = idx(m, "{0->0}");
  CHECK(b.complement(b.monoid().one(), e0) == idx(m, "{1->1}"));
  CHECK(b.join(e0, idx(m, "{1->1}")) == b.monoid().one());
  CHECK_THROWS_AS(b.join(e0, e0), PreconditionError);
  CHECK_THROWS_AS(b.complement(e0, b.monoid().one()), PreconditionError);
}
