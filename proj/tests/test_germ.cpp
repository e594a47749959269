#include <doctest.h>

#include <set>

#include "germkit/error.hpp"
#include "germkit/germ.hpp"
#include "germkit/partial_bijection.hpp"
#include "oracles.hpp"

using namespace germkit;

namespace {

struct Fixture {
  ConcreteInverseMonoid concrete;
  GermGroupoid g;

  explicit Fixture(std::size_t n)
      : concrete(symmetric_inverse_monoid(PointSet(n))), g(GermGroupoid::build(oracle::boolean(concrete.monoid))) {}

  // point of X behind a unit of G(I(X))
  int point_of(UnitId u) const { return concrete.maps[g.characters()[u].atom].graph().front().first; }
};

// {0, 1, t} with t·t = 1: a group of order two with a zero adjoined.
FiniteInverseMonoid z2_with_zero() {
  return FiniteInverseMonoid({"0", "1", "t"}, {{0, 0, 0}, {0, 1, 2}, {0, 2, 1}}, 0, 1);
}

} // namespace

TEST_CASE("G(I(n)) is the pair groupoid") {
  for (std::size_t n = 1; n <= 4; ++n) {
    const Fixture f(n);
    CHECK(f.g.groupoid().unit_count() == n);
    CHECK(f.g.groupoid().arrow_count() == n * n);
    CHECK(groupoid_isomorphic(f.g.groupoid(), pair_groupoid(n)));
    CHECK(verify_groupoid_axioms(f.g.groupoid()).passed());
  }
}

TEST_CASE("germ [phi, x_i] is the arrow i -> phi(i)") {
  const Fixture f(3);
  const auto& s = f.concrete.monoid;
  for (Element phi = 0; phi < s.size(); ++phi)
    for (std::size_t x : f.g.char_support(phi)) {
      const ArrowId a = f.g.germ(phi, x);
      const int i = f.point_of(f.g.groupoid().source(a));
      CHECK(f.concrete.maps[phi].defined_at(i));
      CHECK(f.point_of(f.g.groupoid().range(a)) == f.concrete.maps[phi](i));
      CHECK(f.point_of(f.g.alpha(phi, x)) == f.concrete.maps[phi](i));
    }
  // units are labelled by atom names
  for (UnitId u = 0; u < 3; ++u) {
    const std::string& label = f.g.groupoid().unit_label(u);
    CHECK(label == "{" + std::to_string(f.point_of(u)) + "->" + std::to_string(f.point_of(u)) + "}");
  }
}

TEST_CASE("germ keys and representatives") {
  const Fixture f(2);
  const auto& s = f.concrete.monoid;
  const Element one = s.one();
  const Element swap = *s.find("{0->1,1->0}");
  const Element e0 = *s.find("{0->0}");
  const Element m01 = *s.find("{0->1}");
  const std::size_t x0 = f.g.characters().index_of_atom(e0);

  CHECK(f.g.key(swap, x0) == GermKey{x0, m01});
  CHECK(f.g.germ_equivalent(swap, x0, m01, x0));
  CHECK_FALSE(f.g.germ_equivalent(one, x0, swap, x0));
  CHECK(f.g.germ_equivalent(one, x0, e0, x0));
  CHECK(f.g.arrow_name(f.g.germ(swap, x0)) == "{0->1}");

  // [phi, x_0] collects every map sending 0 -> 1
  const auto reps = f.g.representatives(f.g.germ(m01, x0));
  std::set<std::string> names;
  for (Element r : reps)
    names.insert(s.name(r));
  CHECK(names == std::set<std::string>{"{0->1}", "{0->1,1->0}"});

  CHECK_THROWS_AS(f.g.key(e0, 1 - x0), PreconditionError);
  CHECK_THROWS_AS(f.g.alpha(s.zero(), x0), PreconditionError);
  CHECK_THROWS_AS(f.g.germ(one, 7), PreconditionError);
  CHECK(f.g.find(GermKey{x0, swap}) == kNoArrow);
}

TEST_CASE("germ composition and inverses") {
  const Fixture f(3);
  const auto& G = f.g.groupoid();
  for (ArrowId a = 0; a < G.arrow_count(); ++a) {
    CHECK(f.g.compose_germs(f.g.inverse_germ(a), a) == G.identity(G.source(a)));
    CHECK(f.g.inverse_germ(a) == G.inverse(a));
    for (ArrowId b = 0; b < G.arrow_count(); ++b) {
      if (G.composable(a, b)) {
        const ArrowId ab = f.g.compose_germs(a, b);
        CHECK(ab == G.product(a, b));
        // every pair of representatives gives the same class
        const std::size_t y = G.source(b);
        for (Element phi : f.g.representatives(a))
          for (Element psi : f.g.representatives(b))
            CHECK(f.g.germ(f.concrete.monoid.multiply(phi, psi), y) == ab);
      } else {
        CHECK_THROWS_AS(f.g.compose_germs(a, b), ComposabilityError);
      }
    }
  }
}

TEST_CASE("basic bisections") {
  const Fixture f(2);
  const auto& s = f.concrete.monoid;
  CHECK(f.g.basic_bisection(s.zero()).empty());
  CHECK(f.g.basic_bisection(s.one()) == unit_space(f.g.groupoid()));
  const auto eps = epsilon(f.g);
  CHECK(eps.size() == 7);
  CHECK(std::set<Bisection>(eps.begin(), eps.end()).size() == 7);
  for (Element phi = 0; phi < s.size(); ++phi) {
    CHECK(eps[phi].size() == f.concrete.maps[phi].graph().size());
    CHECK(realize_bisection(f.g, eps[phi]) == phi);
  }
  CHECK_THROWS_AS(realize_bisection(f.g, Bisection({0, 1, 2, 3})), PreconditionError);
}

TEST_CASE("intersection lemma on I(2) and I(3)") {
  for (std::size_t n : {2, 3}) {
    const Fixture f(n);
    const Report r = verify_intersection_lemma(f.g);
    CHECK_MESSAGE(r.passed(), n);
    const std::size_t pairs = f.concrete.monoid.size() * f.concrete.monoid.size();
    CHECK(r.find("(b) U_phi & U_psi = union of U_{phi q} = U_{phi meet psi}")->checked == pairs);
    CHECK(r.find("(d) U_phi minus U_psi = U_{phi \\ (phi meet psi)}")->checked == pairs);
  }
  CHECK(oracle::symmetric_monoid_size(2) * oracle::symmetric_monoid_size(2) == 49);
  CHECK(oracle::symmetric_monoid_size(3) * oracle::symmetric_monoid_size(3) == 1156);
}

TEST_CASE("ample structure and germ properties") {
  for (std::size_t n : {1, 2, 3}) {
    const Fixture f(n);
    CHECK_MESSAGE(verify_ample_structure(f.g).passed(), n);
    const Report p = verify_germ_properties(f.g);
    CHECK_MESSAGE(p.passed(), n);
    CHECK(p.find("germ product is independent of representatives")->passed);
    CHECK(p.find("alpha_{phi^-1} o alpha_phi = id on supports")->passed);
    CHECK(p.find("U_{phi^-1} = {g^-1 : g in U_phi}")->passed);
  }
}

TEST_CASE("epsilon is an isomorphism") {
  for (std::size_t n : {1, 2, 3}) {
    const Fixture f(n);
    const Report r = verify_epsilon_isomorphism(f.g);
    CHECK_MESSAGE(r.passed(), n);
    const auto* surj = r.find("(iii) surjective onto all bisections");
    REQUIRE(surj != nullptr);
    const std::size_t size = oracle::symmetric_monoid_size(n);
    CHECK(surj->detail == "|S| = " + std::to_string(size) + ", |Gamma_c| = " + std::to_string(size));
    CHECK(all_bisections(f.g.groupoid()).size() == size);

    const Report b = verify_bisection_monoid(f.g);
    CHECK_MESSAGE(b.passed(), n);
  }
}

TEST_CASE("group with zero: G(S) is the group") {
  const auto s = oracle::boolean(z2_with_zero());
  const auto g = GermGroupoid::build(s);
  CHECK(g.groupoid().unit_count() == 1);
  CHECK(g.groupoid().arrow_count() == 2);
  CHECK(verify_epsilon_isomorphism(g).passed());
  CHECK(verify_bisection_monoid(g).passed());
  CHECK(verify_germ_properties(g).passed());
  CHECK(verify_intersection_lemma(g).passed());
}

TEST_CASE("trivial Boolean inverse monoid") {
  const auto g = GermGroupoid::build(oracle::boolean(oracle::two_element_monoid()));
  CHECK(g.groupoid().unit_count() == 1);
  CHECK(g.groupoid().arrow_count() == 1);
  CHECK(verify_epsilon_isomorphism(g).passed());
  CHECK_THROWS_AS(GermGroupoid::build(nullptr), PreconditionError);
}

TEST_CASE("unit cap guards bisection enumeration") {
  const Fixture f(4);
  CHECK_THROWS_AS(verify_epsilon_isomorphism(f.g, 3), SizeError);
}
