#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "germkit/error.hpp"
#include "germkit/germ.hpp"

namespace germkit {

namespace {

std::string pair_name(const BooleanInverseMonoid& s, Element a, Element b) {
  return "(" + s.name(a) + ", " + s.name(b) + ")";
}

std::string set_name(const GermGroupoid& g, const Bisection& a) {
  std::string out = "{";
  for (std::size_t i = 0; i < a.arrows.size(); ++i)
    out += (i ? "; " : "") + g.arrow_name(a.arrows[i]);
  return out + "}";
}

Bisection germs_over(const GermGroupoid& g, Element phi, const CharacterSet& xs) {
  std::vector<ArrowId> out;
  for (std::size_t x : xs)
    out.push_back(g.germ(phi, x));
  return Bisection(std::move(out));
}

} // namespace

Report verify_intersection_lemma(const GermGroupoid& g) {
  Report report("intersection lemma");
  const auto& S = g.monoid();
  const Element n = static_cast<Element>(S.size());
  const auto U = epsilon(g);
  const auto& E = g.characters().algebra().carrier();

  CheckBuilder a("(a) psi <= phi gives [phi,x] = [psi,x] and U_psi in U_phi");
  CheckBuilder b("(b) U_phi & U_psi = union of U_{phi q} = U_{phi meet psi}");
  CheckBuilder c("(c) orthogonal pairs: U_phi & U_psi empty, union = U_{phi join psi}");
  CheckBuilder d("(d) U_phi minus U_psi = U_{phi \\ (phi meet psi)}");
  for (Element phi = 0; phi < n; ++phi)
    for (Element psi = 0; psi < n; ++psi) {
      auto w = [&] { return pair_name(S, phi, psi); };
      if (S.leq(psi, phi)) {
        bool ok = true;
        for (std::size_t x : g.char_support(psi))
          ok = ok && g.in_support(phi, x) && g.key(phi, x) == g.key(psi, x);
        const auto inter = set_intersection(U[psi], U[phi]);
        a.expect(ok && inter == U[psi], w);
      }

      const Element m = S.meet(phi, psi);
      const auto inter = set_intersection(U[phi], U[psi]);
      Bisection via_q;
      for (Element q : E)
        if (S.multiply(phi, q) == S.multiply(psi, q))
          via_q = set_union(via_q, U[S.multiply(phi, q)]);
      b.expect(inter == U[m] && via_q == U[m], w);

      if (S.orthogonal(phi, psi)) {
        const Element j = S.join(phi, psi);
        c.expect(inter.empty() && set_union(U[phi], U[psi]) == U[j], w);
      }

      const Element diff = S.complement(phi, m);
      d.expect(set_difference(U[phi], U[psi]) == U[diff], w);
    }
  report.add(std::move(a).finish());
  report.add(std::move(b).finish());
  report.add(std::move(c).finish());
  report.add(std::move(d).finish());

  CheckBuilder up("U_{phi p} = {[phi,x] : x(phi^-1 phi p) = 1}");
  for (Element phi = 0; phi < n; ++phi)
    for (Element p : E) {
      const auto rhs = germs_over(g, phi, g.characters().basic_open(S.multiply(S.source_idempotent(phi), p)));
      up.expect(U[S.multiply(phi, p)] == rhs, [&] { return pair_name(S, phi, p); });
    }
  report.add(std::move(up).finish());
  return report;
}

Report verify_ample_structure(const GermGroupoid& g) {
  Report report("ample groupoid structure");
  const auto& S = g.monoid();
  const auto& G = g.groupoid();
  const Element n = static_cast<Element>(S.size());
  const auto U = epsilon(g);

  {
    CheckBuilder c("(f) every U_phi is a bisection");
    for (Element phi = 0; phi < n; ++phi)
      c.expect(is_bisection(G, U[phi]), [&] { return S.name(phi); });
    report.add(std::move(c).finish());
  }
  {
    CheckBuilder c("(a) the sets U_phi cover every arrow");
    std::vector<bool> covered(G.arrow_count(), false);
    for (const auto& u : U)
      for (ArrowId a : u.arrows)
        covered[a] = true;
    for (ArrowId a = 0; a < G.arrow_count(); ++a)
      c.expect(covered[a], [&] { return g.arrow_name(a); });
    std::set<Bisection> distinct(U.begin(), U.end());
    c.set_detail(std::to_string(distinct.size()) + " basic bisections over " + std::to_string(G.arrow_count()) +
                 " arrows");
    report.add(std::move(c).finish());
  }
  {
    CheckBuilder c("(e) theta_phi: U_phi -> E_phi is a bijection matching the source map");
    for (Element phi = 0; phi < n; ++phi) {
      const auto support = g.char_support(phi);
      std::vector<std::size_t> image;
      for (ArrowId a : U[phi].arrows)
        image.push_back(g.germs()[a].character);
      std::sort(image.begin(), image.end());
      bool ok = image == support && U[phi].size() == support.size();
      for (std::size_t x : support) {
        const ArrowId a = g.germ(phi, x);
        ok = ok && G.source(a) == x && G.identity(G.source(a)) == g.germ(S.monoid().one(), x);
      }
      c.expect(ok, [&] { return S.name(phi); });
    }
    report.add(std::move(c).finish());
  }
  {
    CheckBuilder c("(b)-(d) every arrow set is a union of sets U_{phi e}");
    // Singletons suffice: {a} = U_{r e} with r the representative of a and e its atom.
    for (ArrowId a = 0; a < G.arrow_count(); ++a) {
      const auto& k = g.germs()[a];
      const Element e = g.characters()[k.character].atom;
      c.expect(U[S.multiply(k.representative, e)] == Bisection({a}), [&] { return g.arrow_name(a); });
    }
    report.add(std::move(c).finish());
  }
  {
    CheckBuilder c("unit space is {[1,x]}");
    std::vector<ArrowId> units;
    for (std::size_t x = 0; x < g.characters().size(); ++x) {
      units.push_back(g.germ(S.monoid().one(), x));
      c.expect(G.identity(x) == units.back(), [&] { return G.unit_label(x); });
    }
    for (ArrowId a = 0; a < G.arrow_count(); ++a) {
      const bool idem = G.composable(a, a) && G.product(a, a) == a;
      c.expect(idem == (std::find(units.begin(), units.end(), a) != units.end()), [&] { return g.arrow_name(a); });
    }
    c.expect(U[S.monoid().one()] == unit_space(G), [] { return std::string("U_1"); });
    report.add(std::move(c).finish());
  }
  const Report axioms = verify_groupoid_axioms(G);
  for (const auto& r : axioms.checks()) {
    CheckResult copy = r;
    copy.name = "(g) " + copy.name;
    report.add(std::move(copy));
  }
  return report;
}

Report verify_germ_properties(const GermGroupoid& g) {
  Report report("germ properties");
  const auto& S = g.monoid();
  const auto& G = g.groupoid();
  const Element n = static_cast<Element>(S.size());

  std::vector<std::pair<Element, std::size_t>> reps; // S * E^
  for (Element phi = 0; phi < n; ++phi)
    for (std::size_t x : g.char_support(phi))
      reps.emplace_back(phi, x);
  auto rep_name = [&](std::pair<Element, std::size_t> r) {
    return "(" + S.name(r.first) + ", " + S.name(g.characters()[r.second].atom) + ")";
  };

  {
    CheckBuilder c("literal germ relation agrees with canonical key");
    for (const auto& r1 : reps)
      for (const auto& r2 : reps)
        c.expect(g.germ_equivalent(r1.first, r1.second, r2.first, r2.second) ==
                     g.germ_equivalent_canonical(r1.first, r1.second, r2.first, r2.second),
                 [&] { return rep_name(r1) + " vs " + rep_name(r2); });
    report.add(std::move(c).finish());
  }
  {
    CheckBuilder c("literal germ relation is reflexive and symmetric");
    for (const auto& r1 : reps) {
      c.expect(g.germ_equivalent(r1.first, r1.second, r1.first, r1.second), [&] { return rep_name(r1); });
      for (const auto& r2 : reps)
        c.expect(g.germ_equivalent(r1.first, r1.second, r2.first, r2.second) ==
                     g.germ_equivalent(r2.first, r2.second, r1.first, r1.second),
                 [&] { return rep_name(r1) + " vs " + rep_name(r2); });
    }
    report.add(std::move(c).finish());
  }
  {
    CheckBuilder c("germ product is independent of representatives");
    std::vector<std::vector<Element>> classes(G.arrow_count());
    for (ArrowId a = 0; a < G.arrow_count(); ++a)
      classes[a] = g.representatives(a);
    for (ArrowId a = 0; a < G.arrow_count(); ++a)
      for (ArrowId b = 0; b < G.arrow_count(); ++b) {
        if (!G.composable(a, b))
          continue;
        const ArrowId expected = g.compose_germs(a, b);
        const std::size_t y = g.germs()[b].character;
        for (Element phi : classes[a])
          for (Element psi : classes[b]) {
            const Element prod = S.multiply(phi, psi);
            c.expect(g.in_support(prod, y) && g.germ(prod, y) == expected, [&] {
              return "[" + S.name(phi) + "] . [" + S.name(psi) + "] at " + S.name(g.characters()[y].atom);
            });
          }
      }
    report.add(std::move(c).finish());
  }
  {
    CheckBuilder c("alpha_{phi^-1} o alpha_phi = id on supports");
    for (const auto& [phi, x] : reps) {
      const std::size_t y = g.alpha(phi, x);
      const Element inv = S.inverse(phi);
      c.expect(g.in_support(inv, y) && g.alpha(inv, y) == x, [&, phi = phi, x = x] { return rep_name({phi, x}); });
    }
    report.add(std::move(c).finish());
  }
  {
    CheckBuilder c("U_{phi^-1} = {g^-1 : g in U_phi}");
    for (Element phi = 0; phi < n; ++phi) {
      const auto u = g.basic_bisection(phi);
      std::vector<ArrowId> inv;
      for (ArrowId a : u.arrows)
        inv.push_back(g.inverse_germ(a));
      c.expect(g.basic_bisection(S.inverse(phi)) == Bisection(std::move(inv)) &&
                   g.basic_bisection(S.inverse(phi)) == inverse(G, u),
               [&] { return S.name(phi); });
    }
    report.add(std::move(c).finish());
  }
  {
    CheckBuilder c("g^-1 . g = [1, source]");
    for (ArrowId a = 0; a < G.arrow_count(); ++a)
      c.expect(g.compose_germs(g.inverse_germ(a), a) == g.germ(S.monoid().one(), g.germs()[a].character),
               [&] { return g.arrow_name(a); });
    report.add(std::move(c).finish());
  }
  return report;
}

Report verify_epsilon_isomorphism(const GermGroupoid& g, std::size_t unit_cap, std::size_t element_cap) {
  Report report("epsilon: S -> Gamma_c(G(S))");
  const auto& S = g.monoid();
  const auto& G = g.groupoid();
  const Element n = static_cast<Element>(S.size());
  const auto U = epsilon(g);
  const auto all = all_bisections(G, unit_cap);
  if (all.size() > element_cap)
    throw SizeError("groupoid has " + std::to_string(all.size()) + " bisections, cap is " +
                    std::to_string(element_cap));

  {
    CheckBuilder c("(i) homomorphism: U_{phi psi} = U_phi U_psi");
    for (Element phi = 0; phi < n; ++phi)
      for (Element psi = 0; psi < n; ++psi)
        c.expect(U[S.multiply(phi, psi)] == multiply(G, U[phi], U[psi]), [&] { return pair_name(S, phi, psi); });
    report.add(std::move(c).finish());
  }
  {
    CheckBuilder c("(ii) injective");
    std::map<Bisection, Element> seen;
    for (Element phi = 0; phi < n; ++phi) {
      auto [it, fresh] = seen.emplace(U[phi], phi);
      c.expect(fresh, [&, it = it] { return pair_name(S, it->second, phi) + " share " + set_name(g, U[phi]); });
    }
    report.add(std::move(c).finish());
  }
  {
    CheckBuilder c("(iii) surjective onto all bisections");
    std::set<Bisection> image(U.begin(), U.end());
    for (const auto& w : all)
      c.expect(image.count(w) == 1, [&] { return "missing " + set_name(g, w); });
    for (const auto& u : image)
      c.expect(is_bisection(G, u), [&] { return "not a bisection " + set_name(g, u); });
    c.expect(image.size() == all.size(), [&] { return std::string("cardinality mismatch"); });
    c.set_detail("|S| = " + std::to_string(n) + ", |Gamma_c| = " + std::to_string(all.size()));
    report.add(std::move(c).finish());
  }
  {
    CheckBuilder c("(iv) U_{phi^-1} = (U_phi)^-1");
    for (Element phi = 0; phi < n; ++phi)
      c.expect(U[S.inverse(phi)] == inverse(G, U[phi]), [&] { return S.name(phi); });
    report.add(std::move(c).finish());
  }
  {
    CheckBuilder split("(v) U_phi1 + U_phi2 = U_phi1 + U_chi disjointly, chi = phi2 \\ (phi2 meet phi1)");
    CheckBuilder orth("(v) bisection unions: phi1 orthogonal to chi and union = U_{phi1 join chi}");
    for (Element p1 = 0; p1 < n; ++p1)
      for (Element p2 = 0; p2 < n; ++p2) {
        auto w = [&] { return pair_name(S, p1, p2); };
        const Element chi = S.complement(p2, S.meet(p2, p1));
        const auto uni = set_union(U[p1], U[p2]);
        split.expect(set_intersection(U[p1], U[chi]).empty() && set_union(U[p1], U[chi]) == uni &&
                         U[chi] == set_difference(U[p2], U[p1]),
                     w);
        if (!is_bisection(G, uni))
          continue;
        orth.expect(S.orthogonal(p1, chi) && U[S.join(p1, chi)] == uni, w);
      }
    report.add(std::move(split).finish());
    report.add(std::move(orth).finish());
  }
  {
    CheckBuilder c("(vi) every bisection is realized by the orthogonalization fold");
    for (const auto& w : all) {
      bool ok = true;
      try {
        ok = U[realize_bisection(g, w)] == w;
      } catch (const StructureError&) {
        ok = false;
      }
      c.expect(ok, [&] { return set_name(g, w); });
    }
    report.add(std::move(c).finish());
  }
  return report;
}

Report verify_epsilon_isomorphism(std::shared_ptr<const BooleanInverseMonoid> s,
                                  std::size_t unit_cap,
                                  std::size_t element_cap) {
  return verify_epsilon_isomorphism(GermGroupoid::build(std::move(s)), unit_cap, element_cap);
}

Report verify_bisection_monoid(const GermGroupoid& g, std::size_t unit_cap, std::size_t element_cap) {
  Report report("Gamma_c(G(S)) as a Boolean inverse monoid");
  try {
    const auto gamma = bisection_monoid(g.groupoid(), unit_cap, element_cap);
    const Report inner = verify_boolean_inverse_monoid(gamma.monoid);
    for (const auto& c : inner.checks())
      report.add(c);
    CheckBuilder count("bisection count equals |S|");
    count.expect(gamma.monoid.size() == g.monoid().size(), [&] {
      return std::to_string(gamma.monoid.size()) + " != " + std::to_string(g.monoid().size());
    });
    count.set_detail(std::to_string(gamma.monoid.size()) + " = " + std::to_string(g.monoid().size()));
    report.add(std::move(count).finish());
  } catch (const StructureError& e) {
    CheckBuilder c("bisections form an inverse monoid");
    c.fail(e.what());
    report.add(std::move(c).finish());
  }
  return report;
}

} // namespace germkit
