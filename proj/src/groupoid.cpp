#include "germkit/groupoid.hpp"

#include <algorithm>
#include <iterator>
#include <map>

#include "germkit/error.hpp"

namespace germkit {

FiniteGroupoid::FiniteGroupoid(std::vector<std::string> unit_labels,
                               std::vector<ArrowSpec> arrows,
                               std::vector<ArrowId> identities,
                               std::vector<ArrowId> products,
                               std::vector<ArrowId> inverses)
    : unit_labels_(std::move(unit_labels)),
      arrows_(std::move(arrows)),
      identities_(std::move(identities)),
      products_(std::move(products)),
      inverses_(std::move(inverses)) {
  const std::size_t m = arrows_.size();
  if (identities_.size() != unit_labels_.size())
    throw InputError("one identity arrow per unit required");
  if (products_.size() != m * m || inverses_.size() != m)
    throw InputError("groupoid table shape mismatch");
  for (const auto& a : arrows_)
    if (a.source >= unit_labels_.size() || a.range >= unit_labels_.size())
      throw InputError("arrow endpoint out of range");
  for (ArrowId g : identities_)
    if (g >= m)
      throw InputError("identity arrow out of range");
  for (ArrowId g : inverses_)
    if (g >= m)
      throw InputError("inverse arrow out of range");
  for (ArrowId g : products_)
    if (g != kNoArrow && g >= m)
      throw InputError("product arrow out of range");
}

ArrowId FiniteGroupoid::compose(ArrowId g, ArrowId h) const {
  if (g >= arrow_count() || h >= arrow_count())
    throw PreconditionError("arrow index out of range");
  if (!composable(g, h))
    throw ComposabilityError("arrows " + label(g) + " and " + label(h) + " are not composable");
  return product(g, h);
}

std::vector<ArrowId> FiniteGroupoid::hom(UnitId u, UnitId v) const {
  std::vector<ArrowId> out;
  for (ArrowId g = 0; g < arrow_count(); ++g)
    if (source(g) == u && range(g) == v)
      out.push_back(g);
  return out;
}

Report verify_groupoid_axioms(const FiniteGroupoid& G) {
  Report report("groupoid axioms");
  const std::size_t m = G.arrow_count();
  auto nm = [&](std::initializer_list<ArrowId> xs) {
    std::string out;
    for (ArrowId x : xs)
      out += (out.empty() ? "" : ", ") + G.label(x);
    return "(" + out + ")";
  };

  CheckBuilder units("identities");
  for (UnitId u = 0; u < G.unit_count(); ++u) {
    const ArrowId e = G.identity(u);
    units.expect(G.source(e) == u && G.range(e) == u, [&] { return "unit " + G.unit_label(u); });
  }
  for (ArrowId g = 0; g < m; ++g)
    units.expect(G.product(G.identity(G.range(g)), g) == g && G.product(g, G.identity(G.source(g))) == g,
                 [&] { return nm({g}); });
  report.add(std::move(units).finish());

  CheckBuilder comp("composability and endpoints");
  for (ArrowId g = 0; g < m; ++g)
    for (ArrowId h = 0; h < m; ++h) {
      const ArrowId k = G.product(g, h);
      if (!G.composable(g, h)) {
        comp.expect(k == kNoArrow, [&] { return "product defined on " + nm({g, h}); });
        continue;
      }
      comp.expect(k != kNoArrow && G.source(k) == G.source(h) && G.range(k) == G.range(g),
                  [&] { return nm({g, h}); });
    }
  report.add(std::move(comp).finish());

  CheckBuilder assoc("associativity");
  for (ArrowId f = 0; f < m; ++f)
    for (ArrowId g = 0; g < m; ++g) {
      const ArrowId fg = G.product(f, g);
      if (fg == kNoArrow)
        continue;
      for (ArrowId h = 0; h < m; ++h) {
        const ArrowId gh = G.product(g, h);
        if (gh == kNoArrow)
          continue;
        assoc.expect(G.product(fg, h) == G.product(f, gh), [&] { return nm({f, g, h}); });
      }
    }
  report.add(std::move(assoc).finish());

  CheckBuilder inv("inverses");
  for (ArrowId g = 0; g < m; ++g) {
    const ArrowId gi = G.inverse(g);
    inv.expect(G.product(gi, g) == G.identity(G.source(g)) && G.product(g, gi) == G.identity(G.range(g)) &&
                   G.inverse(gi) == g,
               [&] { return nm({g}); });
  }
  report.add(std::move(inv).finish());
  return report;
}

FiniteGroupoid pair_groupoid(std::size_t n) {
  return equivalence_groupoid(std::vector<std::vector<bool>>(n, std::vector<bool>(n, true)));
}

FiniteGroupoid equivalence_groupoid(const std::vector<std::vector<bool>>& rel) {
  const std::size_t n = rel.size();
  for (const auto& row : rel)
    if (row.size() != n)
      throw InputError("relation matrix is not square");
  for (std::size_t i = 0; i < n; ++i) {
    if (!rel[i][i])
      throw InputError("relation is not reflexive");
    for (std::size_t j = 0; j < n; ++j) {
      if (rel[i][j] != rel[j][i])
        throw InputError("relation is not symmetric");
      for (std::size_t k = 0; k < n; ++k)
        if (rel[i][j] && rel[j][k] && !rel[i][k])
          throw InputError("relation is not transitive");
    }
  }

  std::vector<std::string> units;
  for (std::size_t i = 0; i < n; ++i)
    units.push_back(std::to_string(i));
  std::vector<ArrowSpec> arrows;
  std::map<std::pair<std::size_t, std::size_t>, ArrowId> id_of; // (source, range)
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t r = 0; r < n; ++r)
      if (rel[r][s]) {
        id_of[{s, r}] = arrows.size();
        arrows.push_back({s, r, std::to_string(s) + "->" + std::to_string(r)});
      }
  const std::size_t m = arrows.size();
  std::vector<ArrowId> identities(n), products(m * m, kNoArrow), inverses(m);
  for (std::size_t i = 0; i < n; ++i)
    identities[i] = id_of.at({i, i});
  for (ArrowId g = 0; g < m; ++g) {
    inverses[g] = id_of.at({arrows[g].range, arrows[g].source});
    for (ArrowId h = 0; h < m; ++h)
      if (arrows[g].source == arrows[h].range)
        products[g * m + h] = id_of.at({arrows[h].source, arrows[g].range});
  }
  return FiniteGroupoid(std::move(units), std::move(arrows), std::move(identities), std::move(products),
                        std::move(inverses));
}

namespace {

class IsoSearch {
public:
  IsoSearch(const FiniteGroupoid& a, const FiniteGroupoid& b) : a_(a), b_(b) {
    unit_map_.assign(a.unit_count(), kNone);
    unit_used_.assign(b.unit_count(), false);
    arrow_map_.assign(a.arrow_count(), kNoArrow);
    arrow_used_.assign(b.arrow_count(), false);
    // Identities first so that non-identity arrows see them assigned.
    for (ArrowId g = 0; g < a.arrow_count(); ++g)
      if (!a.is_identity(g))
        order_.push_back(g);
  }

  bool run() { return assign_unit(0); }

private:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  bool assign_unit(UnitId u) {
    if (u == a_.unit_count()) {
      for (UnitId v = 0; v < a_.unit_count(); ++v) {
        arrow_map_[a_.identity(v)] = b_.identity(unit_map_[v]);
        arrow_used_[b_.identity(unit_map_[v])] = true;
      }
      const bool ok = assign_arrow(0);
      for (UnitId v = 0; v < a_.unit_count(); ++v) {
        arrow_map_[a_.identity(v)] = kNoArrow;
        arrow_used_[b_.identity(unit_map_[v])] = false;
      }
      return ok;
    }
    for (UnitId w = 0; w < b_.unit_count(); ++w) {
      if (unit_used_[w])
        continue;
      unit_map_[u] = w;
      bool ok = true;
      for (UnitId v = 0; v <= u && ok; ++v)
        ok = a_.hom(u, v).size() == b_.hom(w, unit_map_[v]).size() &&
             a_.hom(v, u).size() == b_.hom(unit_map_[v], w).size();
      if (ok) {
        unit_used_[w] = true;
        if (assign_unit(u + 1))
          return true;
        unit_used_[w] = false;
      }
      unit_map_[u] = kNone;
    }
    return false;
  }

  bool consistent(ArrowId g) const {
    for (ArrowId h = 0; h < a_.arrow_count(); ++h) {
      if (arrow_map_[h] == kNoArrow)
        continue;
      for (auto [x, y] : {std::pair{g, h}, std::pair{h, g}}) {
        const ArrowId k = a_.product(x, y);
        if (k == kNoArrow || arrow_map_[k] == kNoArrow)
          continue;
        if (b_.product(arrow_map_[x], arrow_map_[y]) != arrow_map_[k])
          return false;
      }
    }
    return true;
  }

  bool assign_arrow(std::size_t i) {
    if (i == order_.size())
      return full_check();
    const ArrowId g = order_[i];
    for (ArrowId c : b_.hom(unit_map_[a_.source(g)], unit_map_[a_.range(g)])) {
      if (arrow_used_[c])
        continue;
      arrow_map_[g] = c;
      arrow_used_[c] = true;
      if (consistent(g) && assign_arrow(i + 1))
        return true;
      arrow_used_[c] = false;
      arrow_map_[g] = kNoArrow;
    }
    return false;
  }

  bool full_check() const {
    for (ArrowId g = 0; g < a_.arrow_count(); ++g)
      for (ArrowId h = 0; h < a_.arrow_count(); ++h) {
        const ArrowId k = a_.product(g, h);
        const ArrowId k2 = b_.product(arrow_map_[g], arrow_map_[h]);
        if ((k == kNoArrow) != (k2 == kNoArrow))
          return false;
        if (k != kNoArrow && arrow_map_[k] != k2)
          return false;
      }
    return true;
  }

  const FiniteGroupoid& a_;
  const FiniteGroupoid& b_;
  std::vector<UnitId> unit_map_;
  std::vector<bool> unit_used_;
  std::vector<ArrowId> arrow_map_;
  std::vector<bool> arrow_used_;
  std::vector<ArrowId> order_;
};

} // namespace

bool groupoid_isomorphic(const FiniteGroupoid& a, const FiniteGroupoid& b, std::size_t arrow_cap) {
  if (a.arrow_count() > arrow_cap || b.arrow_count() > arrow_cap)
    throw SizeError("isomorphism search is limited to " + std::to_string(arrow_cap) + " arrows");
  if (a.unit_count() != b.unit_count() || a.arrow_count() != b.arrow_count())
    return false;
  return IsoSearch(a, b).run();
}

Bisection::Bisection(std::vector<ArrowId> a) : arrows(std::move(a)) {
  std::sort(arrows.begin(), arrows.end());
  arrows.erase(std::unique(arrows.begin(), arrows.end()), arrows.end());
}

bool Bisection::contains(ArrowId g) const { return std::binary_search(arrows.begin(), arrows.end(), g); }

bool is_bisection(const FiniteGroupoid& G, const Bisection& a) {
  std::vector<bool> src(G.unit_count(), false), rng(G.unit_count(), false);
  for (ArrowId g : a.arrows) {
    if (g >= G.arrow_count())
      throw PreconditionError("arrow index out of range");
    if (src[G.source(g)] || rng[G.range(g)])
      return false;
    src[G.source(g)] = rng[G.range(g)] = true;
  }
  return true;
}

Bisection multiply(const FiniteGroupoid& G, const Bisection& a, const Bisection& b) {
  std::vector<ArrowId> out;
  for (ArrowId g : a.arrows)
    for (ArrowId h : b.arrows)
      if (G.composable(g, h))
        out.push_back(G.product(g, h));
  return Bisection(std::move(out));
}

Bisection inverse(const FiniteGroupoid& G, const Bisection& a) {
  std::vector<ArrowId> out;
  for (ArrowId g : a.arrows)
    out.push_back(G.inverse(g));
  return Bisection(std::move(out));
}

Bisection unit_space(const FiniteGroupoid& G) {
  std::vector<ArrowId> out;
  for (UnitId u = 0; u < G.unit_count(); ++u)
    out.push_back(G.identity(u));
  return Bisection(std::move(out));
}

Bisection set_union(const Bisection& a, const Bisection& b) {
  std::vector<ArrowId> out;
  std::set_union(a.arrows.begin(), a.arrows.end(), b.arrows.begin(), b.arrows.end(), std::back_inserter(out));
  return Bisection(std::move(out));
}

Bisection set_intersection(const Bisection& a, const Bisection& b) {
  std::vector<ArrowId> out;
  std::set_intersection(a.arrows.begin(), a.arrows.end(), b.arrows.begin(), b.arrows.end(),
                        std::back_inserter(out));
  return Bisection(std::move(out));
}

Bisection set_difference(const Bisection& a, const Bisection& b) {
  std::vector<ArrowId> out;
  std::set_difference(a.arrows.begin(), a.arrows.end(), b.arrows.begin(), b.arrows.end(), std::back_inserter(out));
  return Bisection(std::move(out));
}

std::vector<Bisection> all_bisections(const FiniteGroupoid& G, std::size_t unit_cap) {
  if (G.unit_count() > unit_cap)
    throw SizeError("bisection enumeration is limited to " + std::to_string(unit_cap) + " units");
  std::vector<std::vector<ArrowId>> by_source(G.unit_count());
  for (ArrowId g = 0; g < G.arrow_count(); ++g)
    by_source[G.source(g)].push_back(g);

  std::vector<Bisection> out;
  std::vector<ArrowId> chosen;
  std::vector<bool> range_used(G.unit_count(), false);
  auto rec = [&](auto&& self, UnitId u) -> void {
    if (u == G.unit_count()) {
      out.emplace_back(chosen);
      return;
    }
    self(self, u + 1);
    for (ArrowId g : by_source[u]) {
      if (range_used[G.range(g)])
        continue;
      range_used[G.range(g)] = true;
      chosen.push_back(g);
      self(self, u + 1);
      chosen.pop_back();
      range_used[G.range(g)] = false;
    }
  };
  rec(rec, 0);
  return out;
}

std::optional<Element> BisectionMonoid::index_of(const Bisection& a) const {
  auto it = std::find(bisections.begin(), bisections.end(), a);
  if (it == bisections.end())
    return std::nullopt;
  return static_cast<Element>(it - bisections.begin());
}

namespace {

std::string bisection_name(const Bisection& a) {
  std::string out = "[";
  for (std::size_t i = 0; i < a.arrows.size(); ++i)
    out += (i ? "," : "") + std::to_string(a.arrows[i]);
  return out + "]";
}

} // namespace

BisectionMonoid bisection_monoid(const FiniteGroupoid& G, std::size_t unit_cap, std::size_t element_cap) {
  auto list = all_bisections(G, unit_cap);
  if (list.size() > element_cap)
    throw SizeError("groupoid has " + std::to_string(list.size()) + " bisections, cap is " +
                    std::to_string(element_cap));
  std::map<Bisection, Element> index;
  for (std::size_t i = 0; i < list.size(); ++i)
    index.emplace(list[i], static_cast<Element>(i));
  auto lookup = [&](const Bisection& a) {
    auto it = index.find(a);
    if (it == index.end())
      throw StructureError("product " + bisection_name(a) + " is not a bisection");
    return it->second;
  };

  const std::size_t n = list.size();
  std::vector<std::string> names;
  for (const auto& a : list)
    names.push_back(bisection_name(a));
  std::vector<std::vector<Element>> table(n, std::vector<Element>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      table[i][j] = lookup(multiply(G, list[i], list[j]));
  const Element zero = lookup(Bisection{});
  const Element one = lookup(unit_space(G));
  FiniteInverseMonoid m(std::move(names), table, zero, one, element_cap);
  return BisectionMonoid{std::move(list), std::move(m)};
}

} // namespace germkit
