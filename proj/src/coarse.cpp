#include "germkit/coarse.hpp"

#include <algorithm>
#include <cmath>

#include "germkit/error.hpp"

namespace germkit {

CoarseSpace::CoarseSpace(PointSet points, const std::vector<std::pair<int, int>>& edges)
    : points_(points), generator_(points.size, std::vector<bool>(points.size, false)) {
  const int n = static_cast<int>(points.size);
  for (int i = 0; i < n; ++i)
    generator_[i][i] = true;
  for (auto [i, j] : edges) {
    if (i < 0 || j < 0 || i >= n || j >= n)
      throw InputError("edge (" + std::to_string(i) + ", " + std::to_string(j) + ") out of range");
    generator_[i][j] = generator_[j][i] = true;
  }
}

CoarseSpace CoarseSpace::from_metric(const std::vector<std::vector<double>>& dist, double radius) {
  const std::size_t n = dist.size();
  std::vector<std::pair<int, int>> edges;
  for (const auto& row : dist)
    if (row.size() != n)
      throw InputError("distance table is not square");
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!std::isfinite(dist[i][j]) || dist[i][j] < 0)
        throw InputError("distances must be finite and non-negative");
      if (dist[i][j] != dist[j][i] || (i == j && dist[i][j] != 0))
        throw InputError("distance table is not symmetric with zero diagonal");
      if (dist[i][j] <= radius)
        edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
    }
  }
  return CoarseSpace(PointSet(n), edges);
}

Relation closure_entourage(const CoarseSpace& c) {
  Relation r = c.generator();
  const std::size_t n = r.size();
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (r[i][k])
        for (std::size_t j = 0; j < n; ++j)
          if (r[k][j])
            r[i][j] = true;
  return r;
}

ConcreteInverseMonoid partial_translations(const CoarseSpace& c, std::size_t point_cap, std::size_t element_cap) {
  if (c.size() > point_cap)
    throw SizeError("coarse space has " + std::to_string(c.size()) + " points, cap is " + std::to_string(point_cap));
  const Relation e = closure_entourage(c);
  std::vector<PartialBijection> maps;
  for (auto& f : enumerate_partial_bijections(c.points())) {
    const auto graph = f.graph();
    if (std::all_of(graph.begin(), graph.end(), [&](auto xy) { return e[xy.first][xy.second]; }))
      maps.push_back(std::move(f));
  }
  return monoid_of_partial_bijections(c.points(), std::move(maps), element_cap);
}

GermGroupoid coarse_groupoid(const CoarseSpace& c, std::size_t point_cap, std::size_t element_cap) {
  auto t = partial_translations(c, point_cap, element_cap);
  auto s = std::make_shared<const BooleanInverseMonoid>(std::move(t.monoid));
  GermGroupoid g = GermGroupoid::build(s);
  if (!groupoid_isomorphic(g.groupoid(), equivalence_groupoid(closure_entourage(c))))
    throw StructureError("G(T_E) is not isomorphic to the groupoid of the closure entourage");
  return g;
}

Report verify_translation_idempotents(const CoarseSpace& c, std::size_t point_cap) {
  Report report("partial translation idempotents");
  const auto t = partial_translations(c, point_cap);
  const std::size_t n = c.size();

  CheckBuilder ids("E(T_E) = {id_Y : Y subset of X}");
  std::vector<Element> expected;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
    const auto idx = t.index_of(PartialBijection::identity_on(c.points(), mask));
    ids.expect(idx.has_value(), [&] { return PartialBijection::identity_on(c.points(), mask).name() + " missing"; });
    if (idx)
      expected.push_back(*idx);
  }
  std::sort(expected.begin(), expected.end());
  ids.expect(expected == t.monoid.idempotents(), [] { return std::string("idempotent sets differ"); });
  ids.set_detail(std::to_string(t.monoid.idempotents().size()) + " idempotents");
  report.add(std::move(ids).finish());

  CheckBuilder chars("character space has |X| points");
  auto s = std::make_shared<const BooleanInverseMonoid>(t.monoid);
  const CharacterSpace space{BooleanAlgebraView(s)};
  chars.expect(space.size() == n, [&] { return std::to_string(space.size()) + " characters"; });
  for (const auto& x : space.characters()) {
    const auto& f = t.maps[x.atom];
    chars.expect(f.graph().size() == 1 && f.graph().front().first == f.graph().front().second,
                 [&] { return "atom " + f.name() + " is not id of a point"; });
  }
  chars.set_detail(std::to_string(space.size()) + " characters");
  report.add(std::move(chars).finish());
  return report;
}

std::vector<CoarseSpace> all_coarse_spaces(PointSet x) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < static_cast<int>(x.size); ++i)
    for (int j = i + 1; j < static_cast<int>(x.size); ++j)
      pairs.emplace_back(i, j);
  if (pairs.size() > 20)
    throw SizeError("too many coarse spaces to enumerate");
  std::vector<CoarseSpace> out;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << pairs.size()); ++mask) {
    std::vector<std::pair<int, int>> edges;
    for (std::size_t k = 0; k < pairs.size(); ++k)
      if (mask & (std::uint32_t{1} << k))
        edges.push_back(pairs[k]);
    out.emplace_back(x, edges);
  }
  return out;
}

} // namespace germkit
