#include "germkit/partial_bijection.hpp"

#include <algorithm>
#include <map>

#include "germkit/error.hpp"

namespace germkit {

PointSet::PointSet(std::size_t n) : size(n) {
  if (n < 1)
    throw InputError("point set must have at least one point");
  if (n > 31)
    throw SizeError("point sets are limited to 31 points");
}

PartialBijection::PartialBijection(PointSet ambient) : image_(ambient.size, -1) {}

PartialBijection::PartialBijection(PointSet ambient, const std::vector<std::pair<int, int>>& graph)
    : image_(ambient.size, -1) {
  const int n = static_cast<int>(ambient.size);
  std::vector<bool> hit(ambient.size, false);
  for (auto [x, y] : graph) {
    if (x < 0 || x >= n || y < 0 || y >= n)
      throw InputError("partial bijection point out of range");
    if (image_[x] >= 0 || hit[y])
      throw InputError("graph is not an injective partial map");
    image_[x] = y;
    hit[y] = true;
  }
}

PartialBijection PartialBijection::identity(PointSet ambient) {
  return identity_on(ambient, (std::uint32_t{1} << ambient.size) - 1);
}

PartialBijection PartialBijection::identity_on(PointSet ambient, std::uint32_t domain_mask) {
  PartialBijection f(ambient);
  for (std::size_t i = 0; i < ambient.size; ++i)
    if (domain_mask & (std::uint32_t{1} << i))
      f.image_[i] = static_cast<int>(i);
  return f;
}

std::optional<int> PartialBijection::operator()(int x) const {
  const int y = image_.at(std::size_t(x));
  if (y < 0)
    return std::nullopt;
  return y;
}

std::uint32_t PartialBijection::domain_mask() const {
  std::uint32_t m = 0;
  for (std::size_t i = 0; i < image_.size(); ++i)
    if (image_[i] >= 0)
      m |= std::uint32_t{1} << i;
  return m;
}

std::uint32_t PartialBijection::image_mask() const {
  std::uint32_t m = 0;
  for (int y : image_)
    if (y >= 0)
      m |= std::uint32_t{1} << y;
  return m;
}

std::vector<std::pair<int, int>> PartialBijection::graph() const {
  std::vector<std::pair<int, int>> g;
  for (std::size_t i = 0; i < image_.size(); ++i)
    if (image_[i] >= 0)
      g.emplace_back(static_cast<int>(i), image_[i]);
  return g;
}

PartialBijection PartialBijection::after(const PartialBijection& g) const {
  if (g.points() != points())
    throw PreconditionError("composing partial bijections on different point sets");
  PartialBijection h{PointSet(points())};
  for (std::size_t i = 0; i < image_.size(); ++i) {
    const int mid = g.image_[i];
    if (mid >= 0)
      h.image_[i] = image_[std::size_t(mid)];
  }
  return h;
}

PartialBijection PartialBijection::inverse() const {
  PartialBijection h{PointSet(points())};
  for (std::size_t i = 0; i < image_.size(); ++i)
    if (image_[i] >= 0)
      h.image_[std::size_t(image_[i])] = static_cast<int>(i);
  return h;
}

std::string PartialBijection::name() const {
  std::string out = "{";
  bool first = true;
  for (auto [x, y] : graph()) {
    if (!first)
      out += ",";
    out += std::to_string(x) + "->" + std::to_string(y);
    first = false;
  }
  return out + "}";
}

std::strong_ordering PartialBijection::operator<=>(const PartialBijection& other) const {
  if (auto c = points() <=> other.points(); c != 0)
    return c;
  if (auto c = domain_mask() <=> other.domain_mask(); c != 0)
    return c;
  for (std::size_t i = 0; i < image_.size(); ++i)
    if (auto c = image_[i] <=> other.image_[i]; c != 0)
      return c;
  return std::strong_ordering::equal;
}

std::vector<PartialBijection> enumerate_partial_bijections(PointSet x) {
  const std::size_t n = x.size;
  std::vector<PartialBijection> out;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
    std::vector<int> dom;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (std::uint32_t{1} << i))
        dom.push_back(static_cast<int>(i));
    // Injective assignments of images to `dom`, lexicographic in the image tuple.
    std::vector<std::pair<int, int>> graph;
    std::vector<bool> used(n, false);
    auto rec = [&](auto&& self, std::size_t k) -> void {
      if (k == dom.size()) {
        out.emplace_back(x, graph);
        return;
      }
      for (std::size_t y = 0; y < n; ++y) {
        if (used[y])
          continue;
        used[y] = true;
        graph.emplace_back(dom[k], static_cast<int>(y));
        self(self, k + 1);
        graph.pop_back();
        used[y] = false;
      }
    };
    rec(rec, 0);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<Element> ConcreteInverseMonoid::index_of(const PartialBijection& f) const {
  auto it = std::lower_bound(maps.begin(), maps.end(), f);
  if (it == maps.end() || !(*it == f))
    return std::nullopt;
  return static_cast<Element>(it - maps.begin());
}

namespace {

FiniteInverseMonoid table_of(PointSet x, const std::vector<PartialBijection>& maps, std::size_t cap) {
  const std::size_t n = maps.size();
  if (n > cap)
    throw SizeError("monoid would have " + std::to_string(n) + " elements, cap is " + std::to_string(cap));
  auto lookup = [&](const PartialBijection& f) -> Element {
    auto it = std::lower_bound(maps.begin(), maps.end(), f);
    if (it == maps.end() || !(*it == f))
      throw StructureError("set of partial bijections is not closed: missing " + f.name());
    return static_cast<Element>(it - maps.begin());
  };
  std::vector<std::string> names;
  names.reserve(n);
  for (const auto& f : maps)
    names.push_back(f.name());
  // Product a·b is "a after b", so φψ acts by ψ first.
  std::vector<std::vector<Element>> table(n, std::vector<Element>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      table[i][j] = lookup(maps[i].after(maps[j]));
  return FiniteInverseMonoid(std::move(names), table, lookup(PartialBijection(x)),
                             lookup(PartialBijection::identity(x)), cap);
}

} // namespace

ConcreteInverseMonoid monoid_of_partial_bijections(PointSet x, std::vector<PartialBijection> maps, std::size_t cap) {
  std::sort(maps.begin(), maps.end());
  maps.erase(std::unique(maps.begin(), maps.end()), maps.end());
  for (const auto& f : maps)
    if (f.points() != x.size)
      throw InputError("partial bijection on the wrong point set");
  FiniteInverseMonoid m = table_of(x, maps, cap);
  return ConcreteInverseMonoid{x, std::move(maps), std::move(m)};
}

ConcreteInverseMonoid symmetric_inverse_monoid(PointSet x, std::size_t point_cap) {
  if (x.size > point_cap)
    throw SizeError("I(X) requested on " + std::to_string(x.size) + " points, cap is " + std::to_string(point_cap));
  return monoid_of_partial_bijections(x, enumerate_partial_bijections(x), kDefaultElementCap);
}

} // namespace germkit
