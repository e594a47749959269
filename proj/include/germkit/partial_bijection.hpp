#ifndef GERMKIT_PARTIAL_BIJECTION_HPP
#define GERMKIT_PARTIAL_BIJECTION_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "germkit/inverse_monoid.hpp"

namespace germkit {

/// Default cap on the number of points of I(X).
inline constexpr std::size_t kDefaultPointCap = 5;

/// A finite point set {0, ..., size-1}.
struct PointSet {
  std::size_t size = 1;

  explicit PointSet(std::size_t n);
};

/// An injective partial map on a PointSet.
///
/// Stored as an image vector with -1 for points outside the domain. The
/// canonical order compares the domain bitmask first, then the images of the
/// domain points in increasing point order.
class PartialBijection {
public:
  explicit PartialBijection(PointSet ambient);
  /// Throws InputError unless the pairs define an injective map into the point set.
  PartialBijection(PointSet ambient, const std::vector<std::pair<int, int>>& graph);

  static PartialBijection identity(PointSet ambient);
  /// id_Y for Y given as a bitmask.
  static PartialBijection identity_on(PointSet ambient, std::uint32_t domain_mask);

  std::size_t points() const { return image_.size(); }
  std::optional<int> operator()(int x) const;
  bool defined_at(int x) const { return image_.at(std::size_t(x)) >= 0; }

  std::uint32_t domain_mask() const;
  std::uint32_t image_mask() const;
  std::vector<std::pair<int, int>> graph() const;

  /// (f ∘ g)(x) = f(g(x)), defined where both steps are.
  PartialBijection after(const PartialBijection& g) const;
  /// Graph reversal.
  PartialBijection inverse() const;

  /// "{0->1,2->0}", "{}" for the empty map.
  std::string name() const;

  std::strong_ordering operator<=>(const PartialBijection& other) const;
  bool operator==(const PartialBijection& other) const { return image_ == other.image_; }

private:
  std::vector<int> image_;
};

/// All partial bijections on the point set, in canonical order.
std::vector<PartialBijection> enumerate_partial_bijections(PointSet x);

/// An inverse monoid realized by partial bijections: the abstract table
/// together with the map behind each element index.
struct ConcreteInverseMonoid {
  PointSet points;
  std::vector<PartialBijection> maps;
  FiniteInverseMonoid monoid;

  std::optional<Element> index_of(const PartialBijection& f) const;
};

/// Builds the abstract monoid of a set of partial bijections closed under
/// composition and inverse and containing the empty map and the identity.
/// Elements are sorted canonically first. Throws StructureError if not closed.
ConcreteInverseMonoid monoid_of_partial_bijections(PointSet x,
                                                   std::vector<PartialBijection> maps,
                                                   std::size_t element_cap = kDefaultElementCap);

/// I(X). SizeError if x.size exceeds `point_cap`.
ConcreteInverseMonoid symmetric_inverse_monoid(PointSet x, std::size_t point_cap = kDefaultPointCap);

} // namespace germkit

#endif // GERMKIT_PARTIAL_BIJECTION_HPP
