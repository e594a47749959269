#ifndef GERMKIT_GROUPOID_HPP
#define GERMKIT_GROUPOID_HPP

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "germkit/inverse_monoid.hpp"
#include "germkit/report.hpp"

namespace germkit {

using ArrowId = std::size_t;
using UnitId = std::size_t;

inline constexpr ArrowId kNoArrow = static_cast<ArrowId>(-1);

/// Default cap on the unit count for bisection enumeration.
inline constexpr std::size_t kDefaultUnitCap = 6;
/// Default cap on the arrow count for the isomorphism search.
inline constexpr std::size_t kDefaultIsoArrowCap = 64;

struct ArrowSpec {
  UnitId source = 0;
  UnitId range = 0;
  std::string label;
};

/// A finite groupoid given by explicit tables.
///
/// g·h is defined iff source(g) == range(h); then source(g·h) = source(h) and
/// range(g·h) = range(g). The product table stores kNoArrow for
/// non-composable pairs. Only table shapes are checked on construction; the
/// algebraic laws are checked by verify_groupoid_axioms.
class FiniteGroupoid {
public:
  FiniteGroupoid() = default;
  FiniteGroupoid(std::vector<std::string> unit_labels,
                 std::vector<ArrowSpec> arrows,
                 std::vector<ArrowId> identities,
                 std::vector<ArrowId> products,
                 std::vector<ArrowId> inverses);

  std::size_t unit_count() const { return unit_labels_.size(); }
  std::size_t arrow_count() const { return arrows_.size(); }

  UnitId source(ArrowId g) const { return arrows_.at(g).source; }
  UnitId range(ArrowId g) const { return arrows_.at(g).range; }
  const std::string& label(ArrowId g) const { return arrows_.at(g).label; }
  const std::string& unit_label(UnitId u) const { return unit_labels_.at(u); }
  ArrowId identity(UnitId u) const { return identities_.at(u); }
  bool is_identity(ArrowId g) const { return identities_.at(source(g)) == g; }

  bool composable(ArrowId g, ArrowId h) const { return source(g) == range(h); }
  /// g·h, or kNoArrow when not composable.
  ArrowId product(ArrowId g, ArrowId h) const { return products_[g * arrow_count() + h]; }
  /// g·h; ComposabilityError when not composable.
  ArrowId compose(ArrowId g, ArrowId h) const;
  ArrowId inverse(ArrowId g) const { return inverses_.at(g); }

  /// Arrows u -> v (source u, range v), in id order.
  std::vector<ArrowId> hom(UnitId u, UnitId v) const;

private:
  std::vector<std::string> unit_labels_;
  std::vector<ArrowSpec> arrows_;
  std::vector<ArrowId> identities_;
  std::vector<ArrowId> products_;
  std::vector<ArrowId> inverses_;
};

/// Identity, composability, associativity and inverse laws, exhaustively.
Report verify_groupoid_axioms(const FiniteGroupoid& g);

/// Pair groupoid on n points: one arrow s -> r for every ordered pair.
FiniteGroupoid pair_groupoid(std::size_t n);

/// Groupoid of an equivalence relation given as a square boolean matrix;
/// arrow s -> r exists iff related[r][s]. InputError if not an equivalence.
FiniteGroupoid equivalence_groupoid(const std::vector<std::vector<bool>>& related);

/// Backtracking search for a unit bijection plus arrow bijection preserving
/// source, range and composition. SizeError beyond `arrow_cap` arrows.
bool groupoid_isomorphic(const FiniteGroupoid& a,
                         const FiniteGroupoid& b,
                         std::size_t arrow_cap = kDefaultIsoArrowCap);

/// An arrow set, kept sorted.
struct Bisection {
  std::vector<ArrowId> arrows;

  Bisection() = default;
  explicit Bisection(std::vector<ArrowId> a);

  bool empty() const { return arrows.empty(); }
  std::size_t size() const { return arrows.size(); }
  bool contains(ArrowId g) const;

  auto operator<=>(const Bisection&) const = default;
};

/// Source and range are both injective on the set.
bool is_bisection(const FiniteGroupoid& g, const Bisection& a);

/// {g·h : g ∈ a, h ∈ b composable}.
Bisection multiply(const FiniteGroupoid& g, const Bisection& a, const Bisection& b);
/// {g^-1 : g ∈ a}.
Bisection inverse(const FiniteGroupoid& g, const Bisection& a);
Bisection unit_space(const FiniteGroupoid& g);

Bisection set_union(const Bisection& a, const Bisection& b);
Bisection set_intersection(const Bisection& a, const Bisection& b);
Bisection set_difference(const Bisection& a, const Bisection& b);

/// Every bisection, enumerated by choosing at most one arrow out of each
/// source unit in unit order and pruning on range collisions. The empty
/// choice comes before arrows, arrows in id order.
std::vector<Bisection> all_bisections(const FiniteGroupoid& g, std::size_t unit_cap = kDefaultUnitCap);

/// The bisections of a groupoid as an abstract inverse monoid under setwise
/// product, with zero the empty set and identity the unit space.
struct BisectionMonoid {
  std::vector<Bisection> bisections;
  FiniteInverseMonoid monoid;

  std::optional<Element> index_of(const Bisection& a) const;
};

BisectionMonoid bisection_monoid(const FiniteGroupoid& g,
                                 std::size_t unit_cap = kDefaultUnitCap,
                                 std::size_t element_cap = kDefaultElementCap);

} // namespace germkit

#endif // GERMKIT_GROUPOID_HPP
