#ifndef GERMKIT_COARSE_HPP
#define GERMKIT_COARSE_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "germkit/germ.hpp"
#include "germkit/groupoid.hpp"
#include "germkit/partial_bijection.hpp"
#include "germkit/report.hpp"

// Finite coarse spaces and their partial translations.
//
// A finite coarse space is given by a symmetric reflexive generating relation
// R. Every finite space is uniformly locally finite. The largest entourage of
// the coarse structure generated by R is the union of all powers of R, i.e.
// the "same connected component" relation of the graph (X, R). At finite
// scale the Stone-Cech compactification of X is X itself, so the character
// space of E(T_E) is just the point set.

namespace germkit {

/// Square boolean matrix; rel[i][j] says (i, j) is in the relation.
using Relation = std::vector<std::vector<bool>>;

class CoarseSpace {
public:
  /// Edges are symmetrized and the diagonal is added. InputError on out-of-range points.
  CoarseSpace(PointSet points, const std::vector<std::pair<int, int>>& edges);
  /// R = {(x, y) : d(x, y) <= radius} together with the diagonal.
  static CoarseSpace from_metric(const std::vector<std::vector<double>>& dist, double radius);

  std::size_t size() const { return points_.size; }
  PointSet points() const { return points_; }
  const Relation& generator() const { return generator_; }

private:
  PointSet points_;
  Relation generator_;
};

/// Reflexive-symmetric-transitive closure of the generator.
Relation closure_entourage(const CoarseSpace& c);

/// T_E: all partial bijections whose graph lies inside closure_entourage(c).
ConcreteInverseMonoid partial_translations(const CoarseSpace& c,
                                           std::size_t point_cap = kDefaultPointCap,
                                           std::size_t element_cap = kDefaultElementCap);

/// G(T_E), checked isomorphic to the groupoid of closure_entourage(c);
/// StructureError otherwise.
GermGroupoid coarse_groupoid(const CoarseSpace& c,
                             std::size_t point_cap = kDefaultPointCap,
                             std::size_t element_cap = kDefaultElementCap);

/// E(T_E) = {id_Y : Y ⊆ X}, |E(T_E)| = 2^|X| and exactly |X| characters.
Report verify_translation_idempotents(const CoarseSpace& c, std::size_t point_cap = kDefaultPointCap);

/// Every coarse space on n points: one per symmetric subset of off-diagonal pairs.
std::vector<CoarseSpace> all_coarse_spaces(PointSet x);

} // namespace germkit

#endif // GERMKIT_COARSE_HPP
