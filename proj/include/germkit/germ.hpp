#ifndef GERMKIT_GERM_HPP
#define GERMKIT_GERM_HPP

#include <compare>
#include <cstddef>
#include <memory>
#include <vector>

#include "germkit/groupoid.hpp"
#include "germkit/inverse_monoid.hpp"
#include "germkit/report.hpp"
#include "germkit/stone.hpp"

// The germ groupoid G(S) of a finite Boolean inverse monoid S.
//
// A pair (φ, x) with x(φ^-1 φ) = 1 is a germ representative. Two
// representatives (φ, x) and (ψ, y) are equivalent when x = y and some
// idempotent p with x(p) = 1 satisfies φp = ψp. At finite scale x is the
// character of an atom a, every such p lies above a, so the relation holds
// exactly when φa = ψa. The class of (φ, x) is therefore keyed by
// (x, φ·a); φ·a is itself a representative of the class.
//
// The source of [φ, x] is the unit [1, x] and its range is [1, α_φ(x)] where
// α_φ(x)(p) = x(φ^-1 p φ). [φ, x]·[ψ, y] is defined when x = α_ψ(y) and
// equals [φψ, y].
//
// Finite character spaces are discrete, so every arrow set is open and
// compact; bisections are simply arrow sets on which source and range are
// injective.

namespace germkit {

/// Canonical key of a germ class: character index and the representative φ·a.
struct GermKey {
  std::size_t character = 0;
  Element representative = kNoElement;

  auto operator<=>(const GermKey&) const = default;
};

class GermGroupoid {
public:
  /// Builds G(S) and checks the groupoid axioms; StructureError with a witness
  /// if any axiom fails.
  static GermGroupoid build(std::shared_ptr<const BooleanInverseMonoid> s,
                            std::size_t oracle_limit = kDefaultCharacterOracleLimit);

  const BooleanInverseMonoid& monoid() const { return *s_; }
  std::shared_ptr<const BooleanInverseMonoid> shared_monoid() const { return s_; }
  const CharacterSpace& characters() const { return chars_; }
  const FiniteGroupoid& groupoid() const { return groupoid_; }
  const std::vector<GermKey>& germs() const { return keys_; }

  /// Ê(S)_φ = {x : x(φ^-1 φ) = 1}.
  CharacterSet char_support(Element phi) const;
  bool in_support(Element phi, std::size_t x) const;

  /// α_φ(x). PreconditionError unless x ∈ Ê(S)_φ.
  std::size_t alpha(Element phi, std::size_t x) const;

  /// Canonical key of [φ, x]; PreconditionError unless x ∈ Ê(S)_φ.
  GermKey key(Element phi, std::size_t x) const;
  /// Arrow id of [φ, x].
  ArrowId germ(Element phi, std::size_t x) const;
  /// Arrow with the given key, or kNoArrow.
  ArrowId find(const GermKey& k) const;

  /// Literal relation: x = y and some idempotent p has x(p) = 1 and φp = ψp.
  bool germ_equivalent(Element phi, std::size_t x, Element psi, std::size_t y) const;
  /// Shortcut: x = y and φa = ψa for the atom a of x.
  bool germ_equivalent_canonical(Element phi, std::size_t x, Element psi, std::size_t y) const;

  /// All φ with (φ, x) ∈ g, x the source character of g.
  std::vector<Element> representatives(ArrowId g) const;

  /// [φ, x]·[ψ, y] = [φψ, y], evaluated on the canonical representatives.
  /// ComposabilityError unless x = α_ψ(y).
  ArrowId compose_germs(ArrowId g, ArrowId h) const;
  /// [φ^-1, α_φ(x)].
  ArrowId inverse_germ(ArrowId g) const;

  /// U_φ = {[φ, x] : x ∈ Ê(S)_φ}.
  Bisection basic_bisection(Element phi) const;

  /// Name of the canonical representative of g.
  const std::string& arrow_name(ArrowId g) const { return groupoid_.label(g); }

private:
  GermGroupoid(std::shared_ptr<const BooleanInverseMonoid> s, CharacterSpace chars);

  void require_element(Element phi) const;
  void require_character(std::size_t x) const;

  std::shared_ptr<const BooleanInverseMonoid> s_;
  CharacterSpace chars_;
  std::vector<std::size_t> alpha_; // element × character, kNoCharacter outside the support
  std::vector<GermKey> keys_;
  FiniteGroupoid groupoid_;
};

/// ε(φ) = U_φ for every element, indexed by element.
std::vector<Bisection> epsilon(const GermGroupoid& g);

/// The orthogonalization fold: starting from 0, each arrow w of W contributes
/// χ = r ∖ (r ∧ ψ) with r the canonical representative of w, and ψ becomes
/// ψ ∨ χ. Returns ψ with U_ψ = W; StructureError if a step is not orthogonal
/// or the result misses W.
Element realize_bisection(const GermGroupoid& g, const Bisection& w);

/// Lemma checks on U_φ: inclusion under ≤, intersections as meets, orthogonal
/// unions as joins, differences as relative complements, and U_{φp}.
Report verify_intersection_lemma(const GermGroupoid& g);

/// Basis, bisection, source-homeomorphism and unit-space checks, plus the
/// groupoid axioms.
Report verify_ample_structure(const GermGroupoid& g);

/// Representative independence of germ multiplication, agreement of the
/// literal and canonical germ relations, α_{φ^-1}∘α_φ = id, U_{φ^-1} = U_φ^-1.
Report verify_germ_properties(const GermGroupoid& g);

/// ε: S → Γ_c(G(S)) is a homomorphism, injective, surjective, preserves
/// inverses, and the orthogonalization used for surjectivity works.
Report verify_epsilon_isomorphism(const GermGroupoid& g,
                                  std::size_t unit_cap = kDefaultUnitCap,
                                  std::size_t element_cap = kDefaultElementCap);
Report verify_epsilon_isomorphism(std::shared_ptr<const BooleanInverseMonoid> s,
                                  std::size_t unit_cap = kDefaultUnitCap,
                                  std::size_t element_cap = kDefaultElementCap);

/// The bisection monoid of G(S), built from arrow sets alone, checked against
/// the Boolean inverse monoid axioms.
Report verify_bisection_monoid(const GermGroupoid& g,
                               std::size_t unit_cap = kDefaultUnitCap,
                               std::size_t element_cap = kDefaultElementCap);

} // namespace germkit

#endif // GERMKIT_GERM_HPP
