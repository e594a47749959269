#ifndef GERMKIT_STONE_HPP
#define GERMKIT_STONE_HPP

#include <cstddef>
#include <memory>
#include <vector>

#include "germkit/inverse_monoid.hpp"
#include "germkit/report.hpp"

// Finite Stone duality for the idempotent algebra E(S).
//
// A finite Boolean algebra is atomic and its characters correspond one to one
// with its atoms: the character of atom a sends p to 1 exactly when a <= p,
// i.e. when a·p = a. The character space of a finite algebra is a finite
// discrete space, so every subset is open and the basic open sets
// {x : x(e) = 1} are plain character sets here.

namespace germkit {

/// Default bound on |E(S)| under which characters() cross-checks the atom
/// construction against all {0,1}-valued maps on E(S).
inline constexpr std::size_t kDefaultCharacterOracleLimit = 16;

/// Sorted indices into a character list.
using CharacterSet = std::vector<std::size_t>;

/// A character, stored by its defining atom.
struct Character {
  std::size_t index = 0;
  Element atom = kNoElement;

  friend bool operator==(const Character&, const Character&) = default;
};

/// E(S) viewed as a Boolean algebra: meet is the product, the join of p and q
/// is p ∨ (q ∖ (p∧q)), the complement of p is 1 ∖ p.
class BooleanAlgebraView {
public:
  explicit BooleanAlgebraView(std::shared_ptr<const BooleanInverseMonoid> s);

  const BooleanInverseMonoid& monoid() const { return *s_; }
  std::shared_ptr<const BooleanInverseMonoid> shared_monoid() const { return s_; }

  const std::vector<Element>& carrier() const { return s_->monoid().idempotents(); }
  bool contains(Element p) const { return p < s_->size() && s_->monoid().is_idempotent(p); }

  Element bottom() const { return s_->monoid().zero(); }
  Element top() const { return s_->monoid().one(); }
  Element meet(Element p, Element q) const;
  Element join(Element p, Element q) const;
  Element complement(Element p) const;
  bool leq(Element p, Element q) const { return meet(p, q) == p; }

  /// Bounded distributive lattice and complement laws, exhaustively.
  Report validate() const;

private:
  void require(Element p) const;

  std::shared_ptr<const BooleanInverseMonoid> s_;
};

/// Minimal nonzero idempotents in index order. StructureError if their join is not 1.
std::vector<Element> atoms(const BooleanAlgebraView& b);

/// One character per atom. When |E(S)| <= oracle_limit the result is compared
/// against a brute-force search over every {0,1}-valued map on E(S) that
/// respects 0, 1, meets and joins; StructureError on mismatch.
std::vector<Character> characters(const BooleanAlgebraView& b,
                                  std::size_t oracle_limit = kDefaultCharacterOracleLimit);

/// x(p): 1 iff atom(x)·p = atom(x). PreconditionError if p is not idempotent.
bool evaluate(const BooleanAlgebraView& b, const Character& x, Element p);

/// {x : x(e) = 1}, as indices into `xs`.
CharacterSet basic_open(const BooleanAlgebraView& b, const std::vector<Character>& xs, Element e);

/// The algebra together with its characters.
class CharacterSpace {
public:
  explicit CharacterSpace(BooleanAlgebraView b, std::size_t oracle_limit = kDefaultCharacterOracleLimit);

  const BooleanAlgebraView& algebra() const { return algebra_; }
  const std::vector<Character>& characters() const { return chars_; }
  std::size_t size() const { return chars_.size(); }
  const Character& operator[](std::size_t i) const { return chars_.at(i); }

  bool evaluate(std::size_t x, Element p) const { return germkit::evaluate(algebra_, chars_.at(x), p); }
  CharacterSet basic_open(Element e) const { return germkit::basic_open(algebra_, chars_, e); }
  CharacterSet all() const;
  /// Index of the character defined by atom `a`; PreconditionError if `a` is not an atom.
  std::size_t index_of_atom(Element a) const;

private:
  BooleanAlgebraView algebra_;
  std::vector<Character> chars_;
  static constexpr std::size_t kNotAnAtom = static_cast<std::size_t>(-1);
  std::vector<std::size_t> by_atom_;
};

/// Stone-duality checks on a character space: the algebra laws, |E| = 2^#atoms,
/// basic opens turn meets and complements into intersections and set
/// complements, and e <= f iff basic_open(e) is contained in basic_open(f).
Report verify_character_space(const CharacterSpace& space);

} // namespace germkit

#endif // GERMKIT_STONE_HPP
