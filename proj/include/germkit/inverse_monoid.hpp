#ifndef GERMKIT_INVERSE_MONOID_HPP
#define GERMKIT_INVERSE_MONOID_HPP

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "germkit/report.hpp"

namespace germkit {

/// Index of an element inside a FiniteInverseMonoid.
using Element = std::uint32_t;

inline constexpr Element kNoElement = std::numeric_limits<Element>::max();

/// Default cap on the number of elements a monoid may have.
inline constexpr std::size_t kDefaultElementCap = 2000;

/// A finite inverse monoid with zero, given by its full multiplication table.
///
/// Construction validates exhaustively: associativity, that `zero` absorbs and
/// `one` is a two-sided identity, that 0 != 1, and that every element has
/// exactly one generalized inverse. After construction every accessor is total
/// on valid indices and the object is immutable.
class FiniteInverseMonoid {
public:
  FiniteInverseMonoid(std::vector<std::string> names,
                      const std::vector<std::vector<Element>>& table,
                      Element zero,
                      Element one,
                      std::size_t element_cap = kDefaultElementCap);

  std::size_t size() const { return names_.size(); }
  Element zero() const { return zero_; }
  Element one() const { return one_; }

  const std::string& name(Element a) const { return names_.at(a); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<Element> find(std::string_view name) const;

  Element multiply(Element a, Element b) const { return table_[std::size_t(a) * size() + b]; }
  Element multiply(Element a, Element b, Element c) const { return multiply(multiply(a, b), c); }
  Element inverse(Element a) const { return inverse_[a]; }

  bool is_idempotent(Element a) const { return multiply(a, a) == a; }
  /// Idempotents in increasing index order.
  const std::vector<Element>& idempotents() const { return idempotents_; }

  /// Row-major table as nested vectors (for serialization).
  std::vector<std::vector<Element>> table() const;

  friend bool operator==(const FiniteInverseMonoid& a, const FiniteInverseMonoid& b) {
    return a.names_ == b.names_ && a.table_ == b.table_ && a.zero_ == b.zero_ && a.one_ == b.one_;
  }

private:
  std::vector<std::string> names_;
  std::vector<Element> table_;
  std::vector<Element> inverse_;
  std::vector<Element> idempotents_;
  std::unordered_map<std::string, Element> by_name_;
  Element zero_;
  Element one_;
};

// Single-shot operations. Each performs its own exhaustive search over the
// canonical order and throws on missing structure.

Element compose(const FiniteInverseMonoid& s, Element a, Element b);
Element inverse_of(const FiniteInverseMonoid& s, Element a);

/// a <= b  iff  a = b a^-1 a.
bool natural_leq(const FiniteInverseMonoid& s, Element a, Element b);

/// a ⊥ b  iff  a b^-1 = 0 and a^-1 b = 0.
bool is_orthogonal(const FiniteInverseMonoid& s, Element a, Element b);

/// Greatest lower bound; StructureError if none exists.
Element meet(const FiniteInverseMonoid& s, Element a, Element b);

/// Least upper bound of an orthogonal pair.
Element orthogonal_join(const FiniteInverseMonoid& s, Element a, Element b);

/// The unique d with d ⊥ c and d ∨ c = a. Requires c <= a.
Element relative_complement(const FiniteInverseMonoid& s, Element a, Element c);

/// Precomputed order structure: the <= relation, every existing binary meet
/// and every existing orthogonal join, found by the same exhaustive searches
/// as the single-shot functions. Entries are kNoElement where the bound does
/// not exist.
class OrderTables {
public:
  explicit OrderTables(const FiniteInverseMonoid& s);

  bool leq(Element a, Element b) const { return leq_[index(a, b)] != 0; }
  bool orthogonal(Element a, Element b) const { return orth_[index(a, b)] != 0; }
  Element meet(Element a, Element b) const { return meet_[index(a, b)]; }
  /// Join of an orthogonal pair, kNoElement if not orthogonal or no lub.
  Element join(Element a, Element b) const { return join_[index(a, b)]; }

  /// All d with d ⊥ c and d ∨ c = a.
  std::vector<Element> complement_candidates(Element a, Element c) const;

private:
  std::size_t index(Element a, Element b) const { return std::size_t(a) * n_ + b; }

  std::size_t n_;
  std::vector<std::uint8_t> leq_;
  std::vector<std::uint8_t> orth_;
  std::vector<Element> meet_;
  std::vector<Element> join_;
};

/// Exhaustive Boolean-inverse-monoid axiom check. Never throws; failures are
/// report entries with the first counterexample by canonical index.
Report verify_boolean_inverse_monoid(const FiniteInverseMonoid& s);

/// A FiniteInverseMonoid that passed verify_boolean_inverse_monoid, with
/// meets, orthogonal joins and relative complements tabulated.
class BooleanInverseMonoid {
public:
  /// Throws StructureError naming the first failed axiom.
  explicit BooleanInverseMonoid(FiniteInverseMonoid monoid);

  const FiniteInverseMonoid& monoid() const { return monoid_; }
  const OrderTables& order() const { return order_; }
  std::size_t size() const { return monoid_.size(); }

  Element multiply(Element a, Element b) const { return monoid_.multiply(a, b); }
  Element inverse(Element a) const { return monoid_.inverse(a); }
  const std::string& name(Element a) const { return monoid_.name(a); }

  bool leq(Element a, Element b) const { return order_.leq(a, b); }
  bool orthogonal(Element a, Element b) const { return order_.orthogonal(a, b); }
  Element meet(Element a, Element b) const { return order_.meet(a, b); }
  /// PreconditionError unless a ⊥ b.
  Element join(Element a, Element b) const;
  /// a ∖ c; PreconditionError unless c <= a.
  Element complement(Element a, Element c) const;

  /// Source idempotent a^-1 a.
  Element source_idempotent(Element a) const { return multiply(inverse(a), a); }
  /// Range idempotent a a^-1.
  Element range_idempotent(Element a) const { return multiply(a, inverse(a)); }

private:
  FiniteInverseMonoid monoid_;
  OrderTables order_;
  std::vector<Element> complement_;
};

} // namespace germkit

#endif // GERMKIT_INVERSE_MONOID_HPP
