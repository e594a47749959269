#include "germkit/germ.hpp"

#include <algorithm>
#include <set>

#include "germkit/error.hpp"

namespace germkit {

namespace {

constexpr std::size_t kNoCharacter = static_cast<std::size_t>(-1);

// α_φ(x) evaluated by its defining rule on every idempotent p, then matched
// against the character list.
std::size_t alpha_by_rule(const CharacterSpace& chars, Element phi, std::size_t x) {
  const auto& b = chars.algebra();
  const auto& s = b.monoid();
  const Element phi_inv = s.inverse(phi);
  const auto& E = b.carrier();
  std::vector<bool> want(E.size());
  for (std::size_t i = 0; i < E.size(); ++i)
    want[i] = chars.evaluate(x, s.monoid().multiply(phi_inv, E[i], phi));

  std::size_t found = kNoCharacter;
  std::size_t count = 0;
  for (std::size_t y = 0; y < chars.size(); ++y) {
    bool match = true;
    for (std::size_t i = 0; i < E.size() && match; ++i)
      match = chars.evaluate(y, E[i]) == want[i];
    if (match) {
      found = y;
      ++count;
    }
  }
  if (count != 1)
    throw StructureError("alpha(" + s.name(phi) + ", " + s.name(chars[x].atom) + ") is realized by " +
                         std::to_string(count) + " characters");
  return found;
}

} // namespace

GermGroupoid::GermGroupoid(std::shared_ptr<const BooleanInverseMonoid> s, CharacterSpace chars)
    : s_(std::move(s)), chars_(std::move(chars)) {}

GermGroupoid GermGroupoid::build(std::shared_ptr<const BooleanInverseMonoid> s, std::size_t oracle_limit) {
  if (!s)
    throw PreconditionError("null monoid");
  CharacterSpace chars(BooleanAlgebraView(s), oracle_limit);
  GermGroupoid G(s, std::move(chars));
  const auto& S = *G.s_;
  const std::size_t n = S.size();
  const std::size_t k = G.chars_.size();

  G.alpha_.assign(n * k, kNoCharacter);
  std::set<GermKey> keys;
  for (Element phi = 0; phi < n; ++phi)
    for (std::size_t x : G.char_support(phi)) {
      G.alpha_[phi * k + x] = alpha_by_rule(G.chars_, phi, x);
      keys.insert(GermKey{x, S.multiply(phi, G.chars_[x].atom)});
    }
  G.keys_.assign(keys.begin(), keys.end());

  std::vector<std::string> unit_labels;
  for (const auto& c : G.chars_.characters())
    unit_labels.push_back(S.name(c.atom));

  const std::size_t m = G.keys_.size();
  std::vector<ArrowSpec> arrows;
  for (const auto& key : G.keys_)
    arrows.push_back({key.character, G.alpha(key.representative, key.character), S.name(key.representative)});

  std::vector<ArrowId> identities(k);
  for (std::size_t x = 0; x < k; ++x)
    identities[x] = G.germ(S.monoid().one(), x);

  std::vector<ArrowId> products(m * m, kNoArrow), inverses(m);
  for (ArrowId g = 0; g < m; ++g) {
    const auto [x, phi] = G.keys_[g];
    inverses[g] = G.germ(S.inverse(phi), G.alpha(phi, x));
    for (ArrowId h = 0; h < m; ++h) {
      const auto [y, psi] = G.keys_[h];
      if (x == G.alpha(psi, y))
        products[g * m + h] = G.germ(S.multiply(phi, psi), y);
    }
  }
  G.groupoid_ = FiniteGroupoid(std::move(unit_labels), std::move(arrows), std::move(identities),
                               std::move(products), std::move(inverses));

  const Report axioms = verify_groupoid_axioms(G.groupoid_);
  if (const auto* f = axioms.first_failure())
    throw StructureError("germ groupoid violates " + f->name + " at " + f->witness);
  return G;
}

void GermGroupoid::require_element(Element phi) const {
  if (phi >= s_->size())
    throw PreconditionError("element index " + std::to_string(phi) + " out of range");
}

void GermGroupoid::require_character(std::size_t x) const {
  if (x >= chars_.size())
    throw PreconditionError("character index " + std::to_string(x) + " out of range");
}

CharacterSet GermGroupoid::char_support(Element phi) const {
  require_element(phi);
  return chars_.basic_open(s_->source_idempotent(phi));
}

bool GermGroupoid::in_support(Element phi, std::size_t x) const {
  require_element(phi);
  require_character(x);
  return chars_.evaluate(x, s_->source_idempotent(phi));
}

std::size_t GermGroupoid::alpha(Element phi, std::size_t x) const {
  if (!in_support(phi, x))
    throw PreconditionError("character " + s_->name(chars_[x].atom) + " is outside the support of " +
                            s_->name(phi));
  return alpha_[phi * chars_.size() + x];
}

GermKey GermGroupoid::key(Element phi, std::size_t x) const {
  if (!in_support(phi, x))
    throw PreconditionError("(" + s_->name(phi) + ", " + s_->name(chars_[x].atom) + ") is not a germ representative");
  return GermKey{x, s_->multiply(phi, chars_[x].atom)};
}

ArrowId GermGroupoid::find(const GermKey& k) const {
  auto it = std::lower_bound(keys_.begin(), keys_.end(), k);
  if (it == keys_.end() || *it != k)
    return kNoArrow;
  return static_cast<ArrowId>(it - keys_.begin());
}

ArrowId GermGroupoid::germ(Element phi, std::size_t x) const {
  const ArrowId g = find(key(phi, x));
  if (g == kNoArrow)
    throw StructureError("germ of (" + s_->name(phi) + ", " + s_->name(chars_[x].atom) + ") is missing");
  return g;
}

bool GermGroupoid::germ_equivalent(Element phi, std::size_t x, Element psi, std::size_t y) const {
  if (!in_support(phi, x) || !in_support(psi, y))
    throw PreconditionError("germ_equivalent needs representatives in S * E^");
  if (x != y)
    return false;
  for (Element p : chars_.algebra().carrier())
    if (chars_.evaluate(x, p) && s_->multiply(phi, p) == s_->multiply(psi, p))
      return true;
  return false;
}

bool GermGroupoid::germ_equivalent_canonical(Element phi, std::size_t x, Element psi, std::size_t y) const {
  return x == y && key(phi, x) == key(psi, y);
}

std::vector<Element> GermGroupoid::representatives(ArrowId g) const {
  const auto& k = keys_.at(g);
  std::vector<Element> out;
  for (Element phi = 0; phi < s_->size(); ++phi)
    if (in_support(phi, k.character) && s_->multiply(phi, chars_[k.character].atom) == k.representative)
      out.push_back(phi);
  return out;
}

ArrowId GermGroupoid::compose_germs(ArrowId g, ArrowId h) const {
  const auto& [x, phi] = keys_.at(g);
  const auto& [y, psi] = keys_.at(h);
  if (x != alpha(psi, y))
    throw ComposabilityError("germs " + arrow_name(g) + " and " + arrow_name(h) + " are not composable");
  return germ(s_->multiply(phi, psi), y);
}

ArrowId GermGroupoid::inverse_germ(ArrowId g) const {
  const auto& [x, phi] = keys_.at(g);
  return germ(s_->inverse(phi), alpha(phi, x));
}

Bisection GermGroupoid::basic_bisection(Element phi) const {
  std::vector<ArrowId> out;
  for (std::size_t x : char_support(phi))
    out.push_back(germ(phi, x));
  return Bisection(std::move(out));
}

std::vector<Bisection> epsilon(const GermGroupoid& g) {
  std::vector<Bisection> out;
  out.reserve(g.monoid().size());
  for (Element phi = 0; phi < g.monoid().size(); ++phi)
    out.push_back(g.basic_bisection(phi));
  return out;
}

Element realize_bisection(const GermGroupoid& g, const Bisection& w) {
  const auto& S = g.monoid();
  if (!is_bisection(g.groupoid(), w))
    throw PreconditionError("realize_bisection needs a bisection");
  Element acc = S.monoid().zero();
  for (ArrowId a : w.arrows) {
    const Element next = g.germs().at(a).representative;
    const Element chi = S.complement(next, S.meet(next, acc));
    if (!S.orthogonal(acc, chi))
      throw StructureError("orthogonalization step fails: " + S.name(acc) + " and " + S.name(chi) +
                           " are not orthogonal");
    acc = S.join(acc, chi);
  }
  if (g.basic_bisection(acc) != w)
    throw StructureError("orthogonalization fold produced " + S.name(acc) + " whose U differs from W");
  return acc;
}

} // namespace germkit
