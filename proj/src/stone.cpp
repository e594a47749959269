#include "germkit/stone.hpp"

#include <algorithm>
#include <iterator>
#include <set>

#include "germkit/error.hpp"

namespace germkit {

BooleanAlgebraView::BooleanAlgebraView(std::shared_ptr<const BooleanInverseMonoid> s) : s_(std::move(s)) {
  if (!s_)
    throw PreconditionError("null monoid");
}

void BooleanAlgebraView::require(Element p) const {
  if (!contains(p))
    throw PreconditionError("element " + std::to_string(p) + " is not an idempotent");
}

Element BooleanAlgebraView::meet(Element p, Element q) const {
  require(p);
  require(q);
  return s_->multiply(p, q);
}

Element BooleanAlgebraView::join(Element p, Element q) const {
  const Element pq = meet(p, q);
  return s_->join(p, s_->complement(q, pq));
}

Element BooleanAlgebraView::complement(Element p) const {
  require(p);
  return s_->complement(top(), p);
}

Report BooleanAlgebraView::validate() const {
  Report report("idempotent Boolean algebra");
  const auto& E = carrier();
  const auto& s = s_->monoid();
  auto nm = [&](std::initializer_list<Element> xs) {
    std::string out;
    for (Element x : xs)
      out += (out.empty() ? "" : ", ") + s.name(x);
    return "(" + out + ")";
  };

  CheckBuilder lattice("lattice laws");
  CheckBuilder distributive("distributivity");
  CheckBuilder bounds("bounds");
  CheckBuilder compl_("complements");
  for (Element p : E) {
    bounds.expect(meet(p, bottom()) == bottom() && join(p, top()) == top() && meet(p, top()) == p &&
                      join(p, bottom()) == p,
                  [&] { return nm({p}); });
    const Element c = complement(p);
    compl_.expect(meet(p, c) == bottom() && join(p, c) == top(), [&] { return nm({p}); });
    for (Element q : E) {
      lattice.expect(meet(p, q) == meet(q, p) && join(p, q) == join(q, p) && meet(p, join(p, q)) == p &&
                         join(p, meet(p, q)) == p && s_->leq(p, join(p, q)) && s_->leq(q, join(p, q)),
                     [&] { return nm({p, q}); });
      for (Element r : E) {
        distributive.expect(meet(p, join(q, r)) == join(meet(p, q), meet(p, r)) &&
                                join(p, meet(q, r)) == meet(join(p, q), join(p, r)) &&
                                join(p, join(q, r)) == join(join(p, q), r),
                            [&] { return nm({p, q, r}); });
      }
    }
  }
  report.add(std::move(bounds).finish());
  report.add(std::move(lattice).finish());
  report.add(std::move(distributive).finish());
  report.add(std::move(compl_).finish());
  return report;
}

std::vector<Element> atoms(const BooleanAlgebraView& b) {
  std::vector<Element> out;
  for (Element a : b.carrier()) {
    if (a == b.bottom())
      continue;
    const bool minimal = std::none_of(b.carrier().begin(), b.carrier().end(), [&](Element q) {
      return q != b.bottom() && q != a && b.leq(q, a);
    });
    if (minimal)
      out.push_back(a);
  }
  Element total = b.bottom();
  for (Element a : out)
    total = b.monoid().join(total, a);
  if (total != b.top())
    throw StructureError("atoms do not join to 1");
  return out;
}

namespace {

// Value table of a character over the carrier, as a bitmask indexed by
// carrier position.
std::uint64_t value_mask(const BooleanAlgebraView& b, Element atom) {
  std::uint64_t m = 0;
  const auto& E = b.carrier();
  for (std::size_t i = 0; i < E.size(); ++i)
    if (b.monoid().multiply(atom, E[i]) == atom)
      m |= std::uint64_t{1} << i;
  return m;
}

std::set<std::uint64_t> brute_force_characters(const BooleanAlgebraView& b) {
  const auto& E = b.carrier();
  const std::size_t k = E.size();
  std::vector<std::size_t> pos(b.monoid().size(), 0);
  for (std::size_t i = 0; i < k; ++i)
    pos[E[i]] = i;
  // meets/joins by carrier position
  std::vector<std::size_t> mt(k * k), jn(k * k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      mt[i * k + j] = pos[b.meet(E[i], E[j])];
      jn[i * k + j] = pos[b.join(E[i], E[j])];
    }
  const std::size_t zero = pos[b.bottom()], one = pos[b.top()];
  std::set<std::uint64_t> found;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << k); ++m) {
    auto v = [&](std::size_t i) { return (m >> i) & 1U; };
    if (v(zero) != 0 || v(one) != 1)
      continue;
    bool ok = true;
    for (std::size_t i = 0; i < k && ok; ++i)
      for (std::size_t j = 0; j < k && ok; ++j)
        ok = v(mt[i * k + j]) == (v(i) & v(j)) && v(jn[i * k + j]) == (v(i) | v(j));
    if (ok)
      found.insert(m);
  }
  return found;
}

} // namespace

std::vector<Character> characters(const BooleanAlgebraView& b, std::size_t oracle_limit) {
  const auto as = atoms(b);
  std::vector<Character> out;
  out.reserve(as.size());
  for (std::size_t i = 0; i < as.size(); ++i)
    out.push_back(Character{i, as[i]});

  if (b.carrier().size() <= std::min<std::size_t>(oracle_limit, 24)) {
    std::set<std::uint64_t> from_atoms;
    for (const auto& x : out)
      from_atoms.insert(value_mask(b, x.atom));
    if (from_atoms != brute_force_characters(b))
      throw StructureError("atom characters disagree with brute-force character enumeration");
  }
  return out;
}

bool evaluate(const BooleanAlgebraView& b, const Character& x, Element p) {
  if (!b.contains(p))
    throw PreconditionError("character evaluated at a non-idempotent");
  return b.monoid().multiply(x.atom, p) == x.atom;
}

CharacterSet basic_open(const BooleanAlgebraView& b, const std::vector<Character>& xs, Element e) {
  CharacterSet out;
  for (const auto& x : xs)
    if (evaluate(b, x, e))
      out.push_back(x.index);
  return out;
}

CharacterSpace::CharacterSpace(BooleanAlgebraView b, std::size_t oracle_limit)
    : algebra_(std::move(b)), chars_(germkit::characters(algebra_, oracle_limit)) {
  by_atom_.assign(algebra_.monoid().size(), kNotAnAtom);
  for (const auto& x : chars_)
    by_atom_[x.atom] = x.index;
}

CharacterSet CharacterSpace::all() const {
  CharacterSet out(chars_.size());
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = i;
  return out;
}

std::size_t CharacterSpace::index_of_atom(Element a) const {
  if (a >= by_atom_.size() || by_atom_[a] == kNotAnAtom)
    throw PreconditionError("element " + std::to_string(a) + " is not an atom");
  return by_atom_[a];
}

Report verify_character_space(const CharacterSpace& space) {
  const auto& b = space.algebra();
  const auto& s = b.monoid();
  Report report("character space");
  report.append(b.validate());

  const auto& E = b.carrier();
  CheckBuilder count("|E(S)| = 2^(number of atoms)");
  const std::size_t k = space.size();
  count.expect(k < 63 && E.size() == (std::size_t{1} << k),
               [&] { return std::to_string(E.size()) + " idempotents, " + std::to_string(k) + " atoms"; });
  count.set_detail(std::to_string(E.size()) + " idempotents, " + std::to_string(k) + " characters");
  report.add(std::move(count).finish());

  const CharacterSet all = space.all();
  CheckBuilder opens("basic opens of meets and complements");
  CheckBuilder order("e <= f iff basic_open(e) within basic_open(f)");
  CheckBuilder separate("distinct idempotents have distinct basic opens");
  for (Element e : E) {
    const auto oe = space.basic_open(e);
    CharacterSet rest;
    std::set_difference(all.begin(), all.end(), oe.begin(), oe.end(), std::back_inserter(rest));
    opens.expect(space.basic_open(b.complement(e)) == rest, [&] { return s.name(e); });
    for (Element f : E) {
      const auto of = space.basic_open(f);
      CharacterSet both;
      std::set_intersection(oe.begin(), oe.end(), of.begin(), of.end(), std::back_inserter(both));
      opens.expect(space.basic_open(b.meet(e, f)) == both, [&] { return s.name(e) + ", " + s.name(f); });
      const bool subset = std::includes(of.begin(), of.end(), oe.begin(), oe.end());
      order.expect(b.leq(e, f) == subset, [&] { return s.name(e) + ", " + s.name(f); });
      if (e != f)
        separate.expect(oe != of, [&] { return s.name(e) + ", " + s.name(f); });
    }
  }
  report.add(std::move(opens).finish());
  report.add(std::move(order).finish());
  report.add(std::move(separate).finish());
  return report;
}

} // namespace germkit
