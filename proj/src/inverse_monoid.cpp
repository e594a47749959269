#include "germkit/inverse_monoid.hpp"

#include <sstream>

#include "germkit/error.hpp"

namespace germkit {

namespace {

std::string tuple_name(const FiniteInverseMonoid& s, std::initializer_list<Element> xs) {
  std::string out = "(";
  bool first = true;
  for (Element x : xs) {
    if (!first)
      out += ", ";
    out += s.name(x);
    first = false;
  }
  return out + ")";
}

void check_index(const FiniteInverseMonoid& s, Element a) {
  if (a >= s.size())
    throw PreconditionError("element index " + std::to_string(a) + " out of range (size " +
                            std::to_string(s.size()) + ")");
}

// Scan upward through the set of c satisfying `in_set`, then confirm the
// candidate dominates every member. Returns the greatest member, if any.
template <class InSet, class Leq>
std::optional<Element> greatest(std::size_t n, InSet in_set, Leq leq) {
  std::optional<Element> best;
  for (Element c = 0; c < n; ++c)
    if (in_set(c) && (!best || leq(*best, c)))
      best = c;
  if (!best)
    return std::nullopt;
  for (Element c = 0; c < n; ++c)
    if (in_set(c) && !leq(c, *best))
      return std::nullopt;
  return best;
}

template <class InSet, class Leq>
std::optional<Element> least(std::size_t n, InSet in_set, Leq leq) {
  return greatest(n, in_set, [&](Element x, Element y) { return leq(y, x); });
}

std::optional<Element> search_meet(const FiniteInverseMonoid& s, Element a, Element b) {
  auto leq = [&](Element x, Element y) { return natural_leq(s, x, y); };
  return greatest(
      s.size(), [&](Element c) { return leq(c, a) && leq(c, b); }, leq);
}

std::optional<Element> search_join(const FiniteInverseMonoid& s, Element a, Element b) {
  auto leq = [&](Element x, Element y) { return natural_leq(s, x, y); };
  return least(
      s.size(), [&](Element c) { return leq(a, c) && leq(b, c); }, leq);
}

} // namespace

FiniteInverseMonoid::FiniteInverseMonoid(std::vector<std::string> names,
                                         const std::vector<std::vector<Element>>& table,
                                         Element zero,
                                         Element one,
                                         std::size_t element_cap)
    : names_(std::move(names)), zero_(zero), one_(one) {
  const std::size_t n = names_.size();
  if (n == 0)
    throw InputError("monoid has no elements");
  if (n > element_cap)
    throw SizeError("monoid has " + std::to_string(n) + " elements, cap is " + std::to_string(element_cap));
  if (table.size() != n)
    throw InputError("multiplication table has " + std::to_string(table.size()) + " rows, expected " +
                     std::to_string(n));
  if (zero >= n || one >= n)
    throw InputError("zero/one index out of range");
  for (Element i = 0; i < n; ++i) {
    if (!by_name_.emplace(names_[i], i).second)
      throw InputError("duplicate element name '" + names_[i] + "'");
  }

  table_.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    if (table[i].size() != n)
      throw InputError("multiplication table row " + std::to_string(i) + " has wrong length");
    for (Element v : table[i]) {
      if (v >= n)
        throw InputError("multiplication table entry " + std::to_string(v) + " out of range");
      table_.push_back(v);
    }
  }

  if (zero_ == one_)
    throw StructureError("degenerate monoid: zero equals identity");

  for (Element a = 0; a < n; ++a) {
    if (multiply(one_, a) != a || multiply(a, one_) != a)
      throw StructureError("identity law fails at " + names_[a]);
    if (multiply(zero_, a) != zero_ || multiply(a, zero_) != zero_)
      throw StructureError("zero is not absorbing at " + names_[a]);
  }

  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) {
      const Element ab = multiply(a, b);
      for (Element c = 0; c < n; ++c)
        if (multiply(ab, c) != multiply(a, multiply(b, c)))
          throw StructureError("associativity fails at (" + names_[a] + ", " + names_[b] + ", " + names_[c] + ")");
    }

  inverse_.assign(n, kNoElement);
  for (Element a = 0; a < n; ++a) {
    std::size_t count = 0;
    for (Element b = 0; b < n; ++b) {
      if (multiply(a, b, a) == a && multiply(b, a, b) == b) {
        if (count == 0)
          inverse_[a] = b;
        ++count;
      }
    }
    if (count != 1)
      throw StructureError("element " + names_[a] + " has " + std::to_string(count) +
                           " generalized inverses (expected exactly 1)");
  }

  for (Element a = 0; a < n; ++a)
    if (is_idempotent(a))
      idempotents_.push_back(a);
}

std::optional<Element> FiniteInverseMonoid::find(std::string_view name) const {
  auto it = by_name_.find(std::string(name));
  if (it == by_name_.end())
    return std::nullopt;
  return it->second;
}

std::vector<std::vector<Element>> FiniteInverseMonoid::table() const {
  const std::size_t n = size();
  std::vector<std::vector<Element>> out(n, std::vector<Element>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      out[i][j] = table_[i * n + j];
  return out;
}

Element compose(const FiniteInverseMonoid& s, Element a, Element b) {
  check_index(s, a);
  check_index(s, b);
  return s.multiply(a, b);
}

Element inverse_of(const FiniteInverseMonoid& s, Element a) {
  check_index(s, a);
  return s.inverse(a);
}

bool natural_leq(const FiniteInverseMonoid& s, Element a, Element b) {
  check_index(s, a);
  check_index(s, b);
  return a == s.multiply(b, s.inverse(a), a);
}

bool is_orthogonal(const FiniteInverseMonoid& s, Element a, Element b) {
  check_index(s, a);
  check_index(s, b);
  return s.multiply(a, s.inverse(b)) == s.zero() && s.multiply(s.inverse(a), b) == s.zero();
}

Element meet(const FiniteInverseMonoid& s, Element a, Element b) {
  check_index(s, a);
  check_index(s, b);
  if (auto m = search_meet(s, a, b))
    return *m;
  throw StructureError("no greatest lower bound for " + tuple_name(s, {a, b}));
}

Element orthogonal_join(const FiniteInverseMonoid& s, Element a, Element b) {
  if (!is_orthogonal(s, a, b))
    throw PreconditionError("join of non-orthogonal pair " + tuple_name(s, {a, b}));
  if (auto j = search_join(s, a, b))
    return *j;
  throw StructureError("no least upper bound for orthogonal pair " + tuple_name(s, {a, b}));
}

Element relative_complement(const FiniteInverseMonoid& s, Element a, Element c) {
  if (!natural_leq(s, c, a))
    throw PreconditionError("relative complement needs " + s.name(c) + " <= " + s.name(a));
  std::vector<Element> found;
  for (Element d = 0; d < s.size(); ++d) {
    if (!is_orthogonal(s, d, c))
      continue;
    auto j = search_join(s, d, c);
    if (j && *j == a)
      found.push_back(d);
  }
  if (found.size() != 1)
    throw StructureError("relative complement " + s.name(a) + " \\ " + s.name(c) + " has " +
                         std::to_string(found.size()) + " candidates");
  return found.front();
}

OrderTables::OrderTables(const FiniteInverseMonoid& s) : n_(s.size()) {
  const auto n = n_;
  leq_.assign(n * n, 0);
  orth_.assign(n * n, 0);
  meet_.assign(n * n, kNoElement);
  join_.assign(n * n, kNoElement);
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) {
      leq_[index(a, b)] = a == s.multiply(b, s.inverse(a), a);
      orth_[index(a, b)] = s.multiply(a, s.inverse(b)) == s.zero() && s.multiply(s.inverse(a), b) == s.zero();
    }
  auto le = [&](Element x, Element y) { return leq(x, y); };
  for (Element a = 0; a < n; ++a)
    for (Element b = a; b < n; ++b) {
      if (auto m = greatest(n, [&](Element c) { return le(c, a) && le(c, b); }, le))
        meet_[index(a, b)] = meet_[index(b, a)] = *m;
      if (orthogonal(a, b))
        if (auto j = least(n, [&](Element c) { return le(a, c) && le(b, c); }, le))
          join_[index(a, b)] = join_[index(b, a)] = *j;
    }
}

std::vector<Element> OrderTables::complement_candidates(Element a, Element c) const {
  std::vector<Element> out;
  for (Element d = 0; d < n_; ++d)
    if (join(d, c) == a)
      out.push_back(d);
  return out;
}

namespace {

// Shared body of verify_boolean_inverse_monoid; optionally fills the table of
// relative complements (kNoElement where undefined).
Report check_boolean(const FiniteInverseMonoid& s, const OrderTables& t, std::vector<Element>* complements) {
  Report report("Boolean inverse monoid axioms");
  const Element n = static_cast<Element>(s.size());
  const auto& E = s.idempotents();
  auto nm = [&](std::initializer_list<Element> xs) { return tuple_name(s, xs); };

  {
    CheckBuilder c("associativity");
    for (Element a = 0; a < n; ++a)
      for (Element b = 0; b < n; ++b)
        for (Element d = 0; d < n; ++d)
          c.expect(s.multiply(s.multiply(a, b), d) == s.multiply(a, s.multiply(b, d)), [&] { return nm({a, b, d}); });
    report.add(std::move(c).finish());
  }
  {
    CheckBuilder c("zero absorbs, identity is two-sided");
    for (Element a = 0; a < n; ++a) {
      c.expect(s.multiply(s.zero(), a) == s.zero() && s.multiply(a, s.zero()) == s.zero(), [&] { return nm({a}); });
      c.expect(s.multiply(s.one(), a) == a && s.multiply(a, s.one()) == a, [&] { return nm({a}); });
    }
    c.expect(s.zero() != s.one(), [] { return std::string("0 = 1"); });
    report.add(std::move(c).finish());
  }
  {
    CheckBuilder c("unique generalized inverses");
    for (Element a = 0; a < n; ++a) {
      std::size_t count = 0;
      for (Element b = 0; b < n; ++b)
        count += s.multiply(a, b, a) == a && s.multiply(b, a, b) == b;
      c.expect(count == 1 && s.multiply(a, s.inverse(a), a) == a,
               [&] { return nm({a}) + " has " + std::to_string(count) + " inverses"; });
    }
    report.add(std::move(c).finish());
  }
  {
    CheckBuilder c("idempotents commute and are closed");
    for (Element p : E)
      for (Element q : E)
        c.expect(s.multiply(p, q) == s.multiply(q, p) && s.is_idempotent(s.multiply(p, q)),
                 [&] { return nm({p, q}); });
    report.add(std::move(c).finish());
  }
  {
    CheckBuilder c("canonical order is a partial order");
    for (Element a = 0; a < n; ++a) {
      c.expect(t.leq(a, a), [&] { return "not reflexive at " + nm({a}); });
      for (Element b = 0; b < n; ++b) {
        if (a != b && t.leq(a, b))
          c.expect(!t.leq(b, a), [&] { return "not antisymmetric at " + nm({a, b}); });
        if (!t.leq(a, b))
          continue;
        for (Element d = 0; d < n; ++d)
          if (t.leq(b, d))
            c.expect(t.leq(a, d), [&] { return "not transitive at " + nm({a, b, d}); });
      }
    }
    report.add(std::move(c).finish());
  }
  {
    CheckBuilder c("idempotent meet is the product");
    for (Element p : E)
      for (Element q : E)
        c.expect(t.meet(p, q) == s.multiply(p, q), [&] { return nm({p, q}); });
    report.add(std::move(c).finish());
  }
  {
    CheckBuilder c("binary meets exist");
    for (Element a = 0; a < n; ++a)
      for (Element b = 0; b < n; ++b)
        c.expect(t.meet(a, b) != kNoElement, [&] { return nm({a, b}); });
    report.add(std::move(c).finish());
  }
  {
    CheckBuilder c("orthogonal joins exist");
    for (Element a = 0; a < n; ++a)
      for (Element b = 0; b < n; ++b)
        if (t.orthogonal(a, b))
          c.expect(t.join(a, b) != kNoElement, [&] { return nm({a, b}); });
    report.add(std::move(c).finish());
  }
  {
    CheckBuilder left("joins distribute on the left");
    CheckBuilder right("joins distribute on the right");
    for (Element a = 0; a < n; ++a)
      for (Element b = 0; b < n; ++b) {
        const Element j = t.join(a, b);
        if (!t.orthogonal(a, b) || j == kNoElement)
          continue;
        for (Element x = 0; x < n; ++x) {
          const Element l = t.join(s.multiply(x, a), s.multiply(x, b));
          left.expect(l != kNoElement && l == s.multiply(x, j), [&] { return "x=" + s.name(x) + " on " + nm({a, b}); });
          const Element r = t.join(s.multiply(a, x), s.multiply(b, x));
          right.expect(r != kNoElement && r == s.multiply(j, x), [&] { return "x=" + s.name(x) + " on " + nm({a, b}); });
        }
      }
    report.add(std::move(left).finish());
    report.add(std::move(right).finish());
  }

  // E(S) under the canonical order: suprema are taken among idempotents.
  std::vector<Element> e_join(std::size_t(n) * n, kNoElement);
  for (Element p : E)
    for (Element q : E) {
      auto in_e = [&](Element c) { return s.is_idempotent(c) && t.leq(p, c) && t.leq(q, c); };
      auto le = [&](Element x, Element y) { return t.leq(x, y); };
      e_join[std::size_t(p) * n + q] = least(n, in_e, le).value_or(kNoElement);
    }
  auto idem_join = [&](Element p, Element q) { return e_join[std::size_t(p) * n + q]; };
  {
    CheckBuilder c("idempotents form a bounded distributive lattice");
    for (Element p : E) {
      c.expect(t.leq(s.zero(), p) && t.leq(p, s.one()), [&] { return "bounds at " + nm({p}); });
      for (Element q : E) {
        const Element pq = idem_join(p, q);
        if (!c.expect(pq != kNoElement, [&] { return "no join for " + nm({p, q}); }))
          continue;
        for (Element r : E) {
          const Element qr = idem_join(q, r);
          const Element lhs = qr == kNoElement ? kNoElement : s.multiply(p, qr);
          const Element rhs = idem_join(s.multiply(p, q), s.multiply(p, r));
          c.expect(lhs != kNoElement && lhs == rhs, [&] { return "distributivity at " + nm({p, q, r}); });
        }
      }
    }
    report.add(std::move(c).finish());
  }
  {
    CheckBuilder c("idempotents are complemented");
    for (Element p : E) {
      bool found = false;
      for (Element q : E)
        if (s.multiply(p, q) == s.zero() && idem_join(p, q) == s.one()) {
          found = true;
          break;
        }
      c.expect(found, [&] { return nm({p}) + " has no complement"; });
    }
    report.add(std::move(c).finish());
  }
  {
    CheckBuilder c("relative complements exist and are unique");
    if (complements)
      complements->assign(std::size_t(n) * n, kNoElement);
    for (Element a = 0; a < n; ++a)
      for (Element x = 0; x < n; ++x) {
        if (!t.leq(x, a))
          continue;
        const auto cands = t.complement_candidates(a, x);
        const bool ok = c.expect(cands.size() == 1, [&] {
          return s.name(a) + " \\ " + s.name(x) + " has " + std::to_string(cands.size()) + " candidates";
        });
        if (ok && complements)
          (*complements)[std::size_t(a) * n + x] = cands.front();
      }
    report.add(std::move(c).finish());
  }
  return report;
}

} // namespace

Report verify_boolean_inverse_monoid(const FiniteInverseMonoid& s) {
  const OrderTables tables(s);
  return check_boolean(s, tables, nullptr);
}

BooleanInverseMonoid::BooleanInverseMonoid(FiniteInverseMonoid monoid)
    : monoid_(std::move(monoid)), order_(monoid_) {
  const Report r = check_boolean(monoid_, order_, &complement_);
  if (const auto* f = r.first_failure())
    throw StructureError("not a Boolean inverse monoid: " + f->name + " fails at " + f->witness);
}

Element BooleanInverseMonoid::join(Element a, Element b) const {
  if (a >= size() || b >= size() || !orthogonal(a, b))
    throw PreconditionError("join needs an orthogonal pair");
  return order_.join(a, b);
}

Element BooleanInverseMonoid::complement(Element a, Element c) const {
  if (a >= size() || c >= size() || !leq(c, a))
    throw PreconditionError("relative complement needs c <= a");
  return complement_[std::size_t(a) * size() + c];
}

} // namespace germkit
