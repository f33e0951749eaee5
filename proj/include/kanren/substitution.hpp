#pragma once

// Triangular substitutions, walk, occurs check and unification.

#include <cassert>
#include <optional>
#include <utility>
#include <vector>

#include "kanren/errors.hpp"
#include "kanren/persistent_map.hpp"
#include "kanren/term.hpp"

namespace kanren {

/// Bindings added by one unification, in the order they were added.
using Prefix = std::vector<std::pair<VarId, Term>>;

/// Finite map from variables of one run to terms. Images may mention other
/// bound variables; resolution goes through walk.
class Substitution {
 public:
  Anchor anchor() const { return anchor_; }
  std::size_t size() const { return map_.size(); }
  bool empty() const { return map_.empty(); }

  /// Binding of `v`, or null when unbound. Rejects variables of other runs.
  const Term* lookup(const VarId& v) const {
    check_anchor(v);
    return map_.find(v.index);
  }

  void check_anchor(const VarId& v) const {
    if (!(v.anchor == anchor_)) throw UsageError("logic variable used outside the run that created it");
  }

  template <class F>
  void for_each(F&& f) const {
    map_.for_each([&](std::uint32_t index, const Term& t) { f(VarId{index, anchor_}, t); });
  }

 private:
  friend class State;
  friend Substitution extend(const Substitution&, const VarId&, Term);

  explicit Substitution(Anchor anchor) : anchor_(anchor) {}
  Substitution(Anchor anchor, PersistentIntMap<Term> map) : anchor_(anchor), map_(std::move(map)) {}

  Anchor anchor_;
  PersistentIntMap<Term> map_;
};

/// Resolves `t` through `s` until it is an unbound variable or not a variable.
inline Term walk(const Substitution& s, Term t) {
  while (const VarId* v = t.as_var()) {
    const Term* bound = s.lookup(*v);
    if (!bound) break;
    t = *bound;
  }
  return t;
}

namespace detail {
// walk without copying; the result lives as long as `t` and `s`.
inline const Term& walk_ref(const Substitution& s, const Term& t) {
  const Term* cur = &t;
  while (const VarId* v = cur->as_var()) {
    const Term* bound = s.lookup(*v);
    if (!bound) break;
    cur = bound;
  }
  return *cur;
}
}  // namespace detail

/// True iff `v` occurs in `t` once every subterm is walked through `s`.
inline bool occurs(const Substitution& s, const VarId& v, const Term& t) {
  const Term& w = detail::walk_ref(s, t);
  if (const VarId* x = w.as_var()) return *x == v;
  if (const Composite* c = w.as_composite()) {
    if (c->ground) return false;
    for (const Term& a : c->args)
      if (occurs(s, v, a)) return true;
  }
  return false;
}

/// `s` plus v -> t. Requires v unbound and not occurring in t.
inline Substitution extend(const Substitution& s, const VarId& v, Term t) {
  assert(s.lookup(v) == nullptr);
  assert(!occurs(s, v, t));
  return Substitution(s.anchor_, s.map_.insert(v.index, std::move(t)));
}

struct Unification {
  Substitution subst;
  Prefix prefix;
};

namespace detail {

inline bool unify_into(const Term& t1, const Term& t2, Substitution& s, Prefix& prefix) {
  Term a = walk(s, t1);
  Term b = walk(s, t2);
  const VarId* va = a.as_var();
  const VarId* vb = b.as_var();
  if (va && vb && *va == *vb) return true;
  if (va) {
    if (occurs(s, *va, b)) return false;
    s = extend(s, *va, b);
    prefix.emplace_back(*va, std::move(b));
    return true;
  }
  if (vb) {
    if (occurs(s, *vb, a)) return false;
    s = extend(s, *vb, a);
    prefix.emplace_back(*vb, std::move(a));
    return true;
  }
  if (const Atom* x = a.as_atom()) {
    const Atom* y = b.as_atom();
    return y && *x == *y;
  }
  const Composite* ca = a.as_composite();
  const Composite* cb = b.as_composite();
  if (!cb) return false;
  if (ca == cb) return true;
  if (!(ca->tag == cb->tag) || ca->args.size() != cb->args.size()) return false;
  if (ca->ground && cb->ground) return a == b;
  for (std::size_t i = 0; i < ca->args.size(); ++i)
    if (!unify_into(ca->args[i], cb->args[i], s, prefix)) return false;
  return true;
}

}  // namespace detail

/// Most general unifier of t1 and t2 relative to s, together with the
/// bindings it added. When both sides walk to distinct unbound variables
/// the left one is bound to the right one.
inline std::optional<Unification> unify(const Term& t1, const Term& t2, const Substitution& s) {
  Unification u{s, {}};
  if (!detail::unify_into(t1, t2, u.subst, u.prefix)) return std::nullopt;
  return u;
}

/// Substitutes bound variables everywhere inside `t`.
inline Term walk_all(const Substitution& s, const Term& t) {
  Term w = walk(s, t);
  const Composite* c = w.as_composite();
  if (!c || c->ground) return w;
  std::vector<Term> args;
  args.reserve(c->args.size());
  bool changed = false;
  for (const Term& a : c->args) {
    args.push_back(walk_all(s, a));
    const Term& r = args.back();
    changed = changed || r.is_var() != a.is_var() || r.composite_node() != a.composite_node() ||
              (r.is_var() && !(*r.as_var() == *a.as_var()));
  }
  if (!changed) return w;
  return Term::make(c->tag, std::move(args));
}

}  // namespace kanren
