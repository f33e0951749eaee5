#pragma once

// Disequality constraints, maintained as stored unification prefixes that are
// re-checked after every successful unification.

#include <optional>
#include <vector>

#include "kanren/state.hpp"

namespace kanren {

/// Records t1 =/= t2. Returns `st` unchanged when the terms cannot unify and
/// nothing when they are already equal.
inline std::optional<State> add_diseq(const Term& t1, const Term& t2, const State& st) {
  std::optional<Unification> u = unify(t1, t2, st.subst());
  if (!u) return st;
  if (u->prefix.empty()) return std::nullopt;
  return st.with_constraints(st.constraints().add(std::move(u->prefix)));
}

/// Re-checks every stored constraint against the current substitution:
/// unviolatable ones are dropped, violated ones fail the state, the rest
/// are narrowed to their new prefix.
inline std::optional<State> verify_store(const State& st) {
  if (st.constraints().empty()) return st;
  std::vector<Constraint> kept;
  kept.reserve(st.constraints().size());
  for (const Constraint& c : st.constraints()) {
    Substitution s = st.subst();
    Prefix prefix;
    bool unifiable = true;
    for (const auto& [v, t] : c) {
      if (!detail::unify_into(Term(v), t, s, prefix)) {
        unifiable = false;
        break;
      }
    }
    if (!unifiable) continue;
    if (prefix.empty()) return std::nullopt;
    kept.push_back(std::move(prefix));
  }
  return st.with_constraints(ConstraintStore(std::move(kept)));
}

/// Terms `v` is forbidden to equal, taken from constraints that have narrowed
/// to a single binding on `v`, walked through the current substitution.
inline std::vector<Term> constraints_for(const State& st, const VarId& v) {
  std::vector<Term> out;
  for (const Constraint& c : st.constraints()) {
    if (c.size() == 1 && c.front().first == v) out.push_back(walk_all(st.subst(), c.front().second));
  }
  return out;
}

}  // namespace kanren
