#pragma once

// Search state: environment, substitution and disequality store.

#include <cstdint>
#include <memory>
#include <typeindex>
#include <utility>
#include <vector>

#include "kanren/substitution.hpp"

namespace kanren {

/// Fresh-variable counter plus the run anchor.
struct Env {
  std::uint32_t next_index;
  Anchor anchor;
};

/// A stored unification prefix: these bindings must never all hold at once.
using Constraint = Prefix;

/// Immutable collection of disequality constraints. Never holds an empty constraint.
class ConstraintStore {
 public:
  ConstraintStore() = default;
  explicit ConstraintStore(std::vector<Constraint> items)
      : items_(items.empty() ? nullptr : std::make_shared<const std::vector<Constraint>>(std::move(items))) {}

  std::size_t size() const { return items_ ? items_->size() : 0; }
  bool empty() const { return size() == 0; }

  const Constraint* begin() const { return items_ ? items_->data() : nullptr; }
  const Constraint* end() const { return items_ ? items_->data() + items_->size() : nullptr; }

  ConstraintStore add(Constraint c) const {
    std::vector<Constraint> items(begin(), end());
    items.push_back(std::move(c));
    return ConstraintStore(std::move(items));
  }

 private:
  std::shared_ptr<const std::vector<Constraint>> items_;
};

class State {
 public:
  /// Empty substitution, empty store, fresh anchor, counter at zero.
  static State initial() {
    Anchor a = Anchor::fresh();
    return State(Env{0, a}, Substitution(a), ConstraintStore{});
  }

  const Env& env() const { return env_; }
  Anchor anchor() const { return env_.anchor; }
  const Substitution& subst() const { return subst_; }
  const ConstraintStore& constraints() const { return constraints_; }

  /// Logic type recorded for `v` while a type audit was active, if any.
  const std::type_index* tag(const VarId& v) const { return tags_.find(v.index); }

  State with_tag(const VarId& v, std::type_index t) const {
    State next = *this;
    next.tags_ = tags_.insert(v.index, t);
    return next;
  }

  /// A new unbound variable and the state with the counter advanced.
  std::pair<Term, State> fresh_var() const {
    State next = *this;
    VarId v{next.env_.next_index++, env_.anchor};
    return {Term(v), std::move(next)};
  }

  State with_subst(Substitution s) const {
    State next = *this;
    next.subst_ = std::move(s);
    return next;
  }

  State with_constraints(ConstraintStore c) const {
    State next = *this;
    next.constraints_ = std::move(c);
    return next;
  }

 private:
  State(Env env, Substitution s, ConstraintStore c) : env_(env), subst_(std::move(s)), constraints_(std::move(c)) {}

  Env env_;
  Substitution subst_;
  ConstraintStore constraints_;
  PersistentIntMap<std::type_index> tags_;
};

inline State initial_state() { return State::initial(); }

inline std::pair<Term, State> fresh_var(const State& st) { return st.fresh_var(); }

}  // namespace kanren
