#pragma once

// Goals and goal combinators over untyped terms.

#include <functional>
#include <initializer_list>
#include <memory>
#include <type_traits>
#include <utility>
#include <vector>

#include "kanren/audit.hpp"
#include "kanren/constraints.hpp"
#include "kanren/stream.hpp"

namespace kanren {

/// A function from a state to a lazy stream of successor states.
class Goal {
 public:
  using Fn = std::function<Stream<State>(const State&)>;

  template <class F>
    requires(std::is_invocable_r_v<Stream<State>, F&, const State&> && !std::is_same_v<std::decay_t<F>, Goal>)
  Goal(F f)  // NOLINT(google-explicit-constructor)
      : fn_(std::make_shared<const Fn>(std::move(f))) {}

  Stream<State> operator()(const State& st) const { return (*fn_)(st); }

 private:
  std::shared_ptr<const Fn> fn_;
};

inline Goal succeed() {
  return [](const State& st) { return Stream<State>::unit(st); };
}

inline Goal fail() {
  return [](const State&) { return Stream<State>{}; };
}

/// t1 === t2 on untyped terms.
inline Goal unify_terms(Term t1, Term t2) {
  return [t1 = std::move(t1), t2 = std::move(t2)](const State& st) {
    std::optional<Unification> u = unify(t1, t2, st.subst());
    if (!u) return Stream<State>{};
    if (TypeAudit* audit = TypeAudit::active()) audit->check(st, u->prefix);
    std::optional<State> next = verify_store(st.with_subst(std::move(u->subst)));
    if (!next) return Stream<State>{};
    return Stream<State>::unit(std::move(*next));
  };
}

/// t1 =/= t2 on untyped terms.
inline Goal diseq_terms(Term t1, Term t2) {
  return [t1 = std::move(t1), t2 = std::move(t2)](const State& st) {
    if (TypeAudit* audit = TypeAudit::active())
      if (auto u = unify(t1, t2, st.subst())) audit->check(st, u->prefix);
    std::optional<State> next = add_diseq(t1, t2, st);
    if (!next) return Stream<State>{};
    return Stream<State>::unit(std::move(*next));
  };
}

inline Goal conj(Goal g1, Goal g2) {
  return [g1 = std::move(g1), g2 = std::move(g2)](const State& st) { return bind(g1(st), g2); };
}

inline Goal disj(Goal g1, Goal g2) {
  return [g1 = std::move(g1), g2 = std::move(g2)](const State& st) { return mplus(g1(st), g2(st)); };
}

template <class... Gs>
Goal conj(Goal g1, Goal g2, Gs... rest) {
  return conj(conj(std::move(g1), std::move(g2)), Goal(std::move(rest))...);
}

template <class... Gs>
Goal disj(Goal g1, Goal g2, Gs... rest) {
  return disj(disj(std::move(g1), std::move(g2)), Goal(std::move(rest))...);
}

inline Goal operator&&(Goal g1, Goal g2) { return conj(std::move(g1), std::move(g2)); }
inline Goal operator||(Goal g1, Goal g2) { return disj(std::move(g1), std::move(g2)); }

/// Inverse-eta delay: the producer runs only when the resulting stream is forced.
inline Goal delay(std::function<Goal()> producer) {
  return [producer = std::move(producer)](const State& st) {
    return Stream<State>::suspend([producer, st] { return producer()(st); });
  };
}

namespace detail {
inline Goal suspended(Goal g) {
  return [g = std::move(g)](const State& st) {
    return Stream<State>::suspend([g, st] { return g(st); });
  };
}
}  // namespace detail

/// Left-associated disjunction of the alternatives, each behind a suspension.
/// An empty list is the failing goal.
inline Goal conde(std::vector<Goal> alternatives) {
  if (alternatives.empty()) return fail();
  Goal acc = detail::suspended(std::move(alternatives.front()));
  for (std::size_t i = 1; i < alternatives.size(); ++i)
    acc = disj(std::move(acc), detail::suspended(std::move(alternatives[i])));
  return acc;
}

inline Goal conde(std::initializer_list<Goal> alternatives) { return conde(std::vector<Goal>(alternatives)); }

/// Applies `body` to a freshly allocated variable.
inline Goal call_fresh(std::function<Goal(Term)> body) {
  return [body = std::move(body)](const State& st) {
    auto [v, next] = st.fresh_var();
    return body(std::move(v))(next);
  };
}

}  // namespace kanren
