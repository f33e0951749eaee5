#pragma once

// Top-level queries. A numeral fixes how many query variables a run
// allocates; the handler receives one lazy answer stream per variable.

#include <cstddef>
#include <memory>
#include <tuple>
#include <utility>
#include <variant>

#include "kanren/logic.hpp"

namespace kanren {

/// Arity witness for run.
template <std::size_t N>
struct Numeral {
  static constexpr std::size_t arity = N;
};

inline constexpr Numeral<1> q{};
inline constexpr Numeral<2> qr{};
inline constexpr Numeral<3> qrs{};

template <std::size_t N>
constexpr Numeral<N + 1> succ(Numeral<N>) {
  return {};
}

template <class U, class R>
class Reified;

namespace detail {

template <class T>
struct Shallow {
  using type = T;
};

template <template <class...> class F, class... Xs>
  requires registered_functor<F>
struct Shallow<F<Xs...>> {
  using type = F<Reified<user_of<Xs>, Xs>...>;
};

}  // namespace detail

/// One query variable in one answer. Reification reads only the state the
/// answer came from.
template <class U, class R>
class Reified {
 public:
  using FreeVar = typename R::FreeVar;
  /// Top constructor with its children still unreified.
  using Shallow = typename detail::Shallow<typename R::value_type>::type;

  Reified(std::shared_ptr<const State> state, Term term) : state_(std::move(state)), term_(std::move(term)) {}

  /// The tagged answer, free variables numbered from zero.
  R reify() const {
    Helper h(state_);
    return Reifier<R>::apply(h, term_);
  }

  /// Custom reification: fn(helper, handle).
  template <class Fn>
  auto reify(Fn&& fn) const {
    Helper h(state_);
    return std::forward<Fn>(fn)(h, detail::HandleAccess::make<Injected<U, R>>(term_));
  }

  /// The plain answer; throws NotAValue unless the answer is ground.
  U prj() const { return project(reify()); }

  /// One-level view: a free variable with its forbidden terms, or the top
  /// constructor over Reified children.
  std::variant<FreeVar, Shallow> destruct() const {
    Helper h(state_);
    Term w = h.walk(term_);
    if (w.is_var()) return Reifier<R>::apply(h, w).var();
    if constexpr (primitive<Shallow>) {
      return Reifier<Shallow>::apply(h, w);
    } else {
      return shallow(w, static_cast<typename R::value_type*>(nullptr));
    }
  }

  /// Identity of the answer state.
  const void* origin() const { return state_.get(); }

  const Term& term() const { return term_; }

 private:
  template <template <class...> class F, class... Xs>
  Shallow shallow(const Term& w, F<Xs...>*) const {
    const Composite* c = w.as_composite();
    if (!c) throw StructuralError("expected a constructor application");
    return Functor<F>::fmap(Functor<F>::decode(*c),
                            [this](const Term& x) { return Reified<user_of<Xs>, Xs>(state_, x); }...);
  }

  std::shared_ptr<const State> state_;
  Term term_;
};

/// Answer stream for one query variable.
template <class U, class R>
using Answers = Stream<Reified<U, R>>;

namespace detail {

template <class H>
auto answers_for(const Stream<std::shared_ptr<const State>>& states, const H& handle) {
  using A = Reified<typename H::user_type, typename H::reified_type>;
  return map(states, [t = handle.term()](const std::shared_ptr<const State>& s) { return A(s, t); });
}

}  // namespace detail

/// Allocates N query variables, builds the goal from them and hands the
/// handler N answer streams. The k-th element of every stream comes from
/// the k-th answer state.
template <std::size_t N, class Builder, class Handler>
auto run(Numeral<N>, Builder builder, Handler handler) {
  using Args = typename detail::Params<Builder>::type;
  static_assert(std::tuple_size_v<Args> == N, "goal builder arity must match the numeral");
  State st = State::initial();
  Args handles = detail::Allocate<Args>::apply(st);
  Goal g = std::apply(builder, handles);
  Stream<std::shared_ptr<const State>> states =
      map(g(st), [](const State& s) { return std::make_shared<const State>(s); });
  return std::apply([&](const auto&... h) { return handler(detail::answers_for(states, h)...); }, handles);
}

}  // namespace kanren
