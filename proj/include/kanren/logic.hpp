#pragma once

// Typed facade over core terms.
//
// Injected<U, R> is a term handle that remembers, at the type level only,
// the plain user type U it encodes and the tagged type R that reification
// will produce. Logic<T> is the tagged form: a free variable (with the terms
// it is constrained not to equal) or a value. User datatypes are written as
// fully polymorphic functors and registered through a Functor<F>
// specialization supplying fmap, encode and decode; injection, projection,
// reification and rendering are derived from those three.

#include <concepts>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <tuple>
#include <type_traits>
#include <typeindex>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <variant>
#include <vector>

#include "kanren/audit.hpp"
#include "kanren/goal.hpp"

namespace kanren {

/// Immutable heap cell with value semantics. Breaks the size recursion of
/// recursive datatypes.
template <class T>
class Box {
 public:
  // Templated so that copying a Box never needs T to be complete.
  template <class V>
    requires std::same_as<std::remove_cvref_t<V>, T>
  Box(V&& value) : ptr_(std::make_shared<const T>(std::forward<V>(value))) {}  // NOLINT(google-explicit-constructor)
  const T& operator*() const { return *ptr_; }
  const T* operator->() const { return ptr_.get(); }
  friend bool operator==(const Box& a, const Box& b) { return a.ptr_ == b.ptr_ || *a.ptr_ == *b.ptr_; }

 private:
  std::shared_ptr<const T> ptr_;
};

/// Tagged logic value: a free variable or a value of T. `Self` names the
/// type stored in forbidden lists when Logic is the base of a recursive type.
template <class T, class Self = void>
class Logic {
 public:
  using value_type = T;
  using self_type = std::conditional_t<std::is_void_v<Self>, Logic, Self>;

  struct FreeVar {
    std::size_t index;
    std::vector<self_type> forbidden;
  };

  template <class V>
    requires std::same_as<std::remove_cvref_t<V>, T>
  Logic(V&& value) : rep_(std::in_place_index<1>, std::forward<V>(value)) {}  // NOLINT(google-explicit-constructor)
  Logic(FreeVar v) : rep_(std::in_place_index<0>, std::move(v)) {}    // NOLINT(google-explicit-constructor)

  bool is_var() const { return rep_.index() == 0; }
  const FreeVar& var() const { return std::get<0>(rep_); }
  const T& value() const { return *std::get<1>(rep_); }

  friend bool operator==(const Logic& a, const Logic& b) {
    if (a.is_var() != b.is_var()) return false;
    if (a.is_var()) return a.var().index == b.var().index && a.var().forbidden == b.var().forbidden;
    return a.value() == b.value();
  }

 private:
  std::variant<FreeVar, Box<T>> rep_;
};

/// Registration point for user functors. Specializations set `registered`
/// and provide:
///   fmap(const F<Xs...>&, fs...)      one function per type parameter, applied
///                                     to the children left to right
///   encode(const F<Term...>&) -> Term
///   decode(const Composite&) -> F<Term...>   (throws StructuralError)
/// and optionally show(const F<std::string...>&) -> std::string.
template <template <class...> class F>
struct Functor {
  static constexpr bool registered = false;
};

template <template <class...> class F>
concept registered_functor = Functor<F>::registered;

/// Primitive leaf types stored as atoms.
template <class T>
struct Primitive : std::false_type {};

template <>
struct Primitive<int> : std::true_type {
  static Atom to_atom(int v) { return Atom::integer(v); }
  static std::optional<int> from_atom(const Atom& a) {
    auto* v = std::get_if<std::int64_t>(&a.payload());
    if (!v || *v < std::numeric_limits<int>::min() || *v > std::numeric_limits<int>::max()) return std::nullopt;
    return static_cast<int>(*v);
  }
  static void show(std::ostream& os, int v) { os << v; }
};

template <>
struct Primitive<bool> : std::true_type {
  static Atom to_atom(bool v) { return Atom::boolean(v); }
  static std::optional<bool> from_atom(const Atom& a) {
    auto* v = std::get_if<bool>(&a.payload());
    return v ? std::optional<bool>(*v) : std::nullopt;
  }
  static void show(std::ostream& os, bool v) { os << (v ? "true" : "false"); }
};

template <>
struct Primitive<char> : std::true_type {
  static Atom to_atom(char v) { return Atom::character(v); }
  static std::optional<char> from_atom(const Atom& a) {
    auto* v = std::get_if<char>(&a.payload());
    return v ? std::optional<char>(*v) : std::nullopt;
  }
  static void show(std::ostream& os, char v) { os << v; }
};

template <>
struct Primitive<std::string> : std::true_type {
  static Atom to_atom(const std::string& v) { return Atom::string(v); }
  static std::optional<std::string> from_atom(const Atom& a) {
    auto* v = std::get_if<Symbol>(&a.payload());
    return v ? std::optional<std::string>(v->name()) : std::nullopt;
  }
  static void show(std::ostream& os, const std::string& v) { os << v; }
};

template <class T>
concept primitive = Primitive<T>::value;

/// Fixpoint of a user functor: the plain recursive type whose last functor
/// parameter is the type itself.
template <template <class...> class F, class... Ps>
struct Fix {
  using unfolded = F<Ps..., Fix>;

  template <class V>
    requires std::same_as<std::remove_cvref_t<V>, unfolded>
  Fix(V&& v) : out(std::forward<V>(v)) {}  // NOLINT(google-explicit-constructor)
  const unfolded& operator*() const { return *out; }
  const unfolded* operator->() const { return out.operator->(); }

  friend bool operator==(const Fix& a, const Fix& b) { return a.out == b.out; }

  Box<unfolded> out;
};

/// Fixpoint on the tagged side: a Logic whose value is F applied to the
/// reified parameters and to the type itself.
template <template <class...> class F, class... Rs>
struct LFix : Logic<F<Rs..., LFix<F, Rs...>>, LFix<F, Rs...>> {
  using base = Logic<F<Rs..., LFix>, LFix>;
  using unfolded = Logic<F<Rs..., LFix>>;
  using FreeVar = typename base::FreeVar;
  template <class V>
    requires std::same_as<std::remove_cvref_t<V>, F<Rs..., LFix>>
  LFix(V&& value) : base(std::forward<V>(value)) {}  // NOLINT(google-explicit-constructor)
  LFix(FreeVar v) : base(std::move(v)) {}                 // NOLINT(google-explicit-constructor)
  LFix(base b) : base(std::move(b)) {}                    // NOLINT(google-explicit-constructor)
};

namespace detail {

template <class T, class S>
std::true_type logic_probe(const Logic<T, S>*);
std::false_type logic_probe(...);

template <class R>
concept logic_type = decltype(logic_probe(static_cast<const R*>(nullptr)))::value;

template <class Rolled, class Unfolded>
concept rolls_from = requires { typename Rolled::unfolded; } && std::same_as<typename Rolled::unfolded, Unfolded>;

/// Audit tag of a logic type; rolled and unfolded forms share one tag.
template <class R>
std::type_index canonical_tag() {
  if constexpr (requires { typename R::unfolded; }) {
    return std::type_index(typeid(typename R::unfolded));
  } else {
    return std::type_index(typeid(R));
  }
}

struct HandleAccess;

}  // namespace detail

/// Typed handle over a core term. U is the plain type, R the tagged type.
template <class U, class R>
class Injected {
 public:
  using user_type = U;
  using reified_type = R;

  const Term& term() const { return term_; }

  /// Folds F<A.., Fix> into Fix (and likewise on the tagged side).
  template <class U2, class R2>
    requires(detail::rolls_from<U, U2> && detail::rolls_from<R, R2>)
  Injected(const Injected<U2, R2>& unfolded) : term_(unfolded.term()) {}  // NOLINT(google-explicit-constructor)

 private:
  friend struct detail::HandleAccess;
  explicit Injected(Term t) : term_(std::move(t)) {}
  Term term_;
};

namespace detail {

struct HandleAccess {
  template <class H>
  static H make(Term t) {
    return H(std::move(t));
  }
};

template <class X>
struct UserOf;
template <class P>
  requires primitive<P>
struct UserOf<P> {
  using type = P;
};
template <class T, class S>
struct UserOf<Logic<T, S>> {
  using type = typename UserOf<T>::type;
};
template <template <class...> class F, class... Rs>
struct UserOf<LFix<F, Rs...>> {
  using type = Fix<F, typename UserOf<Rs>::type...>;
};
template <template <class...> class F, class... Xs>
  requires registered_functor<F>
struct UserOf<F<Xs...>> {
  using type = F<typename UserOf<Xs>::type...>;
};
template <template <class...> class F, class... Xs>
struct UserOf<Fix<F, Xs...>> {
  using type = Fix<F, typename UserOf<Xs>::type...>;
};

template <class U>
struct ReifiedOf;
template <class P>
  requires primitive<P>
struct ReifiedOf<P> {
  using type = Logic<P>;
};
template <template <class...> class F, class... Us>
  requires registered_functor<F>
struct ReifiedOf<F<Us...>> {
  using type = Logic<F<typename ReifiedOf<Us>::type...>>;
};
template <template <class...> class F, class... Us>
struct ReifiedOf<Fix<F, Us...>> {
  using type = LFix<F, typename ReifiedOf<Us>::type...>;
};

template <class X, class Fn>
Fn&& repeat(Fn&& f) {
  return std::forward<Fn>(f);
}

}  // namespace detail

/// Plain type a tagged type projects to.
template <class R>
using user_of = typename detail::UserOf<R>::type;

/// Fully tagged type of a plain type.
template <class U>
using reified_of = typename detail::ReifiedOf<U>::type;

/// Handle for a primitive logic value.
template <class T>
using Prim = Injected<T, Logic<T>>;

namespace detail {

template <template <class...> class F, class... Us>
  requires registered_functor<F>
Term encode_functor(const F<Us...>& x, bool tag);

template <class U>
Term encode(const U& x, bool tag) {
  Term t = [&]() -> Term {
    if constexpr (primitive<U>) {
      return Term(Primitive<U>::to_atom(x));
    } else if constexpr (requires { typename U::unfolded; }) {
      return encode(*x, tag);
    } else {
      return encode_functor(x, tag);
    }
  }();
  if (tag) {
    if (TypeAudit* audit = TypeAudit::active()) audit->note_node(t, canonical_tag<reified_of<U>>());
  }
  return t;
}

template <template <class...> class F, class... Us>
  requires registered_functor<F>
Term encode_functor(const F<Us...>& x, bool tag) {
  return Functor<F>::encode(Functor<F>::fmap(x, [tag](const Us& c) { return encode(c, tag); }...));
}

}  // namespace detail

/// Enters the bookkeeping domain: a ground value with no logic positions.
template <class U>
Injected<U, U> lift(const U& x) {
  return detail::HandleAccess::make<Injected<U, U>>(detail::encode(x, false));
}

inline Injected<std::string, std::string> lift(const char* s) { return lift(std::string(s)); }

/// Records one tagging level in the type; the term is unchanged.
template <class U, class B>
Injected<U, Logic<B>> inj(const Injected<U, B>& h) {
  if (TypeAudit* audit = TypeAudit::active()) audit->note_node(h.term(), std::type_index(typeid(Logic<B>)));
  return detail::HandleAccess::make<Injected<U, Logic<B>>>(h.term());
}

/// inj(lift(x)): a primitive logic value.
template <class T>
auto lit(const T& x) {
  return inj(lift(x));
}

inline Prim<std::string> lit(const char* s) { return inj(lift(std::string(s))); }

/// Moves the typed bookkeeping from the children of a functor value to the
/// functor itself. One node allocation.
template <template <class...> class F, class... As, class... Rs>
  requires registered_functor<F>
Injected<F<As...>, F<Rs...>> distrib(const F<Injected<As, Rs>...>& x) {
  return detail::HandleAccess::make<Injected<F<As...>, F<Rs...>>>(
      Functor<F>::encode(Functor<F>::fmap(x, detail::repeat<As>([](const auto& h) { return h.term(); })...)));
}

/// Deep injection of a ground value with logic positions everywhere.
template <class U>
Injected<U, reified_of<U>> inject(const U& x) {
  return detail::HandleAccess::make<Injected<U, reified_of<U>>>(detail::encode(x, true));
}

/// Read-only view of one answer state, used by reifiers. Also numbers free
/// variables densely in order of first encounter.
class Helper {
 public:
  explicit Helper(std::shared_ptr<const State> state) : state_(std::move(state)) {}

  Term walk(const Term& t) const { return kanren::walk(state_->subst(), t); }
  Term walk_all(const Term& t) const { return kanren::walk_all(state_->subst(), t); }
  std::vector<Term> constraints_for(const VarId& v) const { return kanren::constraints_for(*state_, v); }

  /// Identity of the state this helper reads.
  const void* origin() const { return state_.get(); }

  std::size_t display_index(const VarId& v) {
    auto [it, inserted] = names_.try_emplace(v, names_.size());
    (void)inserted;
    return it->second;
  }

  bool expanding(const VarId& v) const { return expanding_.contains(v); }

  /// Marks `v` as having its constraints reified for the guard's lifetime.
  class Expansion {
   public:
    Expansion(Helper& h, const VarId& v) : h_(h), v_(v) { h_.expanding_.insert(v_); }
    ~Expansion() { h_.expanding_.erase(v_); }
    Expansion(const Expansion&) = delete;
    Expansion& operator=(const Expansion&) = delete;

   private:
    Helper& h_;
    VarId v_;
  };

 private:
  std::shared_ptr<const State> state_;
  std::unordered_map<VarId, std::size_t, detail::VarIdHash> names_;
  std::unordered_set<VarId, detail::VarIdHash> expanding_;
};

/// Reification of a term at type X against a helper.
template <class X>
struct Reifier;

template <class P>
  requires primitive<P>
struct Reifier<P> {
  static P apply(Helper& h, const Term& t) {
    Term w = h.walk(t);
    const Atom* a = w.as_atom();
    if (!a) throw StructuralError("expected an atom");
    std::optional<P> v = Primitive<P>::from_atom(*a);
    if (!v) throw StructuralError("atom of the wrong kind");
    return *v;
  }
};

template <class T, class S>
struct Reifier<Logic<T, S>> {
  using L = Logic<T, S>;
  using Self = typename L::self_type;

  static L apply(Helper& h, const Term& t) {
    Term w = h.walk(t);
    if (const VarId* v = w.as_var()) {
      typename L::FreeVar free{h.display_index(*v), {}};
      if (!h.expanding(*v)) {
        Helper::Expansion guard(h, *v);
        for (const Term& f : h.constraints_for(*v)) free.forbidden.push_back(Reifier<Self>::apply(h, f));
      }
      return L(std::move(free));
    }
    return L(Reifier<T>::apply(h, w));
  }
};

template <template <class...> class F, class... Rs>
struct Reifier<LFix<F, Rs...>> {
  static LFix<F, Rs...> apply(Helper& h, const Term& t) {
    return LFix<F, Rs...>(Reifier<typename LFix<F, Rs...>::base>::apply(h, t));
  }
};

template <template <class...> class F, class... Xs>
  requires registered_functor<F>
struct Reifier<F<Xs...>> {
  static F<Xs...> apply(Helper& h, const Term& t) {
    Term w = h.walk(t);
    const Composite* c = w.as_composite();
    if (!c) throw StructuralError("expected a constructor application");
    return Functor<F>::fmap(Functor<F>::decode(*c), [&h](const Term& x) { return Reifier<Xs>::apply(h, x); }...);
  }
};

template <template <class...> class F, class... Xs>
struct Reifier<Fix<F, Xs...>> {
  static Fix<F, Xs...> apply(Helper& h, const Term& t) {
    return Fix<F, Xs...>(Reifier<typename Fix<F, Xs...>::unfolded>::apply(h, t));
  }
};

/// Tagged value of `h` in the helper's state.
template <class U, class R>
R reify_value(Helper& helper, const Injected<U, R>& h) {
  return Reifier<R>::apply(helper, h.term());
}

/// Partial projection from a tagged to a plain value.
template <class X>
struct Projector;

template <class P>
  requires primitive<P>
struct Projector<P> {
  static P apply(const P& x) { return x; }
};

template <class T, class S>
struct Projector<Logic<T, S>> {
  static user_of<T> apply(const Logic<T, S>& x) {
    if (x.is_var()) throw NotAValue();
    return Projector<T>::apply(x.value());
  }
};

template <template <class...> class F, class... Rs>
struct Projector<LFix<F, Rs...>> {
  static user_of<LFix<F, Rs...>> apply(const LFix<F, Rs...>& x) {
    if (x.is_var()) throw NotAValue();
    return user_of<LFix<F, Rs...>>(Projector<F<Rs..., LFix<F, Rs...>>>::apply(x.value()));
  }
};

template <template <class...> class F, class... Xs>
  requires registered_functor<F>
struct Projector<F<Xs...>> {
  static user_of<F<Xs...>> apply(const F<Xs...>& x) {
    return Functor<F>::fmap(x, [](const Xs& c) { return Projector<Xs>::apply(c); }...);
  }
};

template <template <class...> class F, class... Xs>
struct Projector<Fix<F, Xs...>> {
  static user_of<Fix<F, Xs...>> apply(const Fix<F, Xs...>& x) {
    return user_of<Fix<F, Xs...>>(Projector<typename Fix<F, Xs...>::unfolded>::apply(*x));
  }
};

/// The plain value; throws NotAValue if a free variable occurs anywhere.
template <class X>
user_of<X> project(const X& x) {
  return Projector<X>::apply(x);
}

/// Rendering of tagged and plain values. Free variables print as `_.k`;
/// a nonempty forbidden list prints as `_.k{=/= a, b}` except inside another
/// forbidden list.
template <class X>
struct Shower;

template <class X>
std::string show(const X& x, bool bare = false) {
  std::ostringstream os;
  Shower<X>::apply(os, x, bare);
  return os.str();
}

template <class P>
  requires primitive<P>
struct Shower<P> {
  static void apply(std::ostream& os, const P& x, bool) { Primitive<P>::show(os, x); }
};

template <class T, class S>
struct Shower<Logic<T, S>> {
  static void apply(std::ostream& os, const Logic<T, S>& x, bool bare) {
    if (!x.is_var()) {
      Shower<T>::apply(os, x.value(), bare);
      return;
    }
    os << "_." << x.var().index;
    if (bare || x.var().forbidden.empty()) return;
    os << "{=/= ";
    bool first = true;
    for (const auto& f : x.var().forbidden) {
      if (!first) os << ", ";
      first = false;
      os << show(f, true);
    }
    os << '}';
  }
};

template <template <class...> class F, class... Rs>
struct Shower<LFix<F, Rs...>> {
  static void apply(std::ostream& os, const LFix<F, Rs...>& x, bool bare) {
    Shower<typename LFix<F, Rs...>::base>::apply(os, x, bare);
  }
};

template <template <class...> class F, class... Xs>
  requires registered_functor<F>
struct Shower<F<Xs...>> {
  static void apply(std::ostream& os, const F<Xs...>& x, bool bare) {
    auto parts = Functor<F>::fmap(x, [bare](const Xs& c) { return show(c, bare); }...);
    if constexpr (requires { { Functor<F>::show(parts) } -> std::convertible_to<std::string>; }) {
      os << Functor<F>::show(parts);
    } else {
      os << to_string(Functor<F>::encode(
          Functor<F>::fmap(parts, detail::repeat<Xs>([](const std::string& s) { return Term(Atom::string(s)); })...)));
    }
  }
};

template <template <class...> class F, class... Xs>
struct Shower<Fix<F, Xs...>> {
  static void apply(std::ostream& os, const Fix<F, Xs...>& x, bool bare) {
    Shower<typename Fix<F, Xs...>::unfolded>::apply(os, *x, bare);
  }
};

/// t1 === t2. Both sides have the same logic type.
template <class U, class R>
  requires detail::logic_type<R>
Goal eq(const Injected<U, R>& a, const std::type_identity_t<Injected<U, R>>& b) {
  return unify_terms(a.term(), b.term());
}

/// t1 =/= t2.
template <class U, class R>
  requires detail::logic_type<R>
Goal neq(const Injected<U, R>& a, const std::type_identity_t<Injected<U, R>>& b) {
  return diseq_terms(a.term(), b.term());
}

namespace detail {

template <class F>
struct Params : Params<decltype(&F::operator())> {};
template <class C, class Ret, class... A>
struct Params<Ret (C::*)(A...) const> {
  using type = std::tuple<std::decay_t<A>...>;
};
template <class C, class Ret, class... A>
struct Params<Ret (C::*)(A...)> {
  using type = std::tuple<std::decay_t<A>...>;
};
template <class Ret, class... A>
struct Params<Ret (*)(A...)> {
  using type = std::tuple<std::decay_t<A>...>;
};

template <class H>
H new_var(State& st) {
  static_assert(logic_type<typename H::reified_type>, "fresh variables must have a logic type");
  auto [t, next] = st.fresh_var();
  st = std::move(next);
  if (TypeAudit::active()) st = st.with_tag(*t.as_var(), canonical_tag<typename H::reified_type>());
  return HandleAccess::make<H>(std::move(t));
}

template <class Tuple>
struct Allocate;
template <class... Hs>
struct Allocate<std::tuple<Hs...>> {
  // Braced initialization evaluates left to right, so indices follow parameter order.
  static std::tuple<Hs...> apply(State& st) { return std::tuple<Hs...>{new_var<Hs>(st)...}; }
};

}  // namespace detail

/// Introduces one fresh variable per parameter of `body`; the parameter
/// types choose the variables' logic types.
template <class F>
Goal fresh(F body) {
  using Args = typename detail::Params<F>::type;
  return [body = std::move(body)](const State& st) {
    State next = st;
    Args handles = detail::Allocate<Args>::apply(next);
    Goal g = std::apply(body, std::move(handles));
    return g(next);
  };
}

}  // namespace kanren
