#pragma once

// Logic lists.

#include <optional>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "kanren/logic.hpp"

namespace kanren {

template <class A, class Self>
class ListF {
 public:
  static ListF nil() { return ListF(); }
  static ListF cons(A head, Self tail) { return ListF(std::make_pair(std::move(head), std::move(tail))); }

  bool is_nil() const { return !cell_; }
  const A& head() const { return cell_->first; }
  const Self& tail() const { return cell_->second; }

  friend bool operator==(const ListF& a, const ListF& b) { return a.cell_ == b.cell_; }

 private:
  ListF() = default;
  explicit ListF(std::pair<A, Self> cell) : cell_(std::move(cell)) {}
  std::optional<std::pair<A, Self>> cell_;
};

template <>
struct Functor<ListF> {
  static constexpr bool registered = true;

  template <class A, class S, class FA, class FS>
  static auto fmap(const ListF<A, S>& x, FA&& fa, FS&& fs) {
    using A2 = std::decay_t<std::invoke_result_t<FA&, const A&>>;
    using S2 = std::decay_t<std::invoke_result_t<FS&, const S&>>;
    if (x.is_nil()) return ListF<A2, S2>::nil();
    A2 h = fa(x.head());
    return ListF<A2, S2>::cons(std::move(h), fs(x.tail()));
  }

  static Term encode(const ListF<Term, Term>& x) {
    static const Symbol nil_tag = Symbol::intern("Nil");
    static const Symbol cons_tag = Symbol::intern("Cons");
    if (x.is_nil()) return Term::make(nil_tag, {});
    return Term::make(cons_tag, {x.head(), x.tail()});
  }

  static ListF<Term, Term> decode(const Composite& c) {
    if (c.tag.name() == "Nil" && c.args.empty()) return ListF<Term, Term>::nil();
    if (c.tag.name() == "Cons" && c.args.size() == 2) return ListF<Term, Term>::cons(c.args[0], c.args[1]);
    throw StructuralError("not a list constructor: " + c.tag.name());
  }

  // [1, 2] for proper lists, [1 | _.0] for open ones.
  static std::string show(const ListF<std::string, std::string>& x) {
    if (x.is_nil()) return "[]";
    const std::string& t = x.tail();
    if (t == "[]") return "[" + x.head() + "]";
    if (!t.empty() && t.front() == '[') return "[" + x.head() + ", " + t.substr(1);
    return "[" + x.head() + " | " + t + "]";
  }
};

/// Plain list of A.
template <class A>
using FList = Fix<ListF, A>;

/// Handle of a fully logic value of plain type A.
template <class A>
using Val = Injected<A, reified_of<A>>;

/// Handle of a logic list of A.
template <class A>
using List = Val<FList<A>>;

template <class A>
List<A> nil() {
  return inj(distrib(ListF<Val<A>, List<A>>::nil()));
}

template <class A>
List<A> cons(const Val<A>& head, const List<A>& tail) {
  return inj(distrib(ListF<Val<A>, List<A>>::cons(head, tail)));
}

template <class A, class R>
Injected<FList<A>, LFix<ListF, R>> operator%(const Injected<A, R>& head, const Injected<FList<A>, LFix<ListF, R>>& tail) {
  return cons<A>(head, tail);
}

/// One-element list.
template <class A>
List<A> single(const Val<A>& x) {
  return cons<A>(x, nil<A>());
}

/// Logic list of the given element handles.
template <class A>
List<A> list_of(const std::vector<Val<A>>& xs) {
  List<A> acc = nil<A>();
  for (auto it = xs.rbegin(); it != xs.rend(); ++it) acc = cons<A>(*it, acc);
  return acc;
}

/// Plain list from a vector.
template <class A>
FList<A> from_vector(const std::vector<A>& xs) {
  FList<A> acc = ListF<A, FList<A>>::nil();
  for (auto it = xs.rbegin(); it != xs.rend(); ++it) acc = ListF<A, FList<A>>::cons(*it, acc);
  return acc;
}

/// Deep injection of a ground vector.
template <class A>
List<A> list_of(const std::vector<A>& xs) {
  return inject(from_vector(xs));
}

inline List<int> list_of(std::initializer_list<int> xs) { return list_of(std::vector<int>(xs)); }

template <class A>
std::vector<A> to_vector(const FList<A>& xs) {
  std::vector<A> out;
  for (const FList<A>* cur = &xs; !(*cur)->is_nil(); cur = &(*cur)->tail()) out.push_back((*cur)->head());
  return out;
}

/// Concatenation of x and y is xy.
template <class A>
Goal appendo(const List<A>& x, const List<A>& y, const List<A>& xy) {
  return (eq(x, nil<A>()) && eq(y, xy)) || fresh([=](Val<A> h, List<A> t) {
           return eq(x, h % t) && fresh([=](List<A> ty) { return eq(h % ty, xy) && delay([=] { return appendo(t, y, ty); }); });
         });
}

/// b is the reversal of a.
template <class A>
Goal reverso(const List<A>& a, const List<A>& b) {
  return conde({eq(a, nil<A>()) && eq(b, nil<A>()), fresh([=](Val<A> h, List<A> t) {
                  return eq(a, h % t) && fresh([=](List<A> a1) { return appendo(a1, single<A>(h), b) && reverso(t, a1); });
                })});
}

}  // namespace kanren
