#pragma once

// Logic pairs and options.

#include <optional>
#include <string>
#include <type_traits>
#include <utility>

#include "kanren/std/list.hpp"

namespace kanren {

template <class A, class B>
struct PairF {
  A first;
  B second;

  friend bool operator==(const PairF& x, const PairF& y) { return x.first == y.first && x.second == y.second; }
};

template <>
struct Functor<PairF> {
  static constexpr bool registered = true;

  template <class A, class B, class FA, class FB>
  static auto fmap(const PairF<A, B>& x, FA&& fa, FB&& fb) {
    using A2 = std::decay_t<std::invoke_result_t<FA&, const A&>>;
    using B2 = std::decay_t<std::invoke_result_t<FB&, const B&>>;
    return PairF<A2, B2>{fa(x.first), fb(x.second)};
  }

  static Term encode(const PairF<Term, Term>& x) {
    static const Symbol tag = Symbol::intern("Pair");
    return Term::make(tag, {x.first, x.second});
  }

  static PairF<Term, Term> decode(const Composite& c) {
    if (c.tag.name() == "Pair" && c.args.size() == 2) return {c.args[0], c.args[1]};
    throw StructuralError("not a pair constructor: " + c.tag.name());
  }

  static std::string show(const PairF<std::string, std::string>& x) { return "(" + x.first + ", " + x.second + ")"; }
};

template <class A, class B>
Val<PairF<A, B>> inj_pair(const Val<A>& a, const Val<B>& b) {
  return inj(distrib(PairF<Val<A>, Val<B>>{a, b}));
}

template <class A>
class OptionF {
 public:
  static OptionF none() { return OptionF(); }
  static OptionF some(A x) { return OptionF(std::move(x)); }

  bool is_none() const { return !value_; }
  const A& value() const { return *value_; }

  friend bool operator==(const OptionF& a, const OptionF& b) { return a.value_ == b.value_; }

 private:
  OptionF() = default;
  explicit OptionF(A x) : value_(std::move(x)) {}
  std::optional<A> value_;
};

template <>
struct Functor<OptionF> {
  static constexpr bool registered = true;

  template <class A, class FA>
  static auto fmap(const OptionF<A>& x, FA&& fa) {
    using A2 = std::decay_t<std::invoke_result_t<FA&, const A&>>;
    if (x.is_none()) return OptionF<A2>::none();
    return OptionF<A2>::some(fa(x.value()));
  }

  static Term encode(const OptionF<Term>& x) {
    static const Symbol none_tag = Symbol::intern("None");
    static const Symbol some_tag = Symbol::intern("Some");
    if (x.is_none()) return Term::make(none_tag, {});
    return Term::make(some_tag, {x.value()});
  }

  static OptionF<Term> decode(const Composite& c) {
    if (c.tag.name() == "None" && c.args.empty()) return OptionF<Term>::none();
    if (c.tag.name() == "Some" && c.args.size() == 1) return OptionF<Term>::some(c.args[0]);
    throw StructuralError("not an option constructor: " + c.tag.name());
  }
};

template <class A>
Val<OptionF<A>> some(const Val<A>& x) {
  return inj(distrib(OptionF<Val<A>>::some(x)));
}

template <class A>
Val<OptionF<A>> none() {
  return inj(distrib(OptionF<Val<A>>::none()));
}

}  // namespace kanren
