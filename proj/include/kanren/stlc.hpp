#pragma once

// Relational type inference for the simply typed lambda calculus.

#include <optional>
#include <string>
#include <type_traits>
#include <utility>

#include "kanren/std/list.hpp"
#include "kanren/std/pair.hpp"

namespace kanren::stlc {

enum class LamKind { V, App, Abs };

template <class Name, class Self>
class LamF {
 public:
  using Kind = LamKind;

  static LamF v(Name x) { return LamF(Kind::V, std::move(x), std::nullopt, std::nullopt); }
  static LamF app(Self m, Self n) { return LamF(Kind::App, std::nullopt, std::move(m), std::move(n)); }
  static LamF abs(Name x, Self body) { return LamF(Kind::Abs, std::move(x), std::move(body), std::nullopt); }

  Kind kind() const { return kind_; }
  const Name& name() const { return *name_; }
  // App: function and argument. Abs: body is left().
  const Self& left() const { return *left_; }
  const Self& right() const { return *right_; }

  friend bool operator==(const LamF& a, const LamF& b) {
    return a.kind_ == b.kind_ && a.name_ == b.name_ && a.left_ == b.left_ && a.right_ == b.right_;
  }

 private:
  LamF(Kind k, std::optional<Name> x, std::optional<Self> l, std::optional<Self> r)
      : kind_(k), name_(std::move(x)), left_(std::move(l)), right_(std::move(r)) {}
  Kind kind_;
  std::optional<Name> name_;
  std::optional<Self> left_;
  std::optional<Self> right_;
};

template <class A, class Self>
class TypeF {
 public:
  static TypeF p(A a) { return TypeF(std::move(a), std::nullopt); }
  static TypeF arr(Self from, Self to) { return TypeF(std::nullopt, std::make_pair(std::move(from), std::move(to))); }

  bool is_prim() const { return prim_.has_value(); }
  const A& prim() const { return *prim_; }
  const Self& from() const { return arrow_->first; }
  const Self& to() const { return arrow_->second; }

  friend bool operator==(const TypeF& a, const TypeF& b) { return a.prim_ == b.prim_ && a.arrow_ == b.arrow_; }

 private:
  TypeF(std::optional<A> a, std::optional<std::pair<Self, Self>> arrow) : prim_(std::move(a)), arrow_(std::move(arrow)) {}
  std::optional<A> prim_;
  std::optional<std::pair<Self, Self>> arrow_;
};

}  // namespace kanren::stlc

namespace kanren {

template <>
struct Functor<stlc::LamF> {
  static constexpr bool registered = true;

  template <class N, class S, class FN, class FS>
  static auto fmap(const stlc::LamF<N, S>& x, FN&& fn, FS&& fs) {
    using N2 = std::decay_t<std::invoke_result_t<FN&, const N&>>;
    using S2 = std::decay_t<std::invoke_result_t<FS&, const S&>>;
    using L = stlc::LamF<N2, S2>;
    switch (x.kind()) {
      case stlc::LamKind::V: return L::v(fn(x.name()));
      case stlc::LamKind::App: {
        S2 m = fs(x.left());
        return L::app(std::move(m), fs(x.right()));
      }
      default: {
        N2 name = fn(x.name());
        return L::abs(std::move(name), fs(x.left()));
      }
    }
  }

  static Term encode(const stlc::LamF<Term, Term>& x) {
    static const Symbol v_tag = Symbol::intern("V");
    static const Symbol app_tag = Symbol::intern("App");
    static const Symbol abs_tag = Symbol::intern("Abs");
    using L = stlc::LamF<Term, Term>;
    switch (x.kind()) {
      case L::Kind::V: return Term::make(v_tag, {x.name()});
      case L::Kind::App: return Term::make(app_tag, {x.left(), x.right()});
      default: return Term::make(abs_tag, {x.name(), x.left()});
    }
  }

  static stlc::LamF<Term, Term> decode(const Composite& c) {
    using L = stlc::LamF<Term, Term>;
    const std::string& t = c.tag.name();
    if (t == "V" && c.args.size() == 1) return L::v(c.args[0]);
    if (t == "App" && c.args.size() == 2) return L::app(c.args[0], c.args[1]);
    if (t == "Abs" && c.args.size() == 2) return L::abs(c.args[0], c.args[1]);
    throw StructuralError("not a lambda term constructor: " + t);
  }
};

template <>
struct Functor<stlc::TypeF> {
  static constexpr bool registered = true;

  template <class A, class S, class FA, class FS>
  static auto fmap(const stlc::TypeF<A, S>& x, FA&& fa, FS&& fs) {
    using A2 = std::decay_t<std::invoke_result_t<FA&, const A&>>;
    using S2 = std::decay_t<std::invoke_result_t<FS&, const S&>>;
    using T = stlc::TypeF<A2, S2>;
    if (x.is_prim()) return T::p(fa(x.prim()));
    S2 from = fs(x.from());
    return T::arr(std::move(from), fs(x.to()));
  }

  static Term encode(const stlc::TypeF<Term, Term>& x) {
    static const Symbol p_tag = Symbol::intern("P");
    static const Symbol arr_tag = Symbol::intern("Arr");
    if (x.is_prim()) return Term::make(p_tag, {x.prim()});
    return Term::make(arr_tag, {x.from(), x.to()});
  }

  static stlc::TypeF<Term, Term> decode(const Composite& c) {
    using T = stlc::TypeF<Term, Term>;
    if (c.tag.name() == "P" && c.args.size() == 1) return T::p(c.args[0]);
    if (c.tag.name() == "Arr" && c.args.size() == 2) return T::arr(c.args[0], c.args[1]);
    throw StructuralError("not a type constructor: " + c.tag.name());
  }
};

namespace stlc {

using Name = std::string;
using Lam = Fix<LamF, Name>;
using Type = Fix<TypeF, std::string>;
using NameH = Val<Name>;
using LamH = Val<Lam>;
using TypeH = Val<Type>;
using Env = List<PairF<Name, Type>>;

inline LamH v(const NameH& x) { return inj(distrib(LamF<NameH, LamH>::v(x))); }
inline LamH app(const LamH& m, const LamH& n) { return inj(distrib(LamF<NameH, LamH>::app(m, n))); }
inline LamH abs(const NameH& x, const LamH& body) { return inj(distrib(LamF<NameH, LamH>::abs(x, body))); }

inline TypeH p(const Val<std::string>& a) { return inj(distrib(TypeF<Val<std::string>, TypeH>::p(a))); }
inline TypeH arr(const TypeH& from, const TypeH& to) { return inj(distrib(TypeF<Val<std::string>, TypeH>::arr(from, to))); }

/// Plain constructors for building ground terms.
namespace plain {
inline Lam v(const Name& x) { return LamF<Name, Lam>::v(x); }
inline Lam app(const Lam& m, const Lam& n) { return LamF<Name, Lam>::app(m, n); }
inline Lam abs(const Name& x, const Lam& body) { return LamF<Name, Lam>::abs(x, body); }
inline Type p(const std::string& a) { return TypeF<std::string, Type>::p(a); }
inline Type arr(const Type& from, const Type& to) { return TypeF<std::string, Type>::arr(from, to); }
}  // namespace plain

/// t is the type bound to a in g; the nearest binding wins.
inline Goal lookupo(const NameH& a, const Env& g, const TypeH& t) {
  return fresh([=](NameH a1, TypeH t1, Env tl) {
    return eq(g, inj_pair<Name, Type>(a1, t1) % tl) &&
           conde({eq(a1, a) && eq(t1, t), neq(a1, a) && lookupo(a, tl, t)});
  });
}

inline Goal infero(const Env& gamma, const LamH& expr, const TypeH& typ) {
  return conde({
      fresh([=](NameH x) { return eq(expr, v(x)) && lookupo(x, gamma, typ); }),
      fresh([=](LamH m, LamH n, TypeH t) {
        return eq(expr, app(m, n)) && infero(gamma, m, arr(t, typ)) && infero(gamma, n, t);
      }),
      fresh([=](NameH x, LamH l, TypeH t, TypeH t1) {
        return eq(expr, abs(x, l)) && eq(typ, arr(t, t1)) && infero(inj_pair<Name, Type>(x, t) % gamma, l, t1);
      }),
  });
}

/// typ is a type of the closed term expr.
inline Goal infero(const LamH& expr, const TypeH& typ) { return infero(nil<PairF<Name, Type>>(), expr, typ); }

}  // namespace stlc

}  // namespace kanren
