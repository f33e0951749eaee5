#pragma once

// Peano naturals, comparison, and the sorting relations built on them.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <type_traits>
#include <vector>

#include "kanren/std/list.hpp"

namespace kanren {

template <class Self>
class NatF {
 public:
  static NatF zero() { return NatF(); }
  static NatF succ(Self pred) { return NatF(std::move(pred)); }

  bool is_zero() const { return !pred_; }
  const Self& pred() const { return *pred_; }

  friend bool operator==(const NatF& a, const NatF& b) { return a.pred_ == b.pred_; }

 private:
  NatF() = default;
  explicit NatF(Self pred) : pred_(std::move(pred)) {}
  std::optional<Self> pred_;
};

template <>
struct Functor<NatF> {
  static constexpr bool registered = true;

  template <class S, class FS>
  static auto fmap(const NatF<S>& x, FS&& fs) {
    using S2 = std::decay_t<std::invoke_result_t<FS&, const S&>>;
    if (x.is_zero()) return NatF<S2>::zero();
    return NatF<S2>::succ(fs(x.pred()));
  }

  static Term encode(const NatF<Term>& x) {
    static const Symbol o_tag = Symbol::intern("O");
    static const Symbol s_tag = Symbol::intern("S");
    if (x.is_zero()) return Term::make(o_tag, {});
    return Term::make(s_tag, {x.pred()});
  }

  static NatF<Term> decode(const Composite& c) {
    if (c.tag.name() == "O" && c.args.empty()) return NatF<Term>::zero();
    if (c.tag.name() == "S" && c.args.size() == 1) return NatF<Term>::succ(c.args[0]);
    throw StructuralError("not a natural number constructor: " + c.tag.name());
  }
};

using Nat = Fix<NatF>;
using NatH = Val<Nat>;

inline NatH o() { return inj(distrib(NatF<NatH>::zero())); }
inline NatH s(const NatH& n) { return inj(distrib(NatF<NatH>::succ(n))); }

inline Nat nat_of(std::size_t n) {
  Nat acc = NatF<Nat>::zero();
  for (std::size_t i = 0; i < n; ++i) acc = NatF<Nat>::succ(acc);
  return acc;
}

inline std::size_t nat_to_int(const Nat& n) {
  std::size_t k = 0;
  for (const Nat* cur = &n; !(*cur)->is_zero(); cur = &(*cur)->pred()) ++k;
  return k;
}

/// Logic list of Peano naturals from an integer list.
inline List<Nat> inj_nat_list(const std::vector<int>& xs) {
  std::vector<Nat> nats;
  nats.reserve(xs.size());
  for (int x : xs) {
    if (x < 0) throw std::invalid_argument("inj_nat_list: negative element");
    nats.push_back(nat_of(static_cast<std::size_t>(x)));
  }
  return list_of(nats);
}

inline std::vector<int> from_nat_list(const FList<Nat>& xs) {
  std::vector<int> out;
  for (const Nat& n : to_vector(xs)) out.push_back(static_cast<int>(nat_to_int(n)));
  return out;
}

/// a <= b.
inline Goal leo(const NatH& a, const NatH& b) {
  return conde({eq(a, o()), fresh([=](NatH a1, NatH b1) { return eq(a, s(a1)) && eq(b, s(b1)) && leo(a1, b1); })});
}

/// a > b.
inline Goal gto(const NatH& a, const NatH& b) {
  return conde({fresh([=](NatH a1) { return eq(a, s(a1)) && eq(b, o()); }),
                fresh([=](NatH a1, NatH b1) { return eq(a, s(a1)) && eq(b, s(b1)) && gto(a1, b1); })});
}

inline Goal minmaxo(const NatH& a, const NatH& b, const NatH& min, const NatH& max) {
  return conde({eq(min, a) && eq(max, b) && leo(a, b), eq(max, a) && eq(min, b) && gto(a, b)});
}

/// s is the smallest element of the nonempty list l; rest holds the others.
inline Goal smallesto(const List<Nat>& l, const NatH& s, const List<Nat>& rest) {
  return conde({eq(l, single<Nat>(s)) && eq(rest, nil<Nat>()),
                fresh([=](NatH h, List<Nat> t, NatH s1, List<Nat> t1, NatH max) {
                  return eq(rest, max % t1) && eq(l, h % t) && minmaxo(h, s1, s, max) && smallesto(t, s1, t1);
                })});
}

/// y is x sorted ascending.
inline Goal sorto(const List<Nat>& x, const List<Nat>& y) {
  return conde({eq(x, nil<Nat>()) && eq(y, nil<Nat>()), fresh([=](NatH s, List<Nat> xs, List<Nat> xs1) {
                  return eq(y, s % xs1) && sorto(xs, xs1) && smallesto(x, s, xs);
                })});
}

/// Lists that sort to the same list as l.
inline Goal permo(const List<Nat>& l, const List<Nat>& q) {
  return fresh([=](List<Nat> r) { return sorto(l, r) && sorto(q, r); });
}

}  // namespace kanren
