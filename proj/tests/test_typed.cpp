#include <memory>
#include <string>
#include <vector>

#include "catch_amalgamated.hpp"
#include "support.hpp"

using namespace kanren;
using stlc::Lam;
using stlc::LamF;
using stlc::Type;
using stlc::TypeF;

namespace {

// Independent node counts of plain values.
std::size_t nodes(int) { return 1; }
std::size_t nodes(bool) { return 1; }
std::size_t nodes(const std::string&) { return 1; }
template <class A>
std::size_t nodes(const FList<A>& xs) {
  std::size_t n = 1;
  for (const A& x : to_vector(xs)) n += 1 + nodes(x);
  return n;
}
std::size_t nodes(const Nat& n) { return nat_to_int(n) + 1; }
template <class A, class B>
std::size_t nodes(const PairF<A, B>& p) {
  return 1 + nodes(p.first) + nodes(p.second);
}
template <class A>
std::size_t nodes(const OptionF<A>& o) {
  return 1 + (o.is_none() ? 0 : nodes(o.value()));
}
std::size_t nodes(const Type& t) { return t->is_prim() ? 2 : 1 + nodes(t->from()) + nodes(t->to()); }
std::size_t nodes(const Lam& l) {
  switch (l->kind()) {
    case stlc::LamKind::V: return 2;
    case stlc::LamKind::App: return 1 + nodes(l->left()) + nodes(l->right());
    default: return 2 + nodes(l->left());
  }
}

std::string random_name() { return std::string(1, static_cast<char>('a' + testing::uniform(0, 3))); }

FList<int> random_ints() {
  std::vector<int> xs(static_cast<std::size_t>(testing::uniform(0, 5)));
  for (int& x : xs) x = testing::uniform(-50, 50);
  return from_vector(xs);
}

Type random_type(int depth) {
  if (depth <= 1 || testing::uniform(0, 1) == 0) return stlc::plain::p(random_name());
  return stlc::plain::arr(random_type(depth - 1), random_type(depth - 1));
}

Lam random_lam(int depth) {
  int pick = depth <= 1 ? 0 : testing::uniform(0, 2);
  if (pick == 0) return stlc::plain::v(random_name());
  if (pick == 1) return stlc::plain::app(random_lam(depth - 1), random_lam(depth - 1));
  return stlc::plain::abs(random_name(), random_lam(depth - 1));
}

// A finished state with a few unrelated bindings and constraints.
std::shared_ptr<const State> random_state() {
  State st = State::initial();
  Goal g = succeed();
  for (int i = 0; i < 3; ++i) {
    auto [v, next] = st.fresh_var();
    st = next;
    g = conj(g, testing::uniform(0, 1) ? unify_terms(v, Atom::integer(i)) : diseq_terms(v, Atom::integer(i)));
  }
  return std::make_shared<const State>(g(st).take(1).at(0));
}

template <class U>
void round_trip(const U& x) {
  Helper h(random_state());
  auto handle = inject(x);
  REQUIRE(project(reify_value(h, handle)) == x);
  REQUIRE(term_size(handle.term()) == nodes(x));
}

template <class A, class B>
concept can_unify = requires(A a, B b) { eq(a, b); };

template <class A, class B>
concept can_diseq = requires(A a, B b) { neq(a, b); };

}  // namespace

static_assert(can_unify<Prim<int>, Prim<int>>);
static_assert(!can_unify<Prim<int>, Prim<std::string>>);
static_assert(!can_unify<List<int>, Prim<int>>);
static_assert(!can_unify<List<int>, List<std::string>>);
static_assert(!can_diseq<List<int>, List<bool>>);
// Bookkeeping-only handles carry no logic positions and cannot be unified.
static_assert(!can_unify<Injected<int, int>, Injected<int, int>>);
static_assert(std::is_same_v<reified_of<FList<int>>, LFix<ListF, Logic<int>>>);
static_assert(std::is_same_v<user_of<LFix<ListF, Logic<int>>>, FList<int>>);
static_assert(std::is_same_v<reified_of<OptionF<int>>, Logic<OptionF<Logic<int>>>>);

TEST_CASE("lift and inj", "[typed]") {
  CHECK(lift(5).term() == Term(Atom::integer(5)));
  CHECK(lift(true).term() == Term(Atom::boolean(true)));
  CHECK(inj(lift(5)).term() == lift(5).term());
  CHECK(lit(5).term() == inj(lift(5)).term());
  CHECK(inj(inj(lift(5))).term() == lift(5).term());
}

TEST_CASE("distrib builds one node per constructor", "[typed]") {
  Prim<int> x = lit(7);
  auto s = some<int>(x);
  const Composite* c = s.term().as_composite();
  REQUIRE(c);
  CHECK(c->tag.name() == "Some");
  CHECK(c->args == std::vector<Term>{x.term()});
  auto n = none<int>();
  REQUIRE(n.term().as_composite());
  CHECK(n.term().as_composite()->tag.name() == "None");
  CHECK(n.term().as_composite()->args.empty());
  auto l = cons<int>(x, nil<int>());
  CHECK(l.term().as_composite()->tag.name() == "Cons");
  CHECK(l.term().as_composite()->args.size() == 2);
  CHECK(single<int>(x).term() == l.term());
  CHECK(inj_pair<int, int>(x, lit(8)).term() == Term::make("Pair", {Atom::integer(7), Atom::integer(8)}));
}

TEST_CASE("reification of ground and partial values", "[typed]") {
  Helper h(std::make_shared<const State>(State::initial()));
  auto r = reify_value(h, list_of({1, 2}));
  REQUIRE_FALSE(r.is_var());
  REQUIRE_FALSE(r.value().is_nil());
  CHECK(r.value().head().value() == 1);
  CHECK(r.value().tail().value().head().value() == 2);
  CHECK(r.value().tail().value().tail().value().is_nil());
  CHECK(show(r) == "[1, 2]");

  auto ans = run(
      q, [](Val<OptionF<int>> q) { return fresh([=](Prim<int> r) { return eq(q, some<int>(r)); }); },
      [](auto a) { return a.take(1).at(0).reify(); });
  REQUIRE_FALSE(ans.is_var());
  REQUIRE_FALSE(ans.value().is_none());
  REQUIRE(ans.value().value().is_var());
  CHECK(ans.value().value().var().index == 0);
  CHECK(ans.value().value().var().forbidden.empty());
  CHECK(show(ans) == "Some(_.0)");
}

TEST_CASE("mutually constrained variables reify finitely", "[typed]") {
  auto ans = run(
      q,
      [](Val<OptionF<int>> q) {
        return fresh([=](Prim<int> r, Prim<int> s) { return eq(q, some<int>(r)) && neq(r, s) && neq(s, r); });
      },
      [](auto a) { return a.take(1).at(0).reify(); });
  const Logic<int>& r = ans.value().value();
  REQUIRE(r.is_var());
  CHECK(r.var().index == 0);
  REQUIRE(r.var().forbidden.size() == 1);
  const Logic<int>& s = r.var().forbidden[0];
  REQUIRE(s.is_var());
  CHECK(s.var().index == 1);
  REQUIRE(s.var().forbidden.size() == 1);
  CHECK(s.var().forbidden[0].var().index == 0);
  CHECK(show(ans) == "Some(_.0{=/= _.1})");
}

TEST_CASE("reification size stays bounded for cliques of disequalities", "[typed][property]") {
  for (std::size_t n = 1; n <= 8; ++n) {
    std::string shown = run(
        q,
        [n](List<int> q) {
          return fresh([=](List<int> tail) {
            // q = [x1 .. xn] with xi =/= xj for every ordered pair.
            std::function<Goal(std::size_t, List<int>, std::vector<Prim<int>>)> build =
                [&](std::size_t k, List<int> rest, std::vector<Prim<int>> xs) -> Goal {
              if (k == n) {
                Goal g = eq(rest, nil<int>());
                for (const auto& a : xs)
                  for (const auto& b : xs)
                    if (a.term() != b.term()) g = g && neq(a, b);
                return g;
              }
              return fresh([=](Prim<int> x, List<int> more) {
                auto ys = xs;
                ys.push_back(x);
                return eq(rest, x % more) && build(k + 1, more, ys);
              });
            };
            return eq(q, tail) && build(0, tail, {});
          });
        },
        [](auto a) { return show(a.take(1).at(0).reify()); });
    std::size_t store = n * (n - 1);
    std::size_t term = 2 * n + 1;
    CHECK(shown.size() <= 16 * (store + 1) * term);
    if (n > 1) CHECK(shown.find("_.0{=/= ") == 1);
  }
}

TEST_CASE("projection is partial", "[typed]") {
  CHECK(project(Logic<int>(5)) == 5);
  CHECK_THROWS_AS(project(Logic<int>(Logic<int>::FreeVar{0, {}})), NotAValue);
  auto open = run(
      q, [](List<int> q) { return fresh([=](Prim<int> x) { return eq(q, lit(1) % (x % nil<int>())); }); },
      [](auto a) { return a.take(1).at(0); });
  CHECK_THROWS_AS(open.prj(), NotAValue);
  CHECK(show(open.reify()) == "[1, _.0]");
}

TEST_CASE("injection round trips and preserves size", "[typed][property]") {
  for (int trial = 0; trial < 300; ++trial) {
    round_trip(testing::uniform(-1000, 1000));
    round_trip(testing::uniform(0, 1) == 1);
    round_trip(random_name());
    round_trip(random_ints());
    round_trip(nat_of(static_cast<std::size_t>(testing::uniform(0, 12))));
    round_trip(PairF<int, FList<int>>{testing::uniform(0, 9), random_ints()});
    round_trip(testing::uniform(0, 1) ? OptionF<Nat>::none() : OptionF<Nat>::some(nat_of(3)));
    round_trip(from_vector(std::vector<FList<int>>{random_ints(), random_ints()}));
    round_trip(random_type(4));
    round_trip(random_lam(4));
  }
}

TEST_CASE("fmap with identities is the identity", "[typed][property]") {
  auto id = [](const auto& x) { return x; };
  for (int trial = 0; trial < 200; ++trial) {
    FList<int> xs = random_ints();
    CHECK(Functor<ListF>::fmap(*xs, id, id) == *xs);
    Lam l = random_lam(4);
    CHECK(Functor<LamF>::fmap(*l, id, id) == *l);
    Type t = random_type(4);
    CHECK(Functor<TypeF>::fmap(*t, id, id) == *t);
    Nat n = nat_of(static_cast<std::size_t>(testing::uniform(0, 5)));
    CHECK(Functor<NatF>::fmap(*n, id) == *n);
    PairF<int, int> p{testing::uniform(0, 5), testing::uniform(0, 5)};
    CHECK(Functor<PairF>::fmap(p, id, id) == p);
  }
}

TEST_CASE("decoding rejects foreign constructors", "[typed]") {
  Composite bogus{Symbol::intern("Bogus"), {}, true};
  CHECK_THROWS_AS(Functor<ListF>::decode(bogus), StructuralError);
  CHECK_THROWS_AS(Functor<NatF>::decode(bogus), StructuralError);
  Helper h(std::make_shared<const State>(State::initial()));
  auto wrong = detail::HandleAccess::make<Injected<FList<int>, reified_of<FList<int>>>>(Term::make("S", {}));
  CHECK_THROWS_AS(reify_value(h, wrong), StructuralError);
}

TEST_CASE("rendering", "[typed]") {
  CHECK(show(Logic<int>(3)) == "3");
  CHECK(show(Logic<int>(Logic<int>::FreeVar{2, {Logic<int>(5), Logic<int>(6)}})) == "_.2{=/= 5, 6}");
  CHECK(show(Logic<int>(Logic<int>::FreeVar{2, {Logic<int>(5)}}), true) == "_.2");
  CHECK(show(nat_of(2)) == "S(S(O))");
  CHECK(show(stlc::plain::arr(stlc::plain::p("a"), stlc::plain::p("b"))) == "Arr(P(a), P(b))");
  CHECK(show(PairF<int, bool>{1, true}) == "(1, true)");
}
