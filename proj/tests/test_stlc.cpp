#include <set>
#include <string>
#include <vector>

#include "catch_amalgamated.hpp"
#include "stlc_oracle.hpp"

using namespace kanren;
using namespace kanren::stlc;

namespace {

stlc::Env env_of(const std::vector<std::pair<std::string, std::string>>& bindings) {
  stlc::Env g = nil<PairF<Name, Type>>();
  for (auto it = bindings.rbegin(); it != bindings.rend(); ++it)
    g = inj_pair<Name, Type>(lit(it->first), p(lit(it->second))) % g;
  return g;
}

std::vector<std::string> lookup(const std::string& x, const std::vector<std::pair<std::string, std::string>>& g) {
  return run(q, [&](TypeH t) { return lookupo(lit(x), env_of(g), t); },
             [](auto a) {
               std::vector<std::string> out;
               for (const auto& t : a.take(all)) out.push_back(show(t.reify()));
               return out;
             });
}

}  // namespace

TEST_CASE("lookupo", "[stlc]") {
  CHECK(lookup("x", {{"x", "a"}}) == std::vector<std::string>{"P(a)"});
  CHECK(lookup("y", {{"x", "a"}, {"y", "b"}}) == std::vector<std::string>{"P(b)"});
  CHECK(lookup("x", {{"x", "a"}, {"x", "b"}}) == std::vector<std::string>{"P(a)"});
  CHECK(lookup("z", {{"x", "a"}}).empty());
  CHECK(lookup("x", {}).empty());
}

TEST_CASE("infero examples", "[stlc]") {
  using namespace plain;
  CHECK(testing::relational_types(abs("x", v("x"))) == std::vector<std::string>{"Arr(_.0, _.0)"});
  CHECK(testing::relational_types(app(abs("x", v("x")), abs("x", v("x")))) ==
        std::vector<std::string>{"Arr(_.0, _.0)"});
  CHECK(testing::relational_types(abs("x", abs("y", v("x")))) == std::vector<std::string>{"Arr(_.0, Arr(_.1, _.0))"});
  CHECK(testing::relational_types(abs("x", abs("x", v("x")))) == std::vector<std::string>{"Arr(_.0, Arr(_.1, _.1))"});
  CHECK(testing::relational_types(abs("x", app(v("x"), v("x")))).empty());
  CHECK(testing::relational_types(v("x")).empty());
  CHECK(testing::relational_types(abs("x", v("y"))).empty());
}

TEST_CASE("infero in an environment", "[stlc]") {
  auto t = run(q, [](TypeH t) { return infero(env_of({{"f", "a"}}), v(lit("f")), t); },
               [](auto a) { return show(a.take(all).at(0).reify()); });
  CHECK(t == "P(a)");
}

TEST_CASE("inhabitants of a -> a include the identity", "[stlc]") {
  auto terms = run(q, [](LamH e) { return infero(e, arr(p(lit("a")), p(lit("a")))); },
                   [](auto a) { return a.take(5); });
  REQUIRE(terms.size() == 5);
  bool identity = false;
  for (const auto& e : terms) {
    auto r = e.reify();
    if (r.is_var() || r.value().kind() != LamKind::Abs) continue;
    const auto& name = r.value().name();
    const auto& body = r.value().left();
    if (!body.is_var() && body.value().kind() == LamKind::V && name == body.value().name()) identity = true;
  }
  CHECK(identity);
  std::set<std::string> distinct;
  for (const auto& e : terms) distinct.insert(show(e.reify()));
  CHECK(distinct.size() == terms.size());
}

TEST_CASE("the oracle agrees with itself on known types", "[stlc]") {
  using namespace plain;
  testing::TypeOracle o;
  CHECK(o.principal(abs("x", v("x"))) == "Arr(_.0, _.0)");
  CHECK(o.principal(abs("f", abs("x", app(v("f"), v("x"))))) == "Arr(Arr(_.0, _.1), Arr(_.0, _.1))");
  CHECK(o.principal(abs("x", app(v("x"), v("x")))) == std::nullopt);
  CHECK(o.principal(v("x")) == std::nullopt);
  CHECK(testing::all_terms(4, {"x", "y"}).size() == 15130);
}

TEST_CASE("infero matches functional inference on every small term", "[stlc][property]") {
  testing::StlcReport r = testing::check_stlc_sweep(4);
  for (const auto& e : r.examples) UNSCOPED_INFO(e);
  CHECK(r.terms == 15130);
  CHECK(r.typed > 100);
  CHECK(r.mismatches == 0);
}
