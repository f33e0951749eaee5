#include <algorithm>
#include <set>
#include <vector>

#include "bench.hpp"
#include "catch_amalgamated.hpp"
#include "support.hpp"

using namespace kanren;
using bench::Deadline;
using bench::take_until;

namespace {

using Ints = std::vector<int>;

std::vector<Ints> nat_answers(const auto& answers) {
  std::vector<Ints> out;
  for (const auto& a : answers) out.push_back(from_nat_list(a.prj()));
  return out;
}

int nat_answer(const auto& a) { return static_cast<int>(nat_to_int(a.prj())); }

// Every list of length at most `len` over 0..max_value.
std::vector<Ints> small_lists(std::size_t len, int max_value) {
  std::vector<Ints> out{{}};
  for (std::size_t i = 0; i < out.size(); ++i)
    if (out[i].size() < len)
      for (int x = 0; x <= max_value; ++x) {
        Ints next = out[i];
        next.push_back(x);
        out.push_back(next);
      }
  return out;
}

std::set<Ints> distinct_permutations(Ints xs) {
  std::set<Ints> out;
  std::sort(xs.begin(), xs.end());
  do out.insert(xs);
  while (std::next_permutation(xs.begin(), xs.end()));
  return out;
}

}  // namespace

TEST_CASE("comparison relations", "[sort]") {
  auto holds = [](auto goal) { return run(q, [&](Prim<int>) { return goal; }, [](auto a) { return a.take(all).size(); }); };
  for (int a = 0; a <= 4; ++a)
    for (int b = 0; b <= 4; ++b) {
      NatH x = inject(nat_of(static_cast<std::size_t>(a)));
      NatH y = inject(nat_of(static_cast<std::size_t>(b)));
      CHECK(holds(leo(x, y)) == (a <= b ? 1u : 0u));
      CHECK(holds(gto(x, y)) == (a > b ? 1u : 0u));
      auto mm = run(qr, [&](NatH lo, NatH hi) { return minmaxo(x, y, lo, hi); },
                    [](auto lo, auto hi) {
                      auto l = lo.take(all);
                      auto h = hi.take(all);
                      REQUIRE(l.size() == 1);
                      return std::pair{nat_answer(l[0]), nat_answer(h[0])};
                    });
      CHECK(mm == std::pair{std::min(a, b), std::max(a, b)});
    }
}

TEST_CASE("smallesto", "[sort]") {
  auto got = run(qr, [](NatH s, List<Nat> rest) { return smallesto(inj_nat_list({2, 1}), s, rest); },
                 [](auto s, auto rest) {
                   auto a = s.take(all);
                   auto b = rest.take(all);
                   REQUIRE(a.size() == 1);
                   return std::pair{nat_answer(a[0]), from_nat_list(b[0].prj())};
                 });
  CHECK(got == std::pair{1, Ints{2}});
  CHECK(run(q, [](NatH s) { return fresh([=](List<Nat> r) { return smallesto(nil<Nat>(), s, r); }); },
            [](auto a) { return a.take(all).size(); }) == 0);
}

TEST_CASE("sorto examples", "[sort]") {
  auto sorted = run(q, [](List<Nat> q) { return sorto(inj_nat_list({2, 1, 3}), q); },
                    [](auto a) { return nat_answers(a.take(1)); });
  CHECK(sorted == std::vector<Ints>{{1, 2, 3}});
  auto empty = run(q, [](List<Nat> q) { return sorto(nil<Nat>(), q); }, [](auto a) { return nat_answers(a.take(1)); });
  CHECK(empty == std::vector<Ints>{{}});
}

TEST_CASE("sorto forward is deterministic on small lists", "[sort][property]") {
  for (const Ints& xs : small_lists(3, 3)) {
    // The search for a second answer may not terminate; it is cut off.
    auto answers = run(q, [&](List<Nat> q) { return sorto(inj_nat_list(xs), q); },
                       [](auto a) { return take_until(a, 2, Deadline(0.25)).first; });
    INFO("input size " << xs.size());
    REQUIRE_FALSE(answers.empty());
    REQUIRE(from_nat_list(answers[0].prj()) == testing::sorted(xs));
    REQUIRE(answers.size() == 1);
  }
}

TEST_CASE("permo examples", "[sort]") {
  auto perms = run(q, [](List<Nat> q) { return permo(inj_nat_list({1, 2, 3}), q); },
                   [](auto a) { return nat_answers(a.take(6)); });
  CHECK(perms.size() == 6);
  CHECK(std::set<Ints>(perms.begin(), perms.end()) == distinct_permutations({1, 2, 3}));

  auto empty = run(q, [](List<Nat> q) { return permo(nil<Nat>(), q); }, [](auto a) { return nat_answers(a.take(1)); });
  CHECK(empty == std::vector<Ints>{{}});
}

TEST_CASE("permo on repeated elements yields each distinct arrangement once", "[sort]") {
  auto [answers, done] = run(q, [](List<Nat> q) { return permo(inj_nat_list({1, 1}), q); },
                             [](auto a) { return take_until(a, 2, Deadline(2.0)); });
  REQUIRE(answers.size() == 1);
  CHECK(from_nat_list(answers[0].prj()) == Ints{1, 1});
  // No second answer exists, and the search for one does not terminate.
  CHECK_FALSE(done);
}

TEST_CASE("permo matches the permutation oracle on small lists", "[sort][property]") {
  for (const Ints& xs : small_lists(3, 2)) {
    std::set<Ints> expected = distinct_permutations(xs);
    auto [answers, done] = run(q, [&](List<Nat> q) { return permo(inj_nat_list(xs), q); },
                               [&](auto a) { return take_until(a, expected.size(), Deadline(5.0)); });
    REQUIRE(done);
    auto got = nat_answers(answers);
    REQUIRE(got.size() == expected.size());
    REQUIRE(std::set<Ints>(got.begin(), got.end()) == expected);
  }
}
