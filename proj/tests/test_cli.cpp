#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <set>
#include <string>
#include <vector>

#include "bench.hpp"
#include "catch_amalgamated.hpp"
#include "json.hpp"

namespace {

struct Outcome {
  std::string out;
  int status;
};

// Runs the CLI with stderr discarded.
Outcome cli(const std::string& args) {
  std::string cmd = std::string(KANREN_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe);
  std::string out;
  std::array<char, 4096> buf{};
  while (std::size_t n = std::fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  int raw = pclose(pipe);
  return {out, WIFEXITED(raw) ? WEXITSTATUS(raw) : -1};
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (pos < s.size()) {
    std::size_t nl = s.find('\n', pos);
    out.push_back(s.substr(pos, nl - pos));
    if (nl == std::string::npos) break;
    pos = nl + 1;
  }
  return out;
}

using kanren::bench::BenchResult;

}  // namespace

TEST_CASE("demo append", "[cli]") {
  CHECK(cli("demo append").out == "q = [1, 2]\n");
  auto split = cli("demo append --list 1,2");
  CHECK(split.status == 0);
  CHECK(lines(split.out) == std::vector<std::string>{"q = [], r = [1, 2]", "q = [1], r = [2]", "q = [1, 2], r = []"});
}

TEST_CASE("demo reverse, sort and perm", "[cli]") {
  CHECK(cli("demo reverse --list 4,5").out == "q = [5, 4]\n");
  CHECK(cli("demo sort --list 3,0,2").out == "q = [0, 2, 3]\n");
  auto perm = lines(cli("demo perm").out);
  CHECK(perm.size() == 6);
  CHECK(std::set<std::string>(perm.begin(), perm.end()).size() == 6);
  CHECK(cli("demo sort --list x").status == 2);
  CHECK(cli("demo nope").status != 0);
}

TEST_CASE("demo stlc and diseq", "[cli]") {
  auto stlc = cli("demo stlc").out;
  CHECK(stlc.find("\\x. x : Arr(_.0, _.0)") != std::string::npos);
  CHECK(stlc.find("\\x. \\x. x : Arr(_.0, Arr(_.1, _.1))") != std::string::npos);
  CHECK(stlc.find("inhabitant of a -> a: Abs(_.0, V(_.0))") != std::string::npos);
  auto diseq = cli("demo diseq").out;
  CHECK(diseq.find("foo: q = Some(_.0{=/= _.1})") != std::string::npos);
  CHECK(diseq.find("q =/= 5: q = _.0{=/= 5}") != std::string::npos);
}

TEST_CASE("bench emits schema-conforming json", "[cli]") {
  auto run = cli("bench --suite pow --repeats 1 --format json");
  CHECK(run.status == 0);
  auto results = kanren::bench::results_from_json(nlohmann::json::parse(run.out));
  REQUIRE(results.size() == 1);
  CHECK(results[0].name == "pow");
  CHECK(results[0].answers_requested == 1);
  CHECK(results[0].answers_found == 1);
  CHECK(results[0].repeats == 1);
  CHECK(results[0].correct);
  CHECK(results[0].wall_time > 0);
}

TEST_CASE("bench exit status reflects correctness", "[cli]") {
  auto timed_out = cli("bench --suite sort --repeats 1 --timeout-s 0.2 --format json");
  CHECK(timed_out.status == 1);
  auto results = kanren::bench::results_from_json(nlohmann::json::parse(timed_out.out));
  REQUIRE(results.size() == 1);
  CHECK_FALSE(results[0].correct);
  CHECK(cli("bench --suite nope").status == 2);
  auto quines = cli("bench --suite quines");
  CHECK(quines.status == 1);
  CHECK(quines.out.empty());
}

TEST_CASE("bench results round trip through json", "[cli][property]") {
  for (int trial = 0; trial < 200; ++trial) {
    BenchResult r{"b" + std::to_string(trial), static_cast<std::size_t>(trial % 7 + 4),
                  static_cast<std::size_t>(trial % 5), trial * 0.125 + 1e-9 * trial,
                  static_cast<std::size_t>(trial % 11), trial % 2 == 0};
    nlohmann::json j = r;
    BenchResult back = kanren::bench::result_from_json(nlohmann::json::parse(j.dump()));
    CHECK(back.name == r.name);
    CHECK(back.answers_requested == r.answers_requested);
    CHECK(back.answers_found == r.answers_found);
    CHECK(back.wall_time == r.wall_time);
    CHECK(back.repeats == r.repeats);
    CHECK(back.correct == r.correct);
  }
}

TEST_CASE("bench json is parsed strictly", "[cli]") {
  nlohmann::json good = BenchResult{"pow", 1, 1, 0.5, 3, true};
  CHECK_NOTHROW(kanren::bench::result_from_json(good));
  auto extra = good;
  extra["extra"] = 1;
  CHECK_THROWS_AS(kanren::bench::result_from_json(extra), kanren::bench::SchemaError);
  auto missing = good;
  missing.erase("repeats");
  CHECK_THROWS_AS(kanren::bench::result_from_json(missing), kanren::bench::SchemaError);
  auto wrong = good;
  wrong["correct"] = "yes";
  CHECK_THROWS_AS(kanren::bench::result_from_json(wrong), kanren::bench::SchemaError);
  auto negative = good;
  negative["wall_time"] = -1.0;
  CHECK_THROWS_AS(kanren::bench::result_from_json(negative), kanren::bench::SchemaError);
  CHECK_THROWS_AS(kanren::bench::results_from_json(good), kanren::bench::SchemaError);
}
