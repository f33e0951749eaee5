#pragma once

// Benchmark suite shared by the command-line tool and the tests.

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <iomanip>
#include <optional>
#include <ostream>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "kanren.hpp"

namespace kanren::bench {

struct BenchResult {
  std::string name;
  std::size_t answers_requested = 0;
  std::size_t answers_found = 0;
  double wall_time = 0;  // seconds, mean over repeats
  std::size_t repeats = 0;
  bool correct = false;

  friend bool operator==(const BenchResult&, const BenchResult&) = default;
};

inline void to_json(nlohmann::json& j, const BenchResult& r) {
  j = nlohmann::json{{"name", r.name},       {"answers_requested", r.answers_requested},
                     {"answers_found", r.answers_found}, {"wall_time", r.wall_time},
                     {"repeats", r.repeats}, {"correct", r.correct}};
}

class SchemaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Strict decoding: exactly the six fields, each of the right kind.
inline BenchResult result_from_json(const nlohmann::json& j) {
  static const std::set<std::string> keys{"name", "answers_requested", "answers_found", "wall_time", "repeats", "correct"};
  if (!j.is_object()) throw SchemaError("result is not an object");
  if (j.size() != keys.size()) throw SchemaError("wrong number of fields");
  for (const auto& [k, v] : j.items()) {
    if (!keys.contains(k)) throw SchemaError("unexpected field " + k);
  }
  auto count = [&](const char* k) {
    const auto& v = j.at(k);
    if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0))
      throw SchemaError(std::string(k) + " is not a count");
    return v.get<std::size_t>();
  };
  BenchResult r;
  if (!j.at("name").is_string()) throw SchemaError("name is not a string");
  r.name = j.at("name").get<std::string>();
  r.answers_requested = count("answers_requested");
  r.answers_found = count("answers_found");
  r.repeats = count("repeats");
  if (!j.at("wall_time").is_number()) throw SchemaError("wall_time is not a number");
  r.wall_time = j.at("wall_time").get<double>();
  if (!j.at("correct").is_boolean()) throw SchemaError("correct is not a boolean");
  r.correct = j.at("correct").get<bool>();
  if (r.answers_found > r.answers_requested) throw SchemaError("answers_found exceeds answers_requested");
  if (r.wall_time < 0) throw SchemaError("negative wall_time");
  return r;
}

inline std::vector<BenchResult> results_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw SchemaError("top level is not an array");
  std::vector<BenchResult> out;
  for (const auto& x : j) out.push_back(result_from_json(x));
  return out;
}

using Clock = std::chrono::steady_clock;

/// Give-up point for one search.
class Deadline {
 public:
  explicit Deadline(double seconds)
      : end_(Clock::now() + std::chrono::duration_cast<Clock::duration>(std::chrono::duration<double>(seconds))) {}
  bool expired() const { return Clock::now() >= end_; }

 private:
  Clock::time_point end_;
};

/// Takes up to n answers, giving up at the deadline.
template <class U, class R>
std::pair<std::vector<Reified<U, R>>, bool> take_until(const Answers<U, R>& s, std::size_t n, const Deadline& d) {
  std::size_t steps = 0;
  // The clock is read every 64 steps.
  return s.take_while_allowed(n, [&] { return (++steps & 63) != 0 || !d.expired(); });
}

/// One execution of a benchmark.
struct Trial {
  std::size_t found = 0;
  bool completed = false;  // false on timeout
  bool correct = false;
  double seconds = 0;
};

struct Benchmark {
  std::string name;
  std::size_t requested;
  std::function<Trial(const Deadline&)> once;
};

namespace detail {

inline double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

inline std::uint64_t decode_answer(const Reified<FList<int>, reified_of<FList<int>>>& a) {
  return decode_num(a.prj());
}

}  // namespace detail

/// exp(3, 5) = 243.
inline Benchmark pow_benchmark() {
  return {"pow", 1, [](const Deadline& d) {
            Trial t;
            auto t0 = Clock::now();
            auto [answers, done] = run(
                q, [](Bits n) { return expo(build_num(3), build_num(5), n); },
                [&](auto a) { return take_until(a, 1, d); });
            t.seconds = detail::since(t0);
            t.completed = done;
            t.found = answers.size();
            t.correct = done && answers.size() == 1 && detail::decode_answer(answers[0]) == 243;
            return t;
          }};
}

/// log_3 243 = 5 with remainder 0.
inline Benchmark logo_benchmark() {
  return {"logo", 1, [](const Deadline& d) {
            Trial t;
            auto t0 = Clock::now();
            auto [got, rem] = run(
                qr, [](Bits e, Bits r) { return logo(build_num(243), build_num(3), e, r); },
                [&](auto e, auto r) {
                  auto answers = take_until(e, 1, d);
                  std::optional<std::uint64_t> remainder;
                  if (!answers.first.empty()) remainder = detail::decode_answer(r.take(1).at(0));
                  return std::make_pair(answers, remainder);
                });
            t.seconds = detail::since(t0);
            t.completed = got.second;
            t.found = got.first.size();
            t.correct = t.completed && t.found == 1 && detail::decode_answer(got.first[0]) == 5 && rem == 0u;
            return t;
          }};
}

/// Fixed pseudo-random input for the sort benchmark.
inline std::vector<int> sort_input() {
  std::mt19937 gen(20180713);
  std::uniform_int_distribution<int> dist(0, 9);
  std::vector<int> xs(30);
  for (int& x : xs) x = dist(gen);
  return xs;
}

inline std::vector<int> perm_input() { return {3, 6, 0, 5, 1, 4, 2}; }

inline Benchmark sort_benchmark() {
  return {"sort", 1, [](const Deadline& d) {
            Trial t;
            std::vector<int> xs = sort_input();
            auto t0 = Clock::now();
            auto [answers, done] = run(
                q, [&](List<Nat> out) { return sorto(inj_nat_list(xs), out); },
                [&](auto a) { return take_until(a, 1, d); });
            t.seconds = detail::since(t0);
            t.completed = done;
            t.found = answers.size();
            std::sort(xs.begin(), xs.end());
            t.correct = done && t.found == 1 && from_nat_list(answers[0].prj()) == xs;
            return t;
          }};
}

inline std::size_t factorial(std::size_t n) { return n <= 1 ? 1 : n * factorial(n - 1); }

/// Answers of the permutation query on `xs`.
inline std::pair<std::vector<std::vector<int>>, bool> permutations(const std::vector<int>& xs, std::size_t n,
                                                                   const Deadline& d) {
  auto [answers, done] = run(
      q,
      [&](List<Nat> out) { return permo(inj_nat_list(xs), out); },
      [&](auto a) { return take_until(a, n, d); });
  std::vector<std::vector<int>> out;
  for (const auto& a : answers) out.push_back(from_nat_list(a.prj()));
  return {out, done};
}

/// True iff `got` holds exactly the distinct permutations of `xs`.
inline bool all_permutations(std::vector<int> xs, const std::vector<std::vector<int>>& got) {
  std::sort(xs.begin(), xs.end());
  std::set<std::vector<int>> expected;
  do {
    expected.insert(xs);
  } while (std::next_permutation(xs.begin(), xs.end()));
  std::set<std::vector<int>> seen(got.begin(), got.end());
  return seen.size() == got.size() && seen == expected;
}

inline Benchmark perm_benchmark() {
  std::size_t n = factorial(perm_input().size());
  return {"perm", n, [n](const Deadline& d) {
            Trial t;
            auto t0 = Clock::now();
            auto [perms, done] = permutations(perm_input(), n, d);
            t.seconds = detail::since(t0);
            t.completed = done;
            t.found = perms.size();
            t.correct = done && t.found == n && all_permutations(perm_input(), perms);
            return t;
          }};
}

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"pow", "logo", "sort", "perm"};
  return names;
}

/// Benchmarks from the literature this tool does not provide.
inline bool is_unimplemented(const std::string& name) {
  return name == "quines" || name == "twines" || name == "trines";
}

inline std::optional<Benchmark> find_benchmark(const std::string& name) {
  if (name == "pow") return pow_benchmark();
  if (name == "logo") return logo_benchmark();
  if (name == "sort") return sort_benchmark();
  if (name == "perm") return perm_benchmark();
  return std::nullopt;
}

/// One warmup then `repeats` timed runs. A timeout at any point stops the
/// benchmark and marks it incorrect; wall_time then covers the attempt that
/// timed out.
inline BenchResult measure(const Benchmark& b, std::size_t repeats, double timeout_s) {
  BenchResult r;
  r.name = b.name;
  r.answers_requested = b.requested;
  Trial warm = b.once(Deadline(timeout_s));
  r.answers_found = warm.found;
  if (!warm.completed) {
    r.wall_time = warm.seconds;
    return r;
  }
  bool correct = warm.correct;
  double total = 0;
  for (std::size_t i = 0; i < repeats; ++i) {
    Trial t = b.once(Deadline(timeout_s));
    r.answers_found = t.found;
    if (!t.completed) {
      r.wall_time = t.seconds;
      r.repeats = i;
      return r;
    }
    correct = correct && t.correct;
    total += t.seconds;
    r.repeats = i + 1;
  }
  r.wall_time = repeats ? total / static_cast<double>(repeats) : warm.seconds;
  r.correct = correct;
  return r;
}

inline void print_table(std::ostream& os, const std::vector<BenchResult>& rs) {
  os << std::left << std::setw(8) << "name" << std::right << std::setw(10) << "requested" << std::setw(8) << "found"
     << std::setw(14) << "wall_time_s" << std::setw(9) << "repeats" << std::setw(9) << "correct" << '\n';
  for (const BenchResult& r : rs) {
    os << std::left << std::setw(8) << r.name << std::right << std::setw(10) << r.answers_requested << std::setw(8)
       << r.answers_found << std::setw(14) << std::fixed << std::setprecision(6) << r.wall_time << std::setw(9)
       << r.repeats << std::setw(9) << (r.correct ? "yes" : "no") << '\n';
  }
}

}  // namespace kanren::bench
