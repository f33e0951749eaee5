#pragma once

// Shared helpers for the test suites: random generators and small oracles.

#include <algorithm>
#include <cstddef>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "kanren.hpp"

namespace testing {

using kanren::Stream;

inline std::mt19937& rng() {
  static std::mt19937 gen(0x5eed);
  return gen;
}

inline int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng()); }

/// `s` behind `d` suspensions.
template <class T>
Stream<T> delayed(std::size_t d, Stream<T> s) {
  for (std::size_t i = 0; i < d; ++i) s = Stream<T>::suspend([s] { return s; });
  return s;
}

/// Finite stream of `xs`, each element preceded by a random number (0..2) of suspensions.
template <class T>
Stream<T> jittered(const std::vector<T>& xs, std::size_t from = 0) {
  if (from == xs.size()) return delayed(static_cast<std::size_t>(uniform(0, 2)), Stream<T>{});
  auto rest = Stream<T>::suspend([xs, from] { return jittered(xs, from + 1); });
  return delayed(static_cast<std::size_t>(uniform(0, 2)), Stream<T>::cons(xs[from], rest));
}

/// Infinite stream k, k+step, ... with `gap` suspensions before each element.
inline Stream<int> counting(int k, int step, std::size_t gap) {
  return delayed(gap, Stream<int>::cons(k, Stream<int>::suspend([=] { return counting(k + step, step, gap); })));
}

/// A stream that only ever suspends.
inline Stream<int> never() {
  return Stream<int>::suspend([] { return never(); });
}

/// Forcing steps of `s` until `target` is produced; -1 if the stream ends
/// first or `limit` steps pass.
inline long steps_to(Stream<int> s, int target, long limit) {
  long steps = 0;
  while (steps <= limit) {
    if (s.is_suspended()) {
      s = s.force();
      ++steps;
    } else if (s.is_empty()) {
      return -1;
    } else {
      if (s.head() == target) return steps;
      s = Stream<int>(s.tail());
    }
  }
  return -1;
}

/// Merges an infinite left operand with a right operand holding a value at
/// depth d, for d up to 40 and several left shapes; counts cases where the
/// value needs more than 2d+2 forcing steps.
inline int fairness_violations() {
  int violations = 0;
  for (std::size_t d = 0; d <= 40; ++d) {
    std::vector<Stream<int>> lefts{never(), counting(1000, 1, 0), counting(1000, 1, 1), counting(1000, 1, 3)};
    std::vector<Stream<int>> rights{delayed(d, kanren::unit(-1)), delayed(d, Stream<int>::cons(-1, never()))};
    for (const auto& l : lefts) {
      for (const auto& r : rights) {
        long steps = steps_to(kanren::mplus(l, r), -1, static_cast<long>(10 * d + 100));
        if (steps < 0 || steps > static_cast<long>(2 * d + 2)) ++violations;
      }
    }
  }
  return violations;
}

template <class T>
std::vector<T> sorted(std::vector<T> xs) {
  std::sort(xs.begin(), xs.end());
  return xs;
}

}  // namespace testing
