#pragma once

// Lazy interleaving streams (the search monad).
//
// A stream is Empty, a mature Cons cell, or a Suspended computation. Forcing
// a suspension performs one scheduling step and memoizes the result. mplus
// swaps its operands whenever the left one is suspended, which is the
// microKanren interleaving discipline.

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

namespace kanren {

/// Tag for `take(all, s)`.
struct All {};
inline constexpr All all{};

template <class T>
class Stream {
 public:
  using value_type = T;
  using Producer = std::function<Stream()>;

  /// The empty stream.
  Stream() = default;

  static Stream empty() { return Stream{}; }

  static Stream unit(T x) { return cons(std::move(x), Stream{}); }

  static Stream cons(T head, Stream tail) {
    return Stream(std::make_shared<Node>(Cell{std::move(head), std::move(tail)}));
  }

  /// A suspended node. `producer` is not invoked until the node is forced.
  static Stream suspend(Producer producer) {
    return Stream(std::make_shared<Node>(Thunk{std::move(producer), std::nullopt}));
  }

  Stream(const Stream&) = default;
  Stream(Stream&&) noexcept = default;
  Stream& operator=(const Stream&) = default;
  Stream& operator=(Stream&&) noexcept = default;

  ~Stream() { release_chain(); }

  bool is_empty() const { return node_ == nullptr; }
  bool is_suspended() const { return node_ && std::holds_alternative<Thunk>(node_->rep); }
  bool is_mature() const { return node_ && std::holds_alternative<Cell>(node_->rep); }

  /// Head of a mature stream.
  const T& head() const { return std::get<Cell>(node_->rep).head; }
  /// Tail of a mature stream.
  const Stream& tail() const { return std::get<Cell>(node_->rep).tail; }

  /// One scheduling step. Forcing a non-suspended stream returns it unchanged;
  /// forcing the same suspended node twice returns the memoized result.
  Stream force() const {
    if (!is_suspended()) return *this;
    auto& thunk = std::get<Thunk>(node_->rep);
    if (!thunk.memo) {
      Producer producer = std::move(thunk.producer);
      thunk.producer = nullptr;
      thunk.memo = producer();
    }
    return *thunk.memo;
  }

  /// Forces suspensions until the stream is empty or mature.
  /// `steps`, when given, is incremented once per forcing.
  Stream mature(std::size_t* steps = nullptr) const {
    Stream s = *this;
    while (s.is_suspended()) {
      s = s.force();
      if (steps) ++*steps;
    }
    return s;
  }

  /// First min(n, |s|) elements. Never forces past the n-th element.
  std::vector<T> take(std::size_t n) const {
    std::vector<T> out;
    if (n == 0) return out;
    Stream s = *this;
    while (true) {
      s = s.mature();
      if (s.is_empty()) break;
      out.push_back(s.head());
      if (out.size() == n) break;
      s = Stream(s.tail());
    }
    return out;
  }

  /// Every element; diverges on an infinite stream.
  std::vector<T> take(All) const {
    std::vector<T> out;
    for (Stream s = mature(); !s.is_empty(); s = Stream(s.tail()).mature()) out.push_back(s.head());
    return out;
  }

  /// Same as take(n) but gives up once `keep_going()` returns false between
  /// scheduling steps. The second member of the result is false on give-up.
  template <class Predicate>
  std::pair<std::vector<T>, bool> take_while_allowed(std::size_t n, Predicate&& keep_going) const {
    std::vector<T> out;
    if (n == 0) return {std::move(out), true};
    Stream s = *this;
    while (true) {
      while (s.is_suspended()) {
        if (!keep_going()) return {std::move(out), false};
        s = s.force();
      }
      if (s.is_empty()) break;
      out.push_back(s.head());
      if (out.size() == n) break;
      s = Stream(s.tail());
    }
    return {std::move(out), true};
  }

 private:
  struct Cell {
    T head;
    Stream tail;
  };
  struct Thunk {
    Producer producer;
    std::optional<Stream> memo;
  };
  struct Node {
    // Forcing mutates a thunk in place; streams are single-consumer.
    mutable std::variant<Cell, Thunk> rep;
    explicit Node(Cell c) : rep(std::move(c)) {}
    explicit Node(Thunk t) : rep(std::move(t)) {}
  };

  explicit Stream(std::shared_ptr<Node> node) : node_(std::move(node)) {}

  // Long tails and memo chains are torn down iteratively instead of through
  // nested destructors.
  void release_chain() noexcept {
    std::shared_ptr<Node> cur = std::move(node_);
    while (cur && cur.use_count() == 1) {
      std::shared_ptr<Node> next;
      if (auto* cell = std::get_if<Cell>(&cur->rep)) {
        next = std::move(cell->tail.node_);
      } else {
        auto& thunk = std::get<Thunk>(cur->rep);
        thunk.producer = nullptr;
        if (thunk.memo) next = std::move(thunk.memo->node_);
      }
      cur = std::move(next);
    }
  }

  std::shared_ptr<Node> node_;
};

template <class T>
Stream<T> unit(T x) {
  return Stream<T>::unit(std::move(x));
}

template <class T>
Stream<T> mzero() {
  return Stream<T>::empty();
}

template <class T, class F>
Stream<T> suspend(F&& producer) {
  return Stream<T>::suspend(std::forward<F>(producer));
}

/// Interleaving union. A suspended left operand is swapped to the right.
template <class T>
Stream<T> mplus(Stream<T> s1, Stream<T> s2) {
  if (s1.is_empty()) return s2;
  if (s1.is_suspended()) {
    return Stream<T>::suspend([s1 = std::move(s1), s2 = std::move(s2)]() mutable {
      return mplus(std::move(s2), s1.force());
    });
  }
  return Stream<T>::cons(s1.head(), mplus(s1.tail(), std::move(s2)));
}

/// Monadic bind: mplus of f(x) over every x in s, interleaved.
template <class T, class F, class U = typename std::invoke_result_t<F&, const T&>::value_type>
Stream<U> bind(Stream<T> s, F f) {
  if (s.is_empty()) return Stream<U>{};
  if (s.is_suspended()) {
    return Stream<U>::suspend([s = std::move(s), f = std::move(f)]() mutable {
      return bind(s.force(), std::move(f));
    });
  }
  Stream<U> first = f(s.head());
  return mplus(std::move(first), bind(s.tail(), std::move(f)));
}

/// Lazy element-wise map that preserves the suspension structure.
template <class T, class F, class U = std::invoke_result_t<F&, const T&>>
Stream<U> map(Stream<T> s, F f) {
  if (s.is_empty()) return Stream<U>{};
  if (s.is_suspended()) {
    return Stream<U>::suspend([s = std::move(s), f = std::move(f)]() mutable {
      return map(s.force(), std::move(f));
    });
  }
  U head = f(s.head());
  return Stream<U>::cons(std::move(head), Stream<U>::suspend([t = s.tail(), f]() mutable {
                           return map(std::move(t), std::move(f));
                         }));
}

template <class T>
std::vector<T> take(std::size_t n, const Stream<T>& s) {
  return s.take(n);
}

template <class T>
std::vector<T> take(All, const Stream<T>& s) {
  return s.take(all);
}

}  // namespace kanren
