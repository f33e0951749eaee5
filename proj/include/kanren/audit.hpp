#pragma once

// Type audit: while a TypeAudit is alive on a thread, every variable created
// through the typed interface records its logic type in the state, every
// composite built by injection is tagged, and the bindings made by each
// unification goal are checked against them.

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <typeindex>
#include <typeinfo>
#include <unordered_map>
#include <vector>

#include "kanren/state.hpp"

namespace kanren {

template <class T, class Self>
class Logic;

class TypeAudit final {
 public:
  struct Violation {
    VarId var;
    std::string expected;
    std::string actual;
  };

  TypeAudit() : previous_(current()) { current() = this; }
  ~TypeAudit() { current() = previous_; }
  TypeAudit(const TypeAudit&) = delete;
  TypeAudit& operator=(const TypeAudit&) = delete;

  /// The audit installed on this thread, if any.
  static TypeAudit* active() { return current(); }

  void note_node(const Term& t, std::type_index tag) {
    if (auto node = t.composite_node()) nodes_.insert_or_assign(node.get(), Tagged{node, tag});
  }

  /// Checks new bindings made from state `st`.
  void check(const State& st, const Prefix& bindings) {
    for (const auto& [v, t] : bindings) {
      ++checked_;
      auto expected = tag_of(st, Term(v));
      auto actual = tag_of(st, t);
      if (!expected || !actual) {
        ++untagged_;
        continue;
      }
      if (*expected != *actual) violations_.push_back({v, expected->name(), actual->name()});
    }
  }

  std::size_t checked() const { return checked_; }
  std::size_t untagged() const { return untagged_; }
  const std::vector<Violation>& violations() const { return violations_; }

 private:
  struct Tagged {
    std::shared_ptr<const Composite> keep_alive;
    std::type_index tag;
  };

  static TypeAudit*& current() {
    thread_local TypeAudit* audit = nullptr;
    return audit;
  }

  // Templated so the atom tags are formed once Logic is complete.
  template <class Void = void>
  std::optional<std::type_index> tag_of(const State& st, const Term& t) const {
    if (const VarId* v = t.as_var()) {
      const std::type_index* tag = st.tag(*v);
      if (!tag) return std::nullopt;
      return *tag;
    }
    if (const Atom* a = t.as_atom()) {
      switch (a->payload().index()) {
        case 0: return std::type_index(typeid(Logic<int, Void>));
        case 1: return std::type_index(typeid(Logic<bool, Void>));
        case 2: return std::type_index(typeid(Logic<char, Void>));
        default: return std::type_index(typeid(Logic<std::string, Void>));
      }
    }
    auto it = nodes_.find(t.as_composite());
    if (it == nodes_.end()) return std::nullopt;
    return it->second.tag;
  }

  TypeAudit* previous_;
  std::unordered_map<const Composite*, Tagged> nodes_;
  std::size_t checked_ = 0;
  std::size_t untagged_ = 0;
  std::vector<Violation> violations_;
};

}  // namespace kanren
