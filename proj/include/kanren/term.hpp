#pragma once

// Untyped core terms: variables, constructor applications and primitive atoms.

#include <atomic>
#include <cstdint>
#include <memory>
#include <mutex>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <variant>
#include <vector>

namespace kanren {

/// Interned string. Equal names share one address.
class Symbol {
 public:
  static Symbol intern(std::string_view name) {
    static std::mutex mu;
    static std::unordered_set<std::string> table;
    std::lock_guard lock(mu);
    return Symbol(&*table.emplace(name).first);
  }

  const std::string& name() const { return *name_; }

  friend bool operator==(Symbol a, Symbol b) { return a.name_ == b.name_; }

 private:
  explicit Symbol(const std::string* name) : name_(name) {}
  const std::string* name_;
};

/// Run-scope token. One per top-level run; never handed to user code.
class Anchor {
 public:
  friend bool operator==(Anchor a, Anchor b) { return a.id_ == b.id_; }

 private:
  friend class State;
  friend struct AnchorAccess;
  explicit Anchor(std::uint64_t id) : id_(id) {}
  static Anchor fresh() {
    static std::atomic<std::uint64_t> next{1};
    return Anchor(next.fetch_add(1, std::memory_order_relaxed));
  }
  std::uint64_t id_;
};

/// Read-only access to an anchor's identity, for hashing and diagnostics.
struct AnchorAccess {
  static std::uint64_t id(Anchor a) { return a.id_; }
};

struct VarId {
  std::uint32_t index;
  Anchor anchor;

  friend bool operator==(const VarId& a, const VarId& b) {
    return a.index == b.index && a.anchor == b.anchor;
  }
};

/// Primitive leaf value.
class Atom {
 public:
  using Payload = std::variant<std::int64_t, bool, char, Symbol>;

  static Atom integer(std::int64_t v) { return Atom(Payload(std::in_place_index<0>, v)); }
  static Atom boolean(bool v) { return Atom(Payload(std::in_place_index<1>, v)); }
  static Atom character(char v) { return Atom(Payload(std::in_place_index<2>, v)); }
  static Atom string(std::string_view v) {
    return Atom(Payload(std::in_place_index<3>, Symbol::intern(v)));
  }

  const Payload& payload() const { return payload_; }

  friend bool operator==(const Atom& a, const Atom& b) { return a.payload_ == b.payload_; }

 private:
  explicit Atom(Payload p) : payload_(std::move(p)) {}
  Payload payload_;
};

struct Composite;

class Term {
 public:
  Term(VarId v) : rep_(v) {}  // NOLINT(google-explicit-constructor)
  Term(Atom a) : rep_(std::move(a)) {}  // NOLINT(google-explicit-constructor)

  static Term make(Symbol tag, std::vector<Term> args);
  static Term make(std::string_view tag, std::vector<Term> args) {
    return make(Symbol::intern(tag), std::move(args));
  }

  bool is_var() const { return std::holds_alternative<VarId>(rep_); }
  bool is_atom() const { return std::holds_alternative<Atom>(rep_); }
  bool is_composite() const { return std::holds_alternative<Node>(rep_); }

  const VarId* as_var() const { return std::get_if<VarId>(&rep_); }
  const Atom* as_atom() const { return std::get_if<Atom>(&rep_); }
  const Composite* as_composite() const {
    auto* n = std::get_if<Node>(&rep_);
    return n ? n->get() : nullptr;
  }

  /// Owning handle of a composite node; null for variables and atoms.
  std::shared_ptr<const Composite> composite_node() const {
    auto* n = std::get_if<Node>(&rep_);
    return n ? *n : nullptr;
  }

  friend bool operator==(const Term& a, const Term& b);

 private:
  using Node = std::shared_ptr<const Composite>;
  explicit Term(Node n) : rep_(std::move(n)) {}
  std::variant<VarId, Atom, Node> rep_;
};

struct Composite {
  Symbol tag;
  std::vector<Term> args;
  // No variable anywhere below; set by Term::make.
  bool ground = false;
};

inline Term Term::make(Symbol tag, std::vector<Term> args) {
  bool ground = true;
  for (const Term& a : args) {
    if (a.is_var() || (a.is_composite() && !a.as_composite()->ground)) {
      ground = false;
      break;
    }
  }
  return Term(std::make_shared<const Composite>(Composite{tag, std::move(args), ground}));
}

/// True iff no variable occurs in `t`.
inline bool is_ground(const Term& t) {
  if (t.is_var()) return false;
  const Composite* c = t.as_composite();
  return !c || c->ground;
}

inline bool operator==(const Term& a, const Term& b) {
  if (a.rep_.index() != b.rep_.index()) return false;
  if (auto* v = a.as_var()) return *v == *b.as_var();
  if (auto* x = a.as_atom()) return *x == *b.as_atom();
  const Composite* ca = a.as_composite();
  const Composite* cb = b.as_composite();
  if (ca == cb) return true;
  return ca->tag == cb->tag && ca->args == cb->args;
}

/// Node count.
inline std::size_t term_size(const Term& t) {
  const Composite* c = t.as_composite();
  if (!c) return 1;
  std::size_t n = 1;
  for (const Term& a : c->args) n += term_size(a);
  return n;
}

inline std::ostream& operator<<(std::ostream& os, const Atom& a) {
  std::visit(
      [&](const auto& v) {
        using V = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<V, bool>) {
          os << (v ? "true" : "false");
        } else if constexpr (std::is_same_v<V, Symbol>) {
          os << v.name();
        } else {
          os << v;
        }
      },
      a.payload());
  return os;
}

namespace detail {

struct VarIdHash {
  std::size_t operator()(const VarId& v) const noexcept {
    return std::hash<std::uint64_t>{}((AnchorAccess::id(v.anchor) << 32) ^ v.index);
  }
};

inline void render(std::ostream& os, const Term& t, std::unordered_map<VarId, std::size_t, VarIdHash>& names) {
  if (auto* v = t.as_var()) {
    auto [it, fresh] = names.try_emplace(*v, names.size());
    (void)fresh;
    os << "_." << it->second;
  } else if (auto* a = t.as_atom()) {
    os << *a;
  } else {
    const Composite* c = t.as_composite();
    os << c->tag.name();
    if (c->args.empty()) return;
    os << '(';
    for (std::size_t i = 0; i < c->args.size(); ++i) {
      if (i) os << ", ";
      render(os, c->args[i], names);
    }
    os << ')';
  }
}

}  // namespace detail

/// Canonical rendering: atoms verbatim, composites as `Tag(a, b)`, free
/// variables as `_.k` numbered by first occurrence left to right.
inline std::string to_string(const Term& t) {
  std::ostringstream os;
  std::unordered_map<VarId, std::size_t, detail::VarIdHash> names;
  detail::render(os, t, names);
  return os.str();
}

}  // namespace kanren
