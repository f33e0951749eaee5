#pragma once

// Persistent map from 32-bit keys to values: a bitmap-compressed trie indexed
// by the low key bits first, so dense keys give a shallow, balanced tree.
// Insertion copies one node per level and shares everything else.

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <utility>
#include <variant>
#include <vector>

namespace kanren {

template <class V>
class PersistentIntMap {
 public:
  PersistentIntMap() = default;

  std::size_t size() const { return size_; }
  bool empty() const { return size_ == 0; }

  /// Pointer to the value bound to `key`, or null. Stable for the map's lifetime.
  const V* find(std::uint32_t key) const {
    const Node* node = root_.get();
    unsigned shift = 0;
    while (node) {
      const std::uint32_t bit = bit_for(key, shift);
      if (!(node->bitmap & bit)) return nullptr;
      const Entry& e = node->entries[slot(node->bitmap, bit)];
      if (auto* leaf = std::get_if<Leaf>(&e)) return leaf->key == key ? &leaf->value : nullptr;
      node = std::get<NodePtr>(e).get();
      shift += kBits;
    }
    return nullptr;
  }

  bool contains(std::uint32_t key) const { return find(key) != nullptr; }

  /// A map with `key` bound to `value`, replacing any previous binding.
  PersistentIntMap insert(std::uint32_t key, V value) const {
    bool added = false;
    NodePtr root = insert_into(root_.get(), 0, key, std::move(value), added);
    return PersistentIntMap(std::move(root), size_ + (added ? 1 : 0));
  }

  /// Visits every binding in unspecified order.
  template <class F>
  void for_each(F&& f) const {
    if (root_) visit(*root_, f);
  }

 private:
  static constexpr unsigned kBits = 4;
  static constexpr std::uint32_t kMask = (1u << kBits) - 1;

  struct Node;
  using NodePtr = std::shared_ptr<const Node>;
  struct Leaf {
    std::uint32_t key;
    V value;
  };
  using Entry = std::variant<Leaf, NodePtr>;
  struct Node {
    std::uint32_t bitmap = 0;
    std::vector<Entry> entries;
  };

  PersistentIntMap(NodePtr root, std::size_t size) : root_(std::move(root)), size_(size) {}

  // Table lookup; std::popcount becomes a library call without hardware popcnt.
  static std::size_t popcount16(std::uint32_t x) {
    static constexpr auto table = [] {
      std::array<std::uint8_t, 256> t{};
      for (unsigned i = 0; i < 256; ++i) t[i] = static_cast<std::uint8_t>(std::popcount(i));
      return t;
    }();
    return table[x & 0xff] + table[(x >> 8) & 0xff];
  }

  static std::uint32_t bit_for(std::uint32_t key, unsigned shift) {
    return 1u << ((key >> shift) & kMask);
  }
  static std::size_t slot(std::uint32_t bitmap, std::uint32_t bit) {
    return popcount16(bitmap & (bit - 1));
  }

  static NodePtr insert_into(const Node* node, unsigned shift, std::uint32_t key, V value, bool& added) {
    auto copy = node ? std::make_shared<Node>(*node) : std::make_shared<Node>();
    const std::uint32_t bit = bit_for(key, shift);
    const std::size_t i = slot(copy->bitmap, bit);
    if (!(copy->bitmap & bit)) {
      copy->bitmap |= bit;
      copy->entries.insert(copy->entries.begin() + static_cast<std::ptrdiff_t>(i), Leaf{key, std::move(value)});
      added = true;
      return copy;
    }
    Entry& e = copy->entries[i];
    if (auto* leaf = std::get_if<Leaf>(&e)) {
      if (leaf->key == key) {
        leaf->value = std::move(value);
        return copy;
      }
      Leaf old = std::move(*leaf);
      NodePtr child = insert_into(nullptr, shift + kBits, old.key, std::move(old.value), added);
      added = false;
      e = insert_into(child.get(), shift + kBits, key, std::move(value), added);
      return copy;
    }
    e = insert_into(std::get<NodePtr>(e).get(), shift + kBits, key, std::move(value), added);
    return copy;
  }

  template <class F>
  static void visit(const Node& node, F& f) {
    for (const Entry& e : node.entries) {
      if (auto* leaf = std::get_if<Leaf>(&e)) {
        f(leaf->key, leaf->value);
      } else {
        visit(*std::get<NodePtr>(e), f);
      }
    }
  }

  NodePtr root_;
  std::size_t size_ = 0;
};

}  // namespace kanren
