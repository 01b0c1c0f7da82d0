#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace kusub {

using ElementId = std::uint32_t;

// A set of element identifiers of one group, stored as a bitset over the
// group's deterministic enumeration. Used as the subgroup carrier.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::size_t universe) : universe_(universe), words_((universe + 63) / 64, 0) {}

  static ElementSet from_ids(std::size_t universe, std::vector<ElementId> const& ids) {
    ElementSet s(universe);
    for (ElementId id : ids) s.insert(id);
    return s;
  }

  std::size_t universe() const noexcept { return universe_; }

  bool contains(ElementId id) const noexcept { return (words_[id >> 6] >> (id & 63)) & 1u; }
  void insert(ElementId id) noexcept { words_[id >> 6] |= std::uint64_t{1} << (id & 63); }
  void erase(ElementId id) noexcept { words_[id >> 6] &= ~(std::uint64_t{1} << (id & 63)); }

  std::size_t size() const noexcept {
    std::size_t n = 0;
    for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }

  bool empty() const noexcept {
    for (auto w : words_) {
      if (w) return false;
    }
    return true;
  }

  // Canonical sorted list of element identifiers.
  std::vector<ElementId> ids() const {
    std::vector<ElementId> out;
    for (std::size_t w = 0; w < words_.size(); ++w) {
      for (auto bits = words_[w]; bits; bits &= bits - 1) {
        out.push_back(static_cast<ElementId>(w * 64 + std::countr_zero(bits)));
      }
    }
    return out;
  }

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      for (auto bits = words_[w]; bits; bits &= bits - 1) {
        f(static_cast<ElementId>(w * 64 + std::countr_zero(bits)));
      }
    }
  }

  bool is_subset_of(ElementSet const& other) const noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if (words_[i] & ~other.words_[i]) return false;
    }
    return true;
  }

  ElementSet operator&(ElementSet const& rhs) const {
    ElementSet out(universe_);
    for (std::size_t i = 0; i < words_.size(); ++i) out.words_[i] = words_[i] & rhs.words_[i];
    return out;
  }

  ElementSet operator|(ElementSet const& rhs) const {
    ElementSet out(universe_);
    for (std::size_t i = 0; i < words_.size(); ++i) out.words_[i] = words_[i] | rhs.words_[i];
    return out;
  }

  // Set difference.
  ElementSet operator-(ElementSet const& rhs) const {
    ElementSet out(universe_);
    for (std::size_t i = 0; i < words_.size(); ++i) out.words_[i] = words_[i] & ~rhs.words_[i];
    return out;
  }

  ElementSet& operator|=(ElementSet const& rhs) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= rhs.words_[i];
    return *this;
  }

  bool operator==(ElementSet const&) const = default;

  // Canonical order: by size, then lexicographically by sorted id list.
  friend bool canonical_less(ElementSet const& a, ElementSet const& b) noexcept {
    auto sa = a.size();
    auto sb = b.size();
    if (sa != sb) return sa < sb;
    for (std::size_t i = 0; i < a.words_.size(); ++i) {
      auto diff = a.words_[i] ^ b.words_[i];
      if (diff) {
        // The smallest differing id sits earlier in whichever list holds it.
        auto low = diff & (~diff + 1);
        return (a.words_[i] & low) != 0;
      }
    }
    return false;
  }

  std::size_t hash() const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (auto w : words_) {
      h ^= static_cast<std::size_t>(w);
      h *= 1099511628211ull;
    }
    return h;
  }

 private:
  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

struct ElementSetHash {
  std::size_t operator()(ElementSet const& s) const noexcept { return s.hash(); }
};

}  // namespace kusub
