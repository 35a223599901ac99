#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace spg {

/// Position of an item in the instance's id-sorted item list.
using ItemIndex = std::uint32_t;

/// Dense subset of the instance items. Iteration is always in index order,
/// which is item-id order.
class ItemSet {
 public:
  ItemSet() = default;
  explicit ItemSet(std::size_t universe)
      : universe_(universe), words_((universe + 63) / 64, 0) {}

  static ItemSet full(std::size_t universe);
  static ItemSet of(std::size_t universe, const std::vector<ItemIndex>& members);

  std::size_t universe() const { return universe_; }

  bool contains(ItemIndex i) const {
    return i < universe_ && ((words_[i >> 6] >> (i & 63)) & 1U);
  }
  void insert(ItemIndex i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void erase(ItemIndex i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

  std::size_t size() const;
  bool empty() const;

  bool is_subset_of(const ItemSet& other) const;
  bool intersects(const ItemSet& other) const;

  ItemSet& operator|=(const ItemSet& other);
  ItemSet& operator&=(const ItemSet& other);
  ItemSet& operator-=(const ItemSet& other);

  friend ItemSet operator|(ItemSet a, const ItemSet& b) { return a |= b; }
  friend ItemSet operator&(ItemSet a, const ItemSet& b) { return a &= b; }
  friend ItemSet operator-(ItemSet a, const ItemSet& b) { return a -= b; }

  std::vector<ItemIndex> indices() const;

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        const int b = __builtin_ctzll(bits);
        f(static_cast<ItemIndex>(w * 64 + static_cast<std::size_t>(b)));
        bits &= bits - 1;
      }
    }
  }

  std::size_t hash() const;

  bool operator==(const ItemSet&) const = default;

 private:
  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Lexicographic comparison of the sorted index lists (a proper prefix is
/// smaller).
bool lex_less(const ItemSet& a, const ItemSet& b);

struct ItemSetHash {
  std::size_t operator()(const ItemSet& s) const { return s.hash(); }
};

}  // namespace spg
