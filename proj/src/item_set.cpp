#include "spg/item_set.hpp"

#include <algorithm>
#include <cassert>

namespace spg {

ItemSet ItemSet::full(std::size_t universe) {
  ItemSet s(universe);
  for (std::size_t i = 0; i < universe; ++i) s.insert(static_cast<ItemIndex>(i));
  return s;
}

ItemSet ItemSet::of(std::size_t universe, const std::vector<ItemIndex>& members) {
  ItemSet s(universe);
  for (ItemIndex i : members) {
    assert(i < universe);
    s.insert(i);
  }
  return s;
}

std::size_t ItemSet::size() const {
  std::size_t n = 0;
  for (auto w : words_) n += static_cast<std::size_t>(__builtin_popcountll(w));
  return n;
}

bool ItemSet::empty() const {
  return std::all_of(words_.begin(), words_.end(), [](auto w) { return w == 0; });
}

bool ItemSet::is_subset_of(const ItemSet& other) const {
  assert(universe_ == other.universe_);
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if ((words_[w] & ~other.words_[w]) != 0) return false;
  }
  return true;
}

bool ItemSet::intersects(const ItemSet& other) const {
  assert(universe_ == other.universe_);
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if ((words_[w] & other.words_[w]) != 0) return true;
  }
  return false;
}

ItemSet& ItemSet::operator|=(const ItemSet& other) {
  assert(universe_ == other.universe_);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= other.words_[w];
  return *this;
}

ItemSet& ItemSet::operator&=(const ItemSet& other) {
  assert(universe_ == other.universe_);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= other.words_[w];
  return *this;
}

ItemSet& ItemSet::operator-=(const ItemSet& other) {
  assert(universe_ == other.universe_);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= ~other.words_[w];
  return *this;
}

std::vector<ItemIndex> ItemSet::indices() const {
  std::vector<ItemIndex> out;
  for_each([&](ItemIndex i) { out.push_back(i); });
  return out;
}

std::size_t ItemSet::hash() const {
  std::size_t h = universe_ * 0x9e3779b97f4a7c15ULL;
  for (auto w : words_) {
    h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

bool lex_less(const ItemSet& a, const ItemSet& b) {
  const auto ia = a.indices();
  const auto ib = b.indices();
  return std::lexicographical_compare(ia.begin(), ia.end(), ib.begin(), ib.end());
}

}  // namespace spg
