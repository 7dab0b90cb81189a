#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <vector>

namespace ncgroup {

using Element = std::uint32_t;

/// Subset of {0, ..., n-1} stored as a bitset. Iteration runs in increasing
/// index order. The subgroup flag records that the set is known to be closed;
/// it does not take part in equality.
class ElementSet {
 public:
  class const_iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Element;
    using difference_type = std::ptrdiff_t;
    using pointer = const Element*;
    using reference = Element;

    const_iterator() = default;
    const_iterator(const std::vector<std::uint64_t>* words, std::size_t pos) : words_(words), pos_(pos) {
      seek();
    }

    Element operator*() const { return static_cast<Element>(pos_); }
    const_iterator& operator++() {
      ++pos_;
      seek();
      return *this;
    }
    const_iterator operator++(int) {
      auto tmp = *this;
      ++*this;
      return tmp;
    }
    bool operator==(const const_iterator& o) const { return pos_ == o.pos_; }

   private:
    void seek() {
      const std::size_t limit = words_->size() * 64;
      while (pos_ < limit) {
        std::uint64_t w = (*words_)[pos_ / 64] >> (pos_ % 64);
        if (w != 0) {
          pos_ += static_cast<std::size_t>(std::countr_zero(w));
          return;
        }
        pos_ = (pos_ / 64 + 1) * 64;
      }
      pos_ = limit;
    }

    const std::vector<std::uint64_t>* words_ = nullptr;
    std::size_t pos_ = 0;
  };

  ElementSet() = default;
  explicit ElementSet(std::size_t universe) : universe_(universe), words_((universe + 63) / 64, 0) {}
  ElementSet(std::size_t universe, std::initializer_list<Element> members) : ElementSet(universe) {
    for (Element x : members) insert(x);
  }
  template <class Range>
  static ElementSet from_range(std::size_t universe, const Range& members) {
    ElementSet s(universe);
    for (auto x : members) s.insert(static_cast<Element>(x));
    return s;
  }
  static ElementSet all(std::size_t universe) {
    ElementSet s(universe);
    for (std::size_t i = 0; i < universe; ++i) s.insert(static_cast<Element>(i));
    s.subgroup_ = true;
    return s;
  }

  std::size_t universe_order() const noexcept { return universe_; }

  bool contains(Element x) const noexcept {
    return x < universe_ && ((words_[x / 64] >> (x % 64)) & 1U) != 0;
  }
  void insert(Element x) { words_.at(x / 64) |= std::uint64_t{1} << (x % 64); }
  void erase(Element x) { words_.at(x / 64) &= ~(std::uint64_t{1} << (x % 64)); }

  std::size_t size() const noexcept {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool empty() const noexcept {
    for (auto w : words_)
      if (w != 0) return false;
    return true;
  }

  bool is_subgroup() const noexcept { return subgroup_; }
  ElementSet& mark_subgroup(bool flag = true) noexcept {
    subgroup_ = flag;
    return *this;
  }

  bool is_subset_of(const ElementSet& o) const noexcept {
    if (o.universe_ != universe_) return false;
    for (std::size_t i = 0; i < words_.size(); ++i)
      if ((words_[i] & ~o.words_[i]) != 0) return false;
    return true;
  }

  ElementSet intersection(const ElementSet& o) const {
    ElementSet r(universe_);
    for (std::size_t i = 0; i < words_.size() && i < o.words_.size(); ++i) r.words_[i] = words_[i] & o.words_[i];
    return r;
  }
  ElementSet united(const ElementSet& o) const {
    ElementSet r = *this;
    r.subgroup_ = false;
    for (std::size_t i = 0; i < words_.size() && i < o.words_.size(); ++i) r.words_[i] |= o.words_[i];
    return r;
  }

  std::vector<Element> to_vector() const { return {begin(), end()}; }

  const_iterator begin() const { return {&words_, 0}; }
  const_iterator end() const { return {&words_, words_.size() * 64}; }

  friend bool operator==(const ElementSet& a, const ElementSet& b) noexcept {
    return a.universe_ == b.universe_ && a.words_ == b.words_;
  }

 private:
  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
  bool subgroup_ = false;
};

}  // namespace ncgroup
