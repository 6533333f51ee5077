#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <vector>

namespace mosaic {

/// Elements of a finite carrier are canonical indices 0..n-1.
using Element = std::size_t;

/// Largest carrier representable by ElementSet.
inline constexpr std::size_t kMaxCarrier = 64;

/// A subset of a carrier of at most 64 elements, stored as a bitmask.
class ElementSet {
 public:
  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Element;
    using difference_type = std::ptrdiff_t;
    using pointer = const Element*;
    using reference = Element;

    iterator() = default;
    explicit iterator(std::uint64_t rest) : rest_(rest) {}

    Element operator*() const { return static_cast<Element>(std::countr_zero(rest_)); }
    iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    iterator operator++(int) {
      iterator old = *this;
      ++*this;
      return old;
    }
    bool operator==(const iterator&) const = default;

   private:
    std::uint64_t rest_ = 0;
  };

  constexpr ElementSet() = default;
  constexpr ElementSet(std::initializer_list<Element> elems) {
    for (Element e : elems) insert(e);
  }

  static constexpr ElementSet from_bits(std::uint64_t bits) {
    ElementSet s;
    s.bits_ = bits;
    return s;
  }
  static constexpr ElementSet single(Element e) { return from_bits(std::uint64_t{1} << e); }
  /// {0, ..., n-1}
  static constexpr ElementSet full(std::size_t n) {
    return from_bits(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool contains(Element e) const { return (bits_ >> e) & 1U; }
  constexpr void insert(Element e) { bits_ |= std::uint64_t{1} << e; }
  constexpr void erase(Element e) { bits_ &= ~(std::uint64_t{1} << e); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  /// Smallest member; undefined on the empty set.
  constexpr Element front() const { return static_cast<Element>(std::countr_zero(bits_)); }
  constexpr bool is_subset_of(ElementSet other) const { return (bits_ & ~other.bits_) == 0; }

  iterator begin() const { return iterator(bits_); }
  iterator end() const { return iterator(0); }

  std::vector<Element> to_vector() const { return {begin(), end()}; }

  constexpr ElementSet& operator|=(ElementSet o) {
    bits_ |= o.bits_;
    return *this;
  }
  constexpr ElementSet& operator&=(ElementSet o) {
    bits_ &= o.bits_;
    return *this;
  }
  constexpr ElementSet& operator-=(ElementSet o) {
    bits_ &= ~o.bits_;
    return *this;
  }
  friend constexpr ElementSet operator|(ElementSet a, ElementSet b) { return a |= b; }
  friend constexpr ElementSet operator&(ElementSet a, ElementSet b) { return a &= b; }
  friend constexpr ElementSet operator-(ElementSet a, ElementSet b) { return a -= b; }

  friend constexpr bool operator==(ElementSet, ElementSet) = default;
  friend constexpr auto operator<=>(ElementSet, ElementSet) = default;

 private:
  std::uint64_t bits_ = 0;
};

}  // namespace mosaic
