#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <iterator>

namespace mnl {

  // Elements of every finite structure are dense indices 0..n-1.
  using Element = std::uint32_t;

  inline constexpr std::size_t max_carrier = 64;

  // A subset of {0, ..., 63} stored in a single machine word.
  class ElementSet {
   public:
    class iterator {
     public:
      using iterator_category = std::forward_iterator_tag;
      using value_type        = Element;
      using difference_type   = std::ptrdiff_t;
      using pointer           = void;
      using reference         = Element;

      constexpr iterator() = default;
      constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}

      constexpr Element operator*() const {
        return static_cast<Element>(std::countr_zero(rest_));
      }
      constexpr iterator& operator++() {
        rest_ &= rest_ - 1;
        return *this;
      }
      constexpr iterator operator++(int) {
        iterator tmp = *this;
        ++*this;
        return tmp;
      }
      constexpr bool operator==(iterator const&) const = default;

     private:
      std::uint64_t rest_ = 0;
    };

    constexpr ElementSet() = default;
    constexpr explicit ElementSet(std::uint64_t bits) : bits_(bits) {}

    static constexpr ElementSet singleton(Element x) {
      return ElementSet(std::uint64_t{1} << x);
    }

    // {0, ..., n-1}
    static constexpr ElementSet full(std::size_t n) {
      return ElementSet(n >= 64 ? ~std::uint64_t{0}
                                : (std::uint64_t{1} << n) - 1);
    }

    constexpr std::uint64_t bits() const {
      return bits_;
    }
    constexpr bool contains(Element x) const {
      return (bits_ >> x) & 1U;
    }
    constexpr void insert(Element x) {
      bits_ |= std::uint64_t{1} << x;
    }
    constexpr void erase(Element x) {
      bits_ &= ~(std::uint64_t{1} << x);
    }
    constexpr std::size_t size() const {
      return static_cast<std::size_t>(std::popcount(bits_));
    }
    constexpr bool empty() const {
      return bits_ == 0;
    }
    constexpr bool subset_of(ElementSet other) const {
      return (bits_ & ~other.bits_) == 0;
    }
    // Complement relative to {0, ..., n-1}.
    constexpr ElementSet complement(std::size_t n) const {
      return ElementSet(~bits_ & full(n).bits_);
    }
    // Smallest member; undefined on the empty set.
    constexpr Element first() const {
      return static_cast<Element>(std::countr_zero(bits_));
    }

    constexpr iterator begin() const {
      return iterator(bits_);
    }
    constexpr iterator end() const {
      return iterator(0);
    }

    constexpr ElementSet operator&(ElementSet o) const {
      return ElementSet(bits_ & o.bits_);
    }
    constexpr ElementSet operator|(ElementSet o) const {
      return ElementSet(bits_ | o.bits_);
    }
    // Set difference.
    constexpr ElementSet operator-(ElementSet o) const {
      return ElementSet(bits_ & ~o.bits_);
    }
    constexpr ElementSet& operator&=(ElementSet o) {
      bits_ &= o.bits_;
      return *this;
    }
    constexpr ElementSet& operator|=(ElementSet o) {
      bits_ |= o.bits_;
      return *this;
    }

    constexpr auto operator<=>(ElementSet const&) const = default;

   private:
    std::uint64_t bits_ = 0;
  };

}  // namespace mnl
