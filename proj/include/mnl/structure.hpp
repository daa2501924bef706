#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "mnl/element_set.hpp"

namespace mnl {

  // A finite first-order structure reduced to what the search needs: an
  // order, operation tables and constants. Every table has the same arity
  // and position in both structures being compared.
  struct Structure {
    std::size_t                       size = 0;
    std::vector<ElementSet>           up;      // up[x] = {y : x ≤ y}
    std::vector<std::vector<Element>> binary;  // each n*n, row-major
    std::vector<std::vector<Element>> unary;   // each n
    std::vector<Element>              constants;
    // Optional per-element invariant that any isomorphism must preserve.
    std::vector<std::uint64_t> label;
  };

  using LeafCheck = std::function<bool(std::vector<Element> const&)>;

  // First isomorphism from a onto b in the search order, or nullopt.
  // leaf, when set, must also accept the complete map. Throws LimitExceeded
  // if either side has more than cap elements.
  std::optional<std::vector<Element>>
  find_isomorphism(Structure const& a, Structure const& b,
                   std::size_t cap = 32, LeafCheck const& leaf = {});

  // Every map a → b preserving all operations and constants (not the order
  // separately), lexicographic by table, at most `limit` of them.
  std::vector<std::vector<Element>>
  find_homomorphisms(Structure const& a, Structure const& b,
                     std::size_t limit = static_cast<std::size_t>(-1));

}  // namespace mnl
