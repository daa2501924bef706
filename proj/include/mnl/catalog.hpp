#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "mnl/document.hpp"
#include "mnl/heyting.hpp"
#include "mnl/modal_heyting.hpp"

namespace mnl {

  // The chain ⊥ < m < ⊤.
  HeytingAlgebra chain3();
  // The n-element chain named "0", "1", ..., "n-1".
  HeytingAlgebra chain(std::size_t n);
  // Subsets of k atoms named "0", "a", "b", "ab", ..., "1".
  HeytingAlgebra boolean_power(std::size_t k);

  // ⊥ < b < a, c < ⊤ with
  //   □: ⊥↦⊥ b↦c a↦a c↦a ⊤↦c
  //   ◇: ⊥↦⊥ b↦c a↦b c↦a ⊤↦⊤
  ModalHeytingAlgebra figure_one();

  // Non-isomorphic distributive lattices with at most max_size elements,
  // built as down-set lattices of posets with fewer than max_size points.
  // Ordered by size, then by the canonical code of the poset. Elements are
  // "0", "e1", "e2", ..., "1".
  std::vector<HeytingAlgebra> distributive_lattices(std::size_t max_size);

  struct CatalogEntry {
    std::string name;
    Document    document;
  };

  // dl<size>_<k> for each distributive lattice, then c3, fig1 (with its
  // modal operators), boolean2, boolean4, boolean8.
  std::vector<CatalogEntry> build_catalog(std::size_t max_size);

  // (mH) pairs on h used by the sweeps: a fixed set of structured operators
  // (identity, −−, constants) that pass (mH), plus up to `budget` pairs
  // spaced evenly through the lexicographic enumeration when it can be
  // counted, or the first `budget` pairs when it cannot. Sorted, no
  // duplicates.
  std::vector<ModalPair> sweep_pairs(HeytingAlgebra const& h,
                                     std::size_t           budget);

  // Every modal algebra the sweeps visit: sweep_pairs over each catalog
  // Heyting algebra plus the modal entries as given.
  std::vector<ModalHeytingAlgebra>
  sweep_instances(std::vector<CatalogEntry> const& catalog,
                  std::size_t                      budget);

  // Boolean filters of m.heyting() satisfying (F).
  std::vector<ElementSet> tw_filters(ModalHeytingAlgebra const& m);

}  // namespace mnl
