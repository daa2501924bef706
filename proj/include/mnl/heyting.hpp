#pragma once

#include <array>
#include <string>
#include <vector>

#include "mnl/element_set.hpp"
#include "mnl/order.hpp"

namespace mnl {

  // A finite Heyting algebra: a bounded distributive lattice together with
  // its relative pseudocomplement a ⇀ b = max{c : a ∧ c ≤ b}.
  class HeytingAlgebra {
   public:
    HeytingAlgebra() = default;

    FiniteLattice const& lattice() const {
      return lat_;
    }
    FinitePoset const& poset() const {
      return lat_.poset();
    }
    std::size_t size() const {
      return lat_.size();
    }
    std::string const& name(Element x) const {
      return lat_.name(x);
    }
    bool leq(Element a, Element b) const {
      return lat_.leq(a, b);
    }
    Element meet(Element a, Element b) const {
      return lat_.meet(a, b);
    }
    Element join(Element a, Element b) const {
      return lat_.join(a, b);
    }
    Element imp(Element a, Element b) const {
      return imp_[a * size() + b];
    }
    // Pseudocomplement −a = a ⇀ ⊥.
    Element neg(Element a) const {
      return imp(a, bot());
    }
    Element bot() const {
      return lat_.bot();
    }
    Element top() const {
      return lat_.top();
    }
    ElementSet all() const {
      return lat_.poset().all();
    }

    bool operator==(HeytingAlgebra const&) const = default;

   private:
    friend HeytingAlgebra heyting_from_lattice(FiniteLattice l);

    FiniteLattice        lat_;
    std::vector<Element> imp_;
  };

  // Rejects non-distributive input with the witness triple.
  HeytingAlgebra heyting_from_lattice(FiniteLattice l);

  // Convenience: covers -> poset -> lattice -> Heyting algebra.
  HeytingAlgebra heyting_from_covers(
      std::vector<std::string> const&                         names,
      std::vector<std::pair<std::string, std::string>> const& covers);

  // Builds the Heyting algebra of a finite order given as a relation.
  HeytingAlgebra
  heyting_from_order(std::vector<std::string>                      names,
                     std::function<bool(Element, Element)> const& leq);

  // D(H) = {a : −a = ⊥}.
  ElementSet dense_elements(HeytingAlgebra const& h);
  // {a : −−a = a}; cross-checked against {−a : a ∈ H}.
  ElementSet regular_elements(HeytingAlgebra const& h);

  // Nonempty, upward closed and closed under ∧.
  bool is_filter(HeytingAlgebra const& h, ElementSet s);

  // All filters, ascending by bitmask. Every filter of a finite lattice is
  // principal, so these are the sets ↑a.
  std::vector<ElementSet> all_filters(HeytingAlgebra const& h);
  // Same result by testing every subset; only for small n.
  std::vector<ElementSet> all_filters_exhaustive(HeytingAlgebra const& h);

  // Filters containing D(H), ascending by bitmask.
  std::vector<ElementSet> boolean_filters(HeytingAlgebra const& h);

  // Returns D(H) ⊆ f. Throws InputError if f is not a filter and
  // InternalInconsistency if the answer disagrees with H/f being Boolean.
  bool is_boolean_filter(HeytingAlgebra const& h, ElementSet f);

  // Every element has a complement.
  bool is_boolean_algebra(HeytingAlgebra const& h);

  struct Quotient {
    HeytingAlgebra       algebra;
    // projection[a] = class of a, an element of algebra.
    std::vector<Element> projection;
    // representative[k] = least member of class k.
    std::vector<Element> representative;
  };

  // H/F under a ~ b iff a⇀b ∈ F and b⇀a ∈ F. Classes are named after their
  // least member and ordered by it.
  Quotient quotient_by_filter(HeytingAlgebra const& h, ElementSet f);

  // −a ∨ −−a = ⊤ for all a.
  bool check_stone(HeytingAlgebra const& h);

  // The four conditions on a pair that pick out the pairs admissible in
  // R(H, D(H)); they agree for every x, y:
  //   [0] x ∧ y = ⊥ and x ∨ y ∈ D(H)
  //   [1] x ∧ y = ⊥ and −x ∧ −y = ⊥
  //   [2] −x = −−y
  //   [3] −x ⇀ x = −y
  std::array<bool, 4> dense_pair_conditions(HeytingAlgebra const& h,
                                            Element x, Element y);

}  // namespace mnl
