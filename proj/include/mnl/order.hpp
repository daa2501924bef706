#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "mnl/element_set.hpp"

namespace mnl {

  // A finite partial order on named elements 0..n-1. Row i of the order
  // matrix is stored twice as bitmasks: the principal up-set and down-set.
  class FinitePoset {
   public:
    FinitePoset() = default;

    // Builds the poset from a relation; leq must be a partial order.
    // Throws InputError on duplicate names, more than 64 elements or a
    // relation that is not reflexive, antisymmetric and transitive.
    static FinitePoset from_relation(
        std::vector<std::string>                      names,
        std::function<bool(Element, Element)> const& leq);

    std::size_t size() const {
      return names_.size();
    }
    std::string const& name(Element x) const {
      return names_[x];
    }
    std::vector<std::string> const& names() const {
      return names_;
    }
    std::optional<Element> index_of(std::string_view name) const;

    bool leq(Element a, Element b) const {
      return up_[a].contains(b);
    }
    bool lt(Element a, Element b) const {
      return a != b && leq(a, b);
    }
    ElementSet up(Element a) const {
      return up_[a];
    }
    ElementSet down(Element a) const {
      return down_[a];
    }
    ElementSet all() const {
      return ElementSet::full(size());
    }

    ElementSet upset(ElementSet s) const;
    ElementSet downset(ElementSet s) const;
    bool       is_upset(ElementSet s) const {
      return upset(s) == s;
    }
    bool is_downset(ElementSet s) const {
      return downset(s) == s;
    }
    // Members of s with no strictly larger member of s.
    ElementSet maximal(ElementSet s) const;
    ElementSet minimal(ElementSet s) const;

    // Elements strictly below a with nothing strictly in between.
    ElementSet lower_covers(Element a) const;
    // Hasse diagram as (lower, upper) pairs, ascending.
    std::vector<std::pair<Element, Element>> covers() const;

    bool operator==(FinitePoset const& other) const {
      return names_ == other.names_ && up_ == other.up_;
    }

   private:
    std::vector<std::string>                     names_;
    std::vector<ElementSet>                      up_;
    std::vector<ElementSet>                      down_;
    std::unordered_map<std::string, Element>     index_;
  };

  // Reflexive-transitive closure of a cover relation given by names.
  // Throws InputError on duplicate or unknown names and on cycles.
  FinitePoset poset_from_covers(
      std::vector<std::string> const&                         names,
      std::vector<std::pair<std::string, std::string>> const& covers);

  // A bounded lattice with total meet and join tables.
  class FiniteLattice {
   public:
    FiniteLattice() = default;

    FinitePoset const& poset() const {
      return poset_;
    }
    std::size_t size() const {
      return poset_.size();
    }
    std::string const& name(Element x) const {
      return poset_.name(x);
    }
    bool leq(Element a, Element b) const {
      return poset_.leq(a, b);
    }
    Element meet(Element a, Element b) const {
      return meet_[a * size() + b];
    }
    Element join(Element a, Element b) const {
      return join_[a * size() + b];
    }
    Element bot() const {
      return bot_;
    }
    Element top() const {
      return top_;
    }
    // Meet of a set; top for the empty set.
    Element meet_of(ElementSet s) const;
    Element join_of(ElementSet s) const;

    bool operator==(FiniteLattice const&) const = default;

   private:
    friend FiniteLattice lattice_from_poset(FinitePoset p);

    FinitePoset          poset_;
    std::vector<Element> meet_;
    std::vector<Element> join_;
    Element              bot_ = 0;
    Element              top_ = 0;
  };

  // Fills meet and join tables by greatest-lower-bound / least-upper-bound
  // search. Throws InputError naming the offending pair if some pair lacks a
  // glb or lub, or if the poset is empty.
  FiniteLattice lattice_from_poset(FinitePoset p);

  struct Triple {
    Element a, b, c;
  };

  // First triple (in index order) with a∧(b∨c) ≠ (a∧b)∨(a∧c), if any.
  std::optional<Triple> distributivity_failure(FiniteLattice const& l);

  inline bool is_distributive(FiniteLattice const& l) {
    return !distributivity_failure(l).has_value();
  }

  // Elements j ≠ ⊥ with exactly one lower cover.
  ElementSet join_irreducibles(FiniteLattice const& l);

  inline ElementSet upset(FinitePoset const& p, ElementSet s) {
    return p.upset(s);
  }
  inline ElementSet downset(FinitePoset const& p, ElementSet s) {
    return p.downset(s);
  }
  inline ElementSet max_elements(FinitePoset const& p) {
    return p.maximal(p.all());
  }

  // Names of the members of s, ascending by index.
  std::vector<std::string> names_of(FinitePoset const& p, ElementSet s);

}  // namespace mnl
