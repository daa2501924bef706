#include "mnl/order.hpp"

#include <algorithm>
#include <queue>

#include "mnl/error.hpp"

namespace mnl {

  namespace {
    void check_size(std::size_t n) {
      if (n > max_carrier) {
        throw LimitExceeded("structures are limited to "
                            + std::to_string(max_carrier)
                            + " elements, got " + std::to_string(n));
      }
    }

    std::unordered_map<std::string, Element>
    build_index(std::vector<std::string> const& names) {
      std::unordered_map<std::string, Element> index;
      for (Element i = 0; i < names.size(); ++i) {
        if (!index.emplace(names[i], i).second) {
          throw InputError("duplicate element name '" + names[i] + "'");
        }
      }
      return index;
    }
  }  // namespace

  FinitePoset FinitePoset::from_relation(
      std::vector<std::string>                      names,
      std::function<bool(Element, Element)> const& leq) {
    check_size(names.size());
    FinitePoset p;
    p.index_ = build_index(names);
    p.names_ = std::move(names);
    std::size_t const n = p.names_.size();
    p.up_.assign(n, ElementSet());
    p.down_.assign(n, ElementSet());
    for (Element a = 0; a < n; ++a) {
      for (Element b = 0; b < n; ++b) {
        if (leq(a, b)) {
          p.up_[a].insert(b);
          p.down_[b].insert(a);
        }
      }
    }
    for (Element a = 0; a < n; ++a) {
      if (!p.up_[a].contains(a)) {
        throw InputError("order is not reflexive at '" + p.names_[a] + "'");
      }
      for (Element b : p.up_[a]) {
        if (b != a && p.up_[b].contains(a)) {
          throw InputError("order is not antisymmetric: '" + p.names_[a]
                           + "' and '" + p.names_[b] + "'");
        }
        if (!p.up_[b].subset_of(p.up_[a])) {
          throw InputError("order is not transitive through '" + p.names_[b]
                           + "'");
        }
      }
    }
    return p;
  }

  std::optional<Element> FinitePoset::index_of(std::string_view name) const {
    auto it = index_.find(std::string(name));
    if (it == index_.end()) {
      return std::nullopt;
    }
    return it->second;
  }

  ElementSet FinitePoset::upset(ElementSet s) const {
    ElementSet result;
    for (Element x : s) {
      result |= up_[x];
    }
    return result;
  }

  ElementSet FinitePoset::downset(ElementSet s) const {
    ElementSet result;
    for (Element x : s) {
      result |= down_[x];
    }
    return result;
  }

  ElementSet FinitePoset::maximal(ElementSet s) const {
    ElementSet result;
    for (Element x : s) {
      if ((up_[x] & s) == ElementSet::singleton(x)) {
        result.insert(x);
      }
    }
    return result;
  }

  ElementSet FinitePoset::minimal(ElementSet s) const {
    ElementSet result;
    for (Element x : s) {
      if ((down_[x] & s) == ElementSet::singleton(x)) {
        result.insert(x);
      }
    }
    return result;
  }

  ElementSet FinitePoset::lower_covers(Element a) const {
    ElementSet below = down_[a] - ElementSet::singleton(a);
    return maximal(below);
  }

  std::vector<std::pair<Element, Element>> FinitePoset::covers() const {
    std::vector<std::pair<Element, Element>> result;
    for (Element a = 0; a < size(); ++a) {
      ElementSet above = up_[a] - ElementSet::singleton(a);
      for (Element b : minimal(above)) {
        result.emplace_back(a, b);
      }
    }
    return result;
  }

  FinitePoset poset_from_covers(
      std::vector<std::string> const&                         names,
      std::vector<std::pair<std::string, std::string>> const& covers) {
    check_size(names.size());
    auto const        index = build_index(names);
    std::size_t const n     = names.size();

    auto lookup = [&](std::string const& name) {
      auto it = index.find(name);
      if (it == index.end()) {
        throw InputError("cover refers to unknown element '" + name + "'");
      }
      return it->second;
    };

    std::vector<ElementSet> succ(n);
    std::vector<std::size_t> indegree(n, 0);
    for (auto const& [lo, hi] : covers) {
      Element a = lookup(lo), b = lookup(hi);
      if (!succ[a].contains(b)) {
        succ[a].insert(b);
        ++indegree[b];
      }
    }

    // Kahn's algorithm, smallest index first.
    std::priority_queue<Element, std::vector<Element>, std::greater<>> ready;
    for (Element i = 0; i < n; ++i) {
      if (indegree[i] == 0) {
        ready.push(i);
      }
    }
    std::vector<Element> topo;
    while (!ready.empty()) {
      Element x = ready.top();
      ready.pop();
      topo.push_back(x);
      for (Element y : succ[x]) {
        if (--indegree[y] == 0) {
          ready.push(y);
        }
      }
    }
    if (topo.size() != n) {
      for (Element i = 0; i < n; ++i) {
        if (indegree[i] != 0) {
          throw InputError("cover relation has a cycle through '" + names[i]
                           + "'");
        }
      }
    }

    std::vector<ElementSet> up(n);
    for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
      up[*it] = ElementSet::singleton(*it);
      for (Element y : succ[*it]) {
        up[*it] |= up[y];
      }
    }
    return FinitePoset::from_relation(
        names, [&](Element a, Element b) { return up[a].contains(b); });
  }

  Element FiniteLattice::meet_of(ElementSet s) const {
    Element r = top_;
    for (Element x : s) {
      r = meet(r, x);
    }
    return r;
  }

  Element FiniteLattice::join_of(ElementSet s) const {
    Element r = bot_;
    for (Element x : s) {
      r = join(r, x);
    }
    return r;
  }

  FiniteLattice lattice_from_poset(FinitePoset p) {
    std::size_t const n = p.size();
    if (n == 0) {
      throw InputError("a lattice needs at least one element");
    }
    FiniteLattice l;
    bool has_bot = false, has_top = false;
    for (Element x = 0; x < n; ++x) {
      if (p.up(x) == p.all()) {
        l.bot_  = x;
        has_bot = true;
      }
      if (p.down(x) == p.all()) {
        l.top_  = x;
        has_top = true;
      }
    }
    if (!has_bot || !has_top) {
      throw InputError(std::string("poset is unbounded: no ")
                       + (has_bot ? "top" : "bottom") + " element");
    }

    l.meet_.assign(n * n, 0);
    l.join_.assign(n * n, 0);
    for (Element a = 0; a < n; ++a) {
      for (Element b = a; b < n; ++b) {
        ElementSet lower = p.down(a) & p.down(b);
        ElementSet upper = p.up(a) & p.up(b);
        std::optional<Element> glb, lub;
        for (Element c : lower) {
          if (p.down(c) == lower) {
            glb = c;
            break;
          }
        }
        for (Element c : upper) {
          if (p.up(c) == upper) {
            lub = c;
            break;
          }
        }
        if (!glb || !lub) {
          throw InputError("not a lattice: '" + p.name(a) + "' and '"
                           + p.name(b) + "' have no "
                           + (glb ? "least upper" : "greatest lower")
                           + " bound");
        }
        l.meet_[a * n + b] = l.meet_[b * n + a] = *glb;
        l.join_[a * n + b] = l.join_[b * n + a] = *lub;
      }
    }
    l.poset_ = std::move(p);
    return l;
  }

  std::optional<Triple> distributivity_failure(FiniteLattice const& l) {
    std::size_t const n = l.size();
    for (Element a = 0; a < n; ++a) {
      for (Element b = 0; b < n; ++b) {
        for (Element c = 0; c < n; ++c) {
          if (l.meet(a, l.join(b, c))
              != l.join(l.meet(a, b), l.meet(a, c))) {
            return Triple{a, b, c};
          }
        }
      }
    }
    return std::nullopt;
  }

  ElementSet join_irreducibles(FiniteLattice const& l) {
    ElementSet result;
    for (Element x = 0; x < l.size(); ++x) {
      if (x != l.bot() && l.poset().lower_covers(x).size() == 1) {
        result.insert(x);
      }
    }
    return result;
  }

  std::vector<std::string> names_of(FinitePoset const& p, ElementSet s) {
    std::vector<std::string> out;
    for (Element x : s) {
      out.push_back(p.name(x));
    }
    return out;
  }

}  // namespace mnl
