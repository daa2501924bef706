#include "mnl/heyting.hpp"

#include <algorithm>

#include "mnl/error.hpp"

namespace mnl {

  HeytingAlgebra heyting_from_lattice(FiniteLattice l) {
    if (auto t = distributivity_failure(l)) {
      throw InputError("lattice is not distributive: " + l.name(t->a)
                       + " ∧ (" + l.name(t->b) + " ∨ " + l.name(t->c)
                       + ") ≠ (" + l.name(t->a) + " ∧ " + l.name(t->b)
                       + ") ∨ (" + l.name(t->a) + " ∧ " + l.name(t->c)
                       + ")");
    }
    std::size_t const n = l.size();
    HeytingAlgebra    h;
    h.imp_.assign(n * n, 0);
    for (Element a = 0; a < n; ++a) {
      for (Element b = 0; b < n; ++b) {
        ElementSet candidates;
        for (Element c = 0; c < n; ++c) {
          if (l.leq(l.meet(a, c), b)) {
            candidates.insert(c);
          }
        }
        Element best = l.join_of(candidates);
        if (!candidates.contains(best)) {
          throw InputError("no relative pseudocomplement for '" + l.name(a)
                           + "' ⇀ '" + l.name(b) + "'");
        }
        h.imp_[a * n + b] = best;
      }
    }
    h.lat_ = std::move(l);
    return h;
  }

  HeytingAlgebra heyting_from_covers(
      std::vector<std::string> const&                         names,
      std::vector<std::pair<std::string, std::string>> const& covers) {
    return heyting_from_lattice(
        lattice_from_poset(poset_from_covers(names, covers)));
  }

  HeytingAlgebra
  heyting_from_order(std::vector<std::string>                      names,
                     std::function<bool(Element, Element)> const& leq) {
    return heyting_from_lattice(lattice_from_poset(
        FinitePoset::from_relation(std::move(names), leq)));
  }

  ElementSet dense_elements(HeytingAlgebra const& h) {
    ElementSet d;
    for (Element a = 0; a < h.size(); ++a) {
      if (h.neg(a) == h.bot()) {
        d.insert(a);
      }
    }
    return d;
  }

  ElementSet regular_elements(HeytingAlgebra const& h) {
    ElementSet fixed, images;
    for (Element a = 0; a < h.size(); ++a) {
      if (h.neg(h.neg(a)) == a) {
        fixed.insert(a);
      }
      images.insert(h.neg(a));
    }
    if (fixed != images) {
      throw InternalInconsistency(
          "regular elements differ from the image of negation");
    }
    return fixed;
  }

  bool is_filter(HeytingAlgebra const& h, ElementSet s) {
    if (s.empty() || !h.poset().is_upset(s)) {
      return false;
    }
    for (Element a : s) {
      for (Element b : s) {
        if (!s.contains(h.meet(a, b))) {
          return false;
        }
      }
    }
    return true;
  }

  std::vector<ElementSet> all_filters(HeytingAlgebra const& h) {
    std::vector<ElementSet> result;
    for (Element a = 0; a < h.size(); ++a) {
      result.push_back(h.poset().up(a));
    }
    std::sort(result.begin(), result.end());
    return result;
  }

  std::vector<ElementSet> all_filters_exhaustive(HeytingAlgebra const& h) {
    if (h.size() > 24) {
      throw LimitExceeded("exhaustive filter scan is limited to 24 elements");
    }
    std::vector<ElementSet> result;
    std::uint64_t const     limit = std::uint64_t{1} << h.size();
    for (std::uint64_t bits = 1; bits < limit; ++bits) {
      if (is_filter(h, ElementSet(bits))) {
        result.emplace_back(bits);
      }
    }
    return result;
  }

  std::vector<ElementSet> boolean_filters(HeytingAlgebra const& h) {
    ElementSet const        d = dense_elements(h);
    std::vector<ElementSet> result;
    for (ElementSet f : all_filters(h)) {
      if (d.subset_of(f)) {
        result.push_back(f);
      }
    }
    return result;
  }

  bool is_boolean_algebra(HeytingAlgebra const& h) {
    for (Element a = 0; a < h.size(); ++a) {
      // In a Heyting algebra the only candidate complement is −a.
      if (h.join(a, h.neg(a)) != h.top()) {
        return false;
      }
    }
    return true;
  }

  bool is_boolean_filter(HeytingAlgebra const& h, ElementSet f) {
    if (!is_filter(h, f)) {
      throw InputError("not a filter");
    }
    bool const by_dense    = dense_elements(h).subset_of(f);
    bool const by_quotient = is_boolean_algebra(quotient_by_filter(h, f).algebra);
    if (by_dense != by_quotient) {
      throw InternalInconsistency(
          "D(H) ⊆ F disagrees with H/F being Boolean");
    }
    return by_dense;
  }

  Quotient quotient_by_filter(HeytingAlgebra const& h, ElementSet f) {
    if (!is_filter(h, f)) {
      throw InputError("quotient requires a filter");
    }
    std::size_t const n = h.size();
    auto related = [&](Element a, Element b) {
      return f.contains(h.imp(a, b)) && f.contains(h.imp(b, a));
    };

    std::vector<ElementSet> classes;
    std::vector<int>        class_of(n, -1);
    for (Element a = 0; a < n; ++a) {
      if (class_of[a] >= 0) {
        continue;
      }
      ElementSet cls;
      for (Element b = 0; b < n; ++b) {
        if (related(a, b)) {
          cls.insert(b);
        }
      }
      for (Element b : cls) {
        class_of[b] = static_cast<int>(classes.size());
      }
      classes.push_back(cls);
    }

    std::vector<Element> reps;
    for (ElementSet cls : classes) {
      Element least = h.lattice().meet_of(cls);
      if (!cls.contains(least)) {
        throw InternalInconsistency("congruence class without least member");
      }
      reps.push_back(least);
    }
    std::vector<std::size_t> order(classes.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
      order[i] = i;
    }
    std::sort(order.begin(), order.end(),
              [&](std::size_t x, std::size_t y) { return reps[x] < reps[y]; });
    std::vector<Element> rank(classes.size());
    for (std::size_t k = 0; k < order.size(); ++k) {
      rank[order[k]] = static_cast<Element>(k);
    }

    Quotient q;
    std::vector<std::string> names;
    for (std::size_t k = 0; k < order.size(); ++k) {
      q.representative.push_back(reps[order[k]]);
      names.push_back(h.name(reps[order[k]]));
    }
    q.projection.resize(n);
    for (Element a = 0; a < n; ++a) {
      q.projection[a] = rank[static_cast<std::size_t>(class_of[a])];
    }
    q.algebra = heyting_from_order(std::move(names), [&](Element x, Element y) {
      return f.contains(h.imp(q.representative[x], q.representative[y]));
    });

    auto const& p = q.projection;
    auto const& r = q.algebra;
    for (Element a = 0; a < n; ++a) {
      for (Element b = 0; b < n; ++b) {
        if (p[h.meet(a, b)] != r.meet(p[a], p[b])
            || p[h.join(a, b)] != r.join(p[a], p[b])
            || p[h.imp(a, b)] != r.imp(p[a], p[b])) {
          throw InternalInconsistency(
              "quotient projection is not a Heyting homomorphism");
        }
      }
    }
    return q;
  }

  bool check_stone(HeytingAlgebra const& h) {
    for (Element a = 0; a < h.size(); ++a) {
      if (h.join(h.neg(a), h.neg(h.neg(a))) != h.top()) {
        return false;
      }
    }
    return true;
  }

  std::array<bool, 4> dense_pair_conditions(HeytingAlgebra const& h,
                                            Element x, Element y) {
    bool const disjoint = h.meet(x, y) == h.bot();
    return {
        disjoint && h.neg(h.join(x, y)) == h.bot(),
        disjoint && h.meet(h.neg(x), h.neg(y)) == h.bot(),
        h.neg(x) == h.neg(h.neg(y)),
        h.imp(h.neg(x), x) == h.neg(y),
    };
  }

}  // namespace mnl
