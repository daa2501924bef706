#pragma once

// Slow reference implementations used as test oracles. None of these call
// into the library beyond reading names and the order of an already-built
// algebra; everything else is recomputed from scratch.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "mnl/heyting.hpp"
#include "mnl/modal_heyting.hpp"

namespace oracle {

  using mnl::Element;

  // n×n order matrix as nested vectors.
  using Order = std::vector<std::vector<bool>>;

  inline Order closure(std::size_t n,
                       std::vector<std::pair<Element, Element>> const& covers) {
    Order leq(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i) {
      leq[i][i] = true;
    }
    for (auto [a, b] : covers) {
      leq[a][b] = true;
    }
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          if (leq[i][k] && leq[k][j]) {
            leq[i][j] = true;
          }
        }
      }
    }
    return leq;
  }

  inline Order order_of(mnl::FinitePoset const& p) {
    Order leq(p.size(), std::vector<bool>(p.size()));
    for (Element a = 0; a < p.size(); ++a) {
      for (Element b = 0; b < p.size(); ++b) {
        leq[a][b] = p.leq(a, b);
      }
    }
    return leq;
  }

  // Greatest lower bound / least upper bound by scanning all candidates;
  // returns n if none exists.
  inline Element glb(Order const& leq, Element a, Element b) {
    std::size_t const n = leq.size();
    for (Element c = 0; c < n; ++c) {
      if (!leq[c][a] || !leq[c][b]) {
        continue;
      }
      bool greatest = true;
      for (Element d = 0; d < n && greatest; ++d) {
        if (leq[d][a] && leq[d][b] && !leq[d][c]) {
          greatest = false;
        }
      }
      if (greatest) {
        return c;
      }
    }
    return static_cast<Element>(n);
  }

  inline Element lub(Order const& leq, Element a, Element b) {
    std::size_t const n = leq.size();
    for (Element c = 0; c < n; ++c) {
      if (!leq[a][c] || !leq[b][c]) {
        continue;
      }
      bool least = true;
      for (Element d = 0; d < n && least; ++d) {
        if (leq[a][d] && leq[b][d] && !leq[c][d]) {
          least = false;
        }
      }
      if (least) {
        return c;
      }
    }
    return static_cast<Element>(n);
  }

  // max{c : a ∧ c ≤ b} by scanning.
  inline Element implication(Order const& leq, Element a, Element b) {
    std::size_t const n = leq.size();
    Element           best = static_cast<Element>(n);
    for (Element c = 0; c < n; ++c) {
      if (!leq[glb(leq, a, c)][b]) {
        continue;
      }
      if (best == n || leq[best][c]) {
        best = c;
      }
    }
    return best;
  }

  // Plain tables of a Heyting algebra recomputed from its order only.
  struct Tables {
    std::size_t                        n = 0;
    Element                            bot = 0, top = 0;
    std::vector<std::vector<Element>>  meet, join, imp;
    Order                              leq;

    Element neg(Element a) const {
      return imp[a][bot];
    }
  };

  inline Tables tables_of(mnl::HeytingAlgebra const& h) {
    Tables t;
    t.n   = h.size();
    t.leq = order_of(h.poset());
    t.meet.assign(t.n, std::vector<Element>(t.n));
    t.join = t.meet;
    t.imp  = t.meet;
    for (Element a = 0; a < t.n; ++a) {
      for (Element b = 0; b < t.n; ++b) {
        t.meet[a][b] = glb(t.leq, a, b);
        t.join[a][b] = lub(t.leq, a, b);
        t.imp[a][b]  = implication(t.leq, a, b);
      }
      bool is_bot = true, is_top = true;
      for (Element b = 0; b < t.n; ++b) {
        is_bot = is_bot && t.leq[a][b];
        is_top = is_top && t.leq[b][a];
      }
      if (is_bot) t.bot = a;
      if (is_top) t.top = a;
    }
    return t;
  }

  // Filters by testing every subset.
  inline std::vector<std::uint64_t> filters(Tables const& t) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t s = 1; s < (std::uint64_t{1} << t.n); ++s) {
      bool ok = true;
      for (Element a = 0; a < t.n && ok; ++a) {
        if (!((s >> a) & 1U)) continue;
        for (Element b = 0; b < t.n && ok; ++b) {
          if (t.leq[a][b] && !((s >> b) & 1U)) ok = false;
          if (((s >> b) & 1U) && !((s >> t.meet[a][b]) & 1U)) ok = false;
        }
      }
      if (ok) out.push_back(s);
    }
    return out;
  }

  inline bool mh_holds(Tables const& t, std::vector<Element> const& box,
                       std::vector<Element> const& dia) {
    for (Element a = 0; a < t.n; ++a) {
      for (Element b = 0; b < t.n; ++b) {
        if (t.meet[box[a]][dia[t.meet[t.neg(a)][b]]] != t.bot) return false;
      }
    }
    return true;
  }

  inline bool mh_quasi_holds(Tables const& t, std::vector<Element> const& box,
                             std::vector<Element> const& dia) {
    for (Element a = 0; a < t.n; ++a) {
      for (Element b = 0; b < t.n; ++b) {
        if (t.meet[a][b] == t.bot && t.meet[box[a]][dia[b]] != t.bot) {
          return false;
        }
      }
    }
    return true;
  }

  inline bool next_table(std::vector<Element>& t, std::size_t n) {
    for (std::size_t i = t.size(); i-- > 0;) {
      if (++t[i] < n) return true;
      t[i] = 0;
    }
    return false;
  }

  // Every (□, ◇) over all nⁿ × nⁿ tables, in lexicographic order.
  template <typename F>
  void for_each_pair(std::size_t n, F&& f) {
    std::vector<Element> box(n, 0);
    do {
      std::vector<Element> dia(n, 0);
      do {
        f(box, dia);
      } while (next_table(dia, n));
    } while (next_table(box, n));
  }

  // Counts (mH) pairs twice, once with the equation and once with the
  // quasi-equation; the two passes must agree.
  inline std::pair<std::uint64_t, std::uint64_t>
  count_mh_two_pass(mnl::HeytingAlgebra const& h) {
    Tables const  t = tables_of(h);
    std::uint64_t eq = 0, quasi = 0;
    for_each_pair(t.n, [&](auto const& box, auto const& dia) {
      eq += mh_holds(t, box, dia) ? 1 : 0;
    });
    for_each_pair(t.n, [&](auto const& box, auto const& dia) {
      quasi += mh_quasi_holds(t, box, dia) ? 1 : 0;
    });
    return {eq, quasi};
  }

  // Admissible twist pairs by direct scan, lexicographic.
  inline std::vector<std::pair<Element, Element>>
  twist_pairs(Tables const& t, std::uint64_t filter) {
    std::vector<std::pair<Element, Element>> out;
    for (Element x = 0; x < t.n; ++x) {
      for (Element y = 0; y < t.n; ++y) {
        if (t.meet[x][y] == t.bot && ((filter >> t.join[x][y]) & 1U)) {
          out.emplace_back(x, y);
        }
      }
    }
    return out;
  }

}  // namespace oracle
