#include "mnl/catalog.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>
#include <tuple>

#include "mnl/error.hpp"

namespace mnl {

  namespace {

    // down[i] = points ≤ i.
    using Rows = std::vector<std::uint32_t>;

    std::uint64_t code_under(Rows const& down, std::vector<Element> const& pi) {
      std::size_t const k    = down.size();
      std::uint64_t     code = 0;
      for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
          code = (code << 1) | ((down[pi[j]] >> pi[i]) & 1U);
        }
      }
      return code;
    }

    // The relabelling with the least code; returns the relabelled rows.
    Rows canonical(Rows const& down) {
      std::size_t const    k = down.size();
      std::vector<Element> pi(k), best;
      std::iota(pi.begin(), pi.end(), 0);
      std::uint64_t best_code = ~std::uint64_t{0};
      do {
        std::uint64_t c = code_under(down, pi);
        if (c < best_code) {
          best_code = c;
          best      = pi;
        }
      } while (std::next_permutation(pi.begin(), pi.end()));
      // Point i of the result is best[i] of the input.
      Rows out(k, 0);
      for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
          if ((down[best[i]] >> best[j]) & 1U) {
            out[i] |= 1U << j;
          }
        }
      }
      return out;
    }

    std::vector<std::uint32_t> down_sets(Rows const& down) {
      std::size_t const          k = down.size();
      std::vector<std::uint32_t> out;
      for (std::uint32_t s = 0; s < (1U << k); ++s) {
        bool closed = true;
        for (std::size_t i = 0; i < k && closed; ++i) {
          if (((s >> i) & 1U) && (down[i] & ~s) != 0) {
            closed = false;
          }
        }
        if (closed) {
          out.push_back(s);
        }
      }
      return out;
    }

    HeytingAlgebra lattice_of_downsets(Rows const& down) {
      auto sets = down_sets(down);
      std::sort(sets.begin(), sets.end(), [](std::uint32_t a, std::uint32_t b) {
        return std::pair(std::popcount(a), a) < std::pair(std::popcount(b), b);
      });
      std::uint32_t const      full = (1U << down.size()) - 1;
      std::vector<std::string> names;
      std::size_t              next = 1;
      for (std::uint32_t s : sets) {
        if (s == 0) {
          names.push_back("0");
        } else if (s == full) {
          names.push_back("1");
        } else {
          names.push_back("e" + std::to_string(next++));
        }
      }
      return heyting_from_order(std::move(names), [&](Element a, Element b) {
        return (sets[a] & ~sets[b]) == 0;
      });
    }

    std::vector<Element> table_of(HeytingAlgebra const& h, auto const& f) {
      std::vector<Element> t(h.size());
      for (Element a = 0; a < h.size(); ++a) {
        t[a] = f(a);
      }
      return t;
    }

  }  // namespace

  HeytingAlgebra chain3() {
    return heyting_from_covers({"⊥", "m", "⊤"}, {{"⊥", "m"}, {"m", "⊤"}});
  }

  HeytingAlgebra chain(std::size_t n) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) {
      names.push_back(std::to_string(i));
    }
    return heyting_from_order(std::move(names),
                              [](Element a, Element b) { return a <= b; });
  }

  HeytingAlgebra boolean_power(std::size_t k) {
    if (k > 6) {
      throw LimitExceeded("Boolean algebras beyond 2^6 are not supported");
    }
    std::vector<std::uint32_t> sets(std::size_t{1} << k);
    std::iota(sets.begin(), sets.end(), 0U);
    std::sort(sets.begin(), sets.end(), [](std::uint32_t a, std::uint32_t b) {
      return std::pair(std::popcount(a), a) < std::pair(std::popcount(b), b);
    });
    std::uint32_t const      full = static_cast<std::uint32_t>(sets.size() - 1);
    std::vector<std::string> names;
    for (std::uint32_t s : sets) {
      if (s == 0) {
        names.push_back("0");
      } else if (s == full) {
        names.push_back("1");
      } else {
        std::string n;
        for (std::size_t i = 0; i < k; ++i) {
          if ((s >> i) & 1U) {
            n += static_cast<char>('a' + i);
          }
        }
        names.push_back(n);
      }
    }
    return heyting_from_order(std::move(names), [&](Element a, Element b) {
      return (sets[a] & ~sets[b]) == 0;
    });
  }

  ModalHeytingAlgebra figure_one() {
    HeytingAlgebra h = heyting_from_covers(
        {"⊥", "b", "a", "c", "⊤"},
        {{"⊥", "b"}, {"b", "a"}, {"b", "c"}, {"a", "⊤"}, {"c", "⊤"}});
    auto at = [&](char const* name) { return *h.poset().index_of(name); };
    std::vector<Element> box = {at("⊥"), at("c"), at("a"), at("a"), at("c")};
    std::vector<Element> dia = {at("⊥"), at("c"), at("b"), at("a"), at("⊤")};
    return ModalHeytingAlgebra(std::move(h), std::move(box), std::move(dia));
  }

  std::vector<HeytingAlgebra> distributive_lattices(std::size_t max_size) {
    if (max_size > 8) {
      throw LimitExceeded("distributive lattice catalog is limited to size 8");
    }
    // Posets by number of points, as canonical rows. Every poset arises
    // from a smaller one by adding a maximal point over a down-set.
    std::vector<std::set<Rows>> posets(1);
    posets[0].insert(Rows{});
    for (std::size_t k = 1; k + 1 <= max_size; ++k) {
      std::set<Rows> next;
      for (Rows const& p : posets[k - 1]) {
        for (std::uint32_t d : down_sets(p)) {
          Rows q = p;
          q.push_back(d | (1U << (k - 1)));
          next.insert(canonical(q));
        }
      }
      posets.push_back(std::move(next));
    }

    struct Candidate {
      std::size_t   size;
      std::uint64_t code;
      Rows          rows;
    };
    std::vector<Candidate> found;
    for (auto const& level : posets) {
      for (Rows const& p : level) {
        std::size_t n = down_sets(p).size();
        if (n <= max_size) {
          std::vector<Element> id(p.size());
          std::iota(id.begin(), id.end(), 0);
          found.push_back({n, code_under(p, id), p});
        }
      }
    }
    std::sort(found.begin(), found.end(), [](auto const& a, auto const& b) {
      return std::tuple(a.size, a.rows.size(), a.code)
             < std::tuple(b.size, b.rows.size(), b.code);
    });
    std::vector<HeytingAlgebra> out;
    for (auto const& c : found) {
      out.push_back(lattice_of_downsets(c.rows));
    }
    return out;
  }

  std::vector<CatalogEntry> build_catalog(std::size_t max_size) {
    std::vector<CatalogEntry> out;
    std::size_t               last_size = 0, k = 0;
    for (auto& h : distributive_lattices(max_size)) {
      k         = h.size() == last_size ? k + 1 : 1;
      last_size = h.size();
      out.push_back({"dl" + std::to_string(h.size()) + "_" + std::to_string(k),
                     make_document(h)});
    }
    out.push_back({"c3", make_document(chain3())});
    out.push_back({"fig1", make_document(figure_one())});
    for (std::size_t i = 1; i <= 3; ++i) {
      out.push_back({"boolean" + std::to_string(1U << i),
                     make_document(boolean_power(i))});
    }
    return out;
  }

  std::vector<ModalPair> sweep_pairs(HeytingAlgebra const& h,
                                     std::size_t           budget) {
    std::vector<std::vector<Element>> ops = {
        table_of(h, [](Element a) { return a; }),
        table_of(h, [&](Element a) { return h.neg(h.neg(a)); }),
        table_of(h, [&](Element) { return h.bot(); }),
        table_of(h, [&](Element) { return h.top(); }),
    };
    std::set<ModalPair> out;
    for (auto const& box : ops) {
      for (auto const& dia : ops) {
        if (check_mh(ModalHeytingAlgebra(h, box, dia))) {
          out.insert({box, dia});
        }
      }
    }

    std::uint64_t total = 0;
    try {
      total = count_mh_pairs(h);
    } catch (LimitExceeded const&) {
      EnumerationBudget b;
      b.max_results = budget;
      for (auto& p : enumerate_modal_pairs(h, {"mH"}, b)) {
        out.insert(std::move(p));
      }
      return {out.begin(), out.end()};
    }
    if (total <= budget) {
      for (std::uint64_t r = 0; r < total; ++r) {
        out.insert(mh_pair_at(h, r));
      }
    } else {
      for (std::uint64_t i = 0; i < budget; ++i) {
        out.insert(mh_pair_at(h, i * total / budget));
      }
    }
    return {out.begin(), out.end()};
  }

  std::vector<ModalHeytingAlgebra>
  sweep_instances(std::vector<CatalogEntry> const& catalog,
                  std::size_t                      budget) {
    std::vector<ModalHeytingAlgebra> out;
    for (auto const& e : catalog) {
      Document const& d = e.document;
      if (d.kind == DocumentKind::modal_heyting) {
        out.push_back(d.algebra);
      } else if (d.kind == DocumentKind::heyting) {
        auto const& h = d.algebra.heyting();
        for (auto const& p : sweep_pairs(h, budget)) {
          out.emplace_back(h, p.box, p.diamond);
        }
      }
    }
    return out;
  }

  std::vector<ElementSet> tw_filters(ModalHeytingAlgebra const& m) {
    std::vector<ElementSet> out;
    for (ElementSet f : boolean_filters(m.heyting())) {
      if (check_filter_condition_F(m, f)) {
        out.push_back(f);
      }
    }
    return out;
  }

}  // namespace mnl
