#include "mnl/modal_heyting.hpp"

#include <algorithm>

#include "mnl/error.hpp"

namespace mnl {

  ModalHeytingAlgebra::ModalHeytingAlgebra(HeytingAlgebra       h,
                                           std::vector<Element> box,
                                           std::vector<Element> diamond)
      : h_(std::move(h)), box_(std::move(box)), diamond_(std::move(diamond)) {
    auto check = [&](std::vector<Element> const& t, char const* what) {
      if (t.size() != h_.size()) {
        throw InputError(std::string(what) + " table has "
                         + std::to_string(t.size()) + " entries, expected "
                         + std::to_string(h_.size()));
      }
      for (Element x = 0; x < t.size(); ++x) {
        if (t[x] >= h_.size()) {
          throw InputError(std::string(what) + " maps '" + h_.name(x)
                           + "' outside the carrier");
        }
      }
    };
    check(box_, "box");
    check(diamond_, "diamond");
  }

  ModalHeytingAlgebra with_identity_modalities(HeytingAlgebra h) {
    std::vector<Element> id(h.size());
    for (Element x = 0; x < id.size(); ++x) {
      id[x] = x;
    }
    return ModalHeytingAlgebra(std::move(h), id, id);
  }

  namespace {

    using Names = std::vector<std::string>;

    // Runs pred over every element; reports the first failure.
    template <class Pred>
    LawReport unary_law(ModalHeytingAlgebra const& m, std::string law,
                        Pred pred) {
      auto const& h = m.heyting();
      for (Element a = 0; a < h.size(); ++a) {
        if (!pred(a)) {
          return LawReport::fail(std::move(law), Names{h.name(a)});
        }
      }
      return LawReport::pass(std::move(law));
    }

    template <class Pred>
    LawReport binary_law(ModalHeytingAlgebra const& m, std::string law,
                         Pred pred) {
      auto const& h = m.heyting();
      for (Element a = 0; a < h.size(); ++a) {
        for (Element b = 0; b < h.size(); ++b) {
          if (!pred(a, b)) {
            return LawReport::fail(std::move(law),
                                   Names{h.name(a), h.name(b)});
          }
        }
      }
      return LawReport::pass(std::move(law));
    }

    LawReport check_mh1(ModalHeytingAlgebra const& m) {
      auto const& h = m.heyting();
      if (m.box(h.top()) != h.top()) {
        return LawReport::fail("mH1", Names{h.name(h.top())},
                               "□⊤ = " + h.name(m.box(h.top())));
      }
      return LawReport::pass("mH1");
    }

    LawReport check_mh2(ModalHeytingAlgebra const& m) {
      auto const& h = m.heyting();
      return unary_law(m, "mH2", [&](Element a) {
        return h.neg(m.diamond(a)) == m.box(h.neg(a));
      });
    }

    LawReport check_mh3(ModalHeytingAlgebra const& m) {
      auto const& h = m.heyting();
      return binary_law(m, "mH3", [&](Element a, Element b) {
        return h.imp(m.box(h.imp(a, b)), h.imp(m.box(a), m.box(b)))
               == h.top();
      });
    }

    LawReport check_n1(ModalHeytingAlgebra const& m) {
      auto const& h = m.heyting();
      return unary_law(m, "N1", [&](Element a) {
        return h.neg(h.neg(m.box(a))) == h.neg(m.diamond(h.neg(a)));
      });
    }

    LawReport check_n2(ModalHeytingAlgebra const& m) {
      auto const& h = m.heyting();
      return unary_law(m, "N2", [&](Element a) {
        return h.neg(m.box(h.neg(a))) == h.neg(h.neg(m.diamond(a)));
      });
    }

    LawReport check_crisp_box(ModalHeytingAlgebra const& m) {
      auto const& h = m.heyting();
      return unary_law(m, "crisp_box", [&](Element a) {
        return h.neg(h.neg(m.box(a))) == m.box(h.neg(h.neg(a)));
      });
    }

    LawReport check_crisp_diamond(ModalHeytingAlgebra const& m) {
      auto const& h = m.heyting();
      return unary_law(m, "crisp_diamond", [&](Element a) {
        return h.neg(h.neg(m.diamond(a))) == m.diamond(h.neg(h.neg(a)));
      });
    }

    LawReport check_stone_law(ModalHeytingAlgebra const& m) {
      auto const& h = m.heyting();
      return unary_law(m, "stone", [&](Element a) {
        return h.join(h.neg(a), h.neg(h.neg(a))) == h.top();
      });
    }

  }  // namespace

  LawReport check_mh(ModalHeytingAlgebra const& m) {
    auto const& h = m.heyting();
    return binary_law(m, "mH", [&](Element a, Element b) {
      return h.meet(m.box(a), m.diamond(h.meet(h.neg(a), b))) == h.bot();
    });
  }

  LawReport check_mh_quasi(ModalHeytingAlgebra const& m) {
    auto const& h = m.heyting();
    return binary_law(m, "mH_quasi", [&](Element a, Element b) {
      return h.meet(a, b) != h.bot()
             || h.meet(m.box(a), m.diamond(b)) == h.bot();
    });
  }

  LawReport check_filter_condition_F(ModalHeytingAlgebra const& m,
                                     ElementSet                 f) {
    auto const& h = m.heyting();
    if (!is_boolean_filter(h, f)) {
      throw InputError("condition (F) needs a Boolean filter");
    }
    return binary_law(m, "F_condition", [&](Element a, Element b) {
      return h.meet(a, b) != h.bot() || !f.contains(h.join(a, b))
             || f.contains(h.join(m.box(a), m.diamond(b)));
    });
  }

  std::vector<std::string> const& modal_heyting_law_names() {
    static std::vector<std::string> const names = {
        "mH", "mH_quasi", "mH1",           "mH2",   "mH3",        "N1",
        "N2", "crisp_box", "crisp_diamond", "stone", "F_condition"};
    return names;
  }

  LawReport check_law(ModalHeytingAlgebra const& m, std::string_view law,
                      std::optional<ElementSet> filter) {
    if (law == "mH") return check_mh(m);
    if (law == "mH_quasi") return check_mh_quasi(m);
    if (law == "mH1") return check_mh1(m);
    if (law == "mH2") return check_mh2(m);
    if (law == "mH3") return check_mh3(m);
    if (law == "N1") return check_n1(m);
    if (law == "N2") return check_n2(m);
    if (law == "crisp_box") return check_crisp_box(m);
    if (law == "crisp_diamond") return check_crisp_diamond(m);
    if (law == "stone") return check_stone_law(m);
    if (law == "F_condition") {
      if (!filter) {
        throw InputError("law F_condition needs a filter");
      }
      return check_filter_condition_F(m, *filter);
    }
    throw InputError("unknown modal Heyting law '" + std::string(law) + "'");
  }

  // ---------------------------------------------------------------------
  // Enumeration.
  //
  // For a fixed □, (mH) says ◇c ∧ □a = ⊥ whenever a ∧ c = ⊥, i.e.
  //   ◇c ≤ bound(c) = −⋁{□a : a ∧ c = ⊥},
  // and the choices for different c are independent.

  namespace {

    std::vector<std::vector<Element>>
    diamond_choices(HeytingAlgebra const& h, std::vector<Element> const& box) {
      std::size_t const                 n = h.size();
      std::vector<std::vector<Element>> choices(n);
      for (Element c = 0; c < n; ++c) {
        Element j = h.bot();
        for (Element a = 0; a < n; ++a) {
          if (h.meet(a, c) == h.bot()) {
            j = h.join(j, box[a]);
          }
        }
        for (Element d : h.poset().down(h.neg(j))) {
          choices[c].push_back(d);
        }
      }
      return choices;
    }

    bool next_table(std::vector<Element>& t, std::size_t n) {
      for (std::size_t i = t.size(); i-- > 0;) {
        if (++t[i] < n) {
          return true;
        }
        t[i] = 0;
      }
      return false;
    }

    std::uint64_t product_or_cap(
        std::vector<std::vector<Element>> const& choices) {
      std::uint64_t p = 1;
      for (auto const& c : choices) {
        p *= c.size();
      }
      return p;
    }

    struct LawSet {
      bool mh1 = false, mh2 = false, mh3 = false, n1 = false, n2 = false,
           crisp_box = false, crisp_diamond = false, stone = false;
    };

    LawSet parse_laws(std::vector<std::string> const& laws) {
      LawSet s;
      for (auto const& l : laws) {
        if (l == "mH" || l == "mH_quasi") continue;
        else if (l == "mH1") s.mh1 = true;
        else if (l == "mH2") s.mh2 = true;
        else if (l == "mH3") s.mh3 = true;
        else if (l == "N1") s.n1 = true;
        else if (l == "N2") s.n2 = true;
        else if (l == "crisp_box") s.crisp_box = true;
        else if (l == "crisp_diamond") s.crisp_diamond = true;
        else if (l == "stone") s.stone = true;
        else if (l == "F_condition")
          throw InputError("F_condition needs a filter and cannot constrain "
                           "an enumeration");
        else
          throw InputError("unknown modal Heyting law '" + l + "'");
      }
      return s;
    }

    // Search over (□, ◇) tables with pruning. Entries are fixed in index
    // order, so a local law is tested as soon as every entry it reads is
    // fixed.
    class PairSearch {
     public:
      PairSearch(HeytingAlgebra const& h, LawSet laws, EnumerationBudget budget,
                 std::function<bool(ModalPair const&)> const& visit)
          : h_(h), laws_(laws), budget_(budget), visit_(visit), n_(h.size()) {
        pair_.box.assign(n_, 0);
        pair_.diamond.assign(n_, 0);
      }

      EnumerationStats run() {
        if (laws_.stone && !check_stone(h_)) {
          return stats_;
        }
        box_step(0);
        return stats_;
      }

     private:
      bool tick() {
        if (stats_.nodes >= budget_.max_nodes) {
          stop();
          return false;
        }
        ++stats_.nodes;
        return true;
      }

      void stop() {
        stopped_        = true;
        stats_.complete = false;
      }

      // Every law that reads only □ entries with index ≤ x.
      bool box_ok(Element x) const {
        auto const& b = pair_.box;
        if (laws_.mh1 && x == h_.top() && b[x] != h_.top()) {
          return false;
        }
        if (laws_.crisp_box) {
          for (Element a = 0; a <= x; ++a) {
            Element aa = h_.neg(h_.neg(a));
            if ((a == x && aa <= x) || (aa == x && a <= x)) {
              if (h_.neg(h_.neg(b[a])) != b[aa]) {
                return false;
              }
            }
          }
        }
        if (laws_.mh3) {
          for (Element a = 0; a <= x; ++a) {
            for (Element c = 0; c <= x; ++c) {
              Element ac = h_.imp(a, c);
              if (std::max({a, c, ac}) != x) {
                continue;
              }
              if (h_.imp(b[ac], h_.imp(b[a], b[c])) != h_.top()) {
                return false;
              }
            }
          }
        }
        return true;
      }

      // Every law that reads □ (fully fixed) and ◇ entries with index ≤ x.
      bool diamond_ok(Element x) const {
        auto const& b = pair_.box;
        auto const& d = pair_.diamond;
        if (laws_.mh2 && h_.neg(d[x]) != b[h_.neg(x)]) {
          return false;
        }
        if (laws_.n2 && h_.neg(b[h_.neg(x)]) != h_.neg(h_.neg(d[x]))) {
          return false;
        }
        if (laws_.n1) {
          for (Element a = 0; a < n_; ++a) {
            if (h_.neg(a) == x
                && h_.neg(h_.neg(b[a])) != h_.neg(d[x])) {
              return false;
            }
          }
        }
        if (laws_.crisp_diamond) {
          for (Element a = 0; a <= x; ++a) {
            Element aa = h_.neg(h_.neg(a));
            if ((a == x && aa <= x) || (aa == x && a <= x)) {
              if (h_.neg(h_.neg(d[a])) != d[aa]) {
                return false;
              }
            }
          }
        }
        return true;
      }

      void box_step(Element x) {
        if (stopped_) {
          return;
        }
        if (x == n_) {
          choices_ = diamond_choices(h_, pair_.box);
          diamond_step(0);
          return;
        }
        for (Element v = 0; v < n_ && !stopped_; ++v) {
          if (!tick()) {
            return;
          }
          pair_.box[x] = v;
          if (box_ok(x)) {
            box_step(x + 1);
          }
        }
      }

      void diamond_step(Element x) {
        if (stopped_) {
          return;
        }
        if (x == n_) {
          if (stats_.yielded >= budget_.max_results) {
            stop();
            return;
          }
          ++stats_.yielded;
          if (!visit_(pair_)) {
            stop();
          }
          return;
        }
        for (Element v : choices_[x]) {
          if (stopped_ || !tick()) {
            return;
          }
          pair_.diamond[x] = v;
          if (diamond_ok(x)) {
            diamond_step(x + 1);
          }
        }
      }

      HeytingAlgebra const&                        h_;
      LawSet                                       laws_;
      EnumerationBudget                            budget_;
      std::function<bool(ModalPair const&)> const& visit_;
      std::size_t                                  n_;
      ModalPair                                    pair_;
      std::vector<std::vector<Element>>            choices_;
      EnumerationStats                             stats_;
      bool                                         stopped_ = false;
    };

  }  // namespace

  EnumerationStats enumerate_modal_pairs(
      HeytingAlgebra const& h, std::vector<std::string> const& laws,
      EnumerationBudget                            budget,
      std::function<bool(ModalPair const&)> const& visit) {
    PairSearch search(h, parse_laws(laws), budget, visit);
    return search.run();
  }

  std::vector<ModalPair>
  enumerate_modal_pairs(HeytingAlgebra const&           h,
                        std::vector<std::string> const& laws,
                        EnumerationBudget               budget) {
    std::vector<ModalPair> out;
    enumerate_modal_pairs(h, laws, budget, [&](ModalPair const& p) {
      out.push_back(p);
      return true;
    });
    return out;
  }

  namespace {
    std::uint64_t box_table_count(std::size_t n, std::uint64_t cap) {
      std::uint64_t total = 1;
      for (std::size_t i = 0; i < n; ++i) {
        if (total > cap / std::max<std::size_t>(n, 1)) {
          throw LimitExceeded("more than " + std::to_string(cap)
                              + " box tables");
        }
        total *= n;
      }
      return total;
    }
  }  // namespace

  std::uint64_t count_mh_pairs(HeytingAlgebra const& h,
                               std::uint64_t         max_box_tables) {
    box_table_count(h.size(), max_box_tables);
    std::vector<Element> box(h.size(), 0);
    std::uint64_t        total = 0;
    do {
      total += product_or_cap(diamond_choices(h, box));
    } while (next_table(box, h.size()));
    return total;
  }

  ModalPair mh_pair_at(HeytingAlgebra const& h, std::uint64_t rank) {
    std::vector<Element> box(h.size(), 0);
    do {
      auto const          choices = diamond_choices(h, box);
      std::uint64_t const here    = product_or_cap(choices);
      if (rank < here) {
        ModalPair p{box, std::vector<Element>(h.size())};
        for (std::size_t c = h.size(); c-- > 0;) {
          p.diamond[c] = choices[c][rank % choices[c].size()];
          rank /= choices[c].size();
        }
        return p;
      }
      rank -= here;
    } while (next_table(box, h.size()));
    throw InputError("rank beyond the number of (mH) pairs");
  }

}  // namespace mnl
