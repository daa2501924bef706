#include "mnl/twist.hpp"

#include <algorithm>

#include "mnl/error.hpp"

namespace mnl {

  std::optional<Element> TwistAlgebra::index_of(TwistPair p) const {
    auto it = std::lower_bound(pairs.begin(), pairs.end(), p);
    if (it == pairs.end() || *it != p) {
      return std::nullopt;
    }
    return static_cast<Element>(it - pairs.begin());
  }

  std::string pair_name(HeytingAlgebra const& h, TwistPair p) {
    return "(" + h.name(p.first) + "," + h.name(p.second) + ")";
  }

  namespace {

    constexpr std::size_t npos = static_cast<std::size_t>(-1);

    std::vector<TwistPair> admissible_pairs(HeytingAlgebra const& h,
                                            ElementSet            f) {
      std::vector<TwistPair> pairs;
      for (Element x = 0; x < h.size(); ++x) {
        for (Element y = 0; y < h.size(); ++y) {
          if (h.meet(x, y) == h.bot() && f.contains(h.join(x, y))) {
            pairs.push_back({x, y});
          }
        }
      }
      return pairs;
    }

    TwistAlgebra build(HeytingAlgebra const& h, ModalHeytingAlgebra const* m,
                       ElementSet f) {
      TwistAlgebra t;
      t.pairs     = admissible_pairs(h, f);
      t.filter    = f;
      t.base_size = h.size();
      auto const& ps = t.pairs;

      std::vector<std::string> names;
      for (auto p : ps) {
        names.push_back(pair_name(h, p));
      }
      FiniteLattice lat = lattice_from_poset(
          FinitePoset::from_relation(names, [&](Element i, Element j) {
            return h.leq(ps[i].first, ps[j].first)
                   && h.leq(ps[j].second, ps[i].second);
          }));

      auto at = [&](TwistPair p, char const* op) {
        auto k = t.index_of(p);
        if (!k) {
          throw InternalInconsistency(std::string("twist carrier is not "
                                                  "closed under ")
                                      + op + ": " + pair_name(h, p));
        }
        return *k;
      };

      std::size_t const    n = ps.size();
      std::vector<Element> fusion(n * n), res(n * n);
      for (Element i = 0; i < n; ++i) {
        auto [x, y] = ps[i];
        for (Element j = 0; j < n; ++j) {
          auto [s, u] = ps[j];
          if (lat.meet(i, j) != at({h.meet(x, s), h.join(y, u)}, "∧")
              || lat.join(i, j) != at({h.join(x, s), h.meet(y, u)}, "∨")) {
            throw InternalInconsistency(
                "twist lattice operations disagree with the pair order");
          }
          fusion[i * n + j] =
              at({h.meet(x, s), h.meet(h.imp(x, u), h.imp(s, y))}, "*");
          res[i * n + j] =
              at({h.meet(h.imp(x, s), h.imp(u, y)), h.meet(x, u)}, "⇒");
        }
      }
      if (!m) {
        t.algebra = ModalNelsonLattice(std::move(lat), std::move(fusion),
                                       std::move(res));
        return t;
      }
      std::vector<Element> bsq(n), bdia(n);
      for (Element i = 0; i < n; ++i) {
        auto [x, y] = ps[i];
        bsq[i]  = at({m->box(x), m->diamond(y)}, "■");
        bdia[i] = at({m->diamond(x), m->box(y)}, "◆");
      }
      t.algebra = ModalNelsonLattice(std::move(lat), std::move(fusion),
                                     std::move(res), std::move(bsq),
                                     std::move(bdia));
      return t;
    }

    void require_boolean_filter(HeytingAlgebra const& h, ElementSet f) {
      if (!is_filter(h, f)) {
        throw InputError("twist needs a filter of the base algebra");
      }
      if (!is_boolean_filter(h, f)) {
        throw InputError("twist needs a Boolean filter; "
                         + names_of(h.poset(), dense_elements(h) - f).front()
                         + " is dense but missing");
      }
    }

  }  // namespace

  TwistAlgebra twist_full(ModalHeytingAlgebra const& m) {
    LawReport r = check_mh(m);
    if (!r.holds) {
      throw InputError("twist needs a modal Heyting algebra; " + to_string(r));
    }
    return build(m.heyting(), &m, m.heyting().all());
  }

  TwistAlgebra twist_filtered(ModalHeytingAlgebra const& m, ElementSet f) {
    LawReport r = check_mh(m);
    if (!r.holds) {
      throw InputError("twist needs a modal Heyting algebra; " + to_string(r));
    }
    require_boolean_filter(m.heyting(), f);
    r = check_filter_condition_F(m, f);
    if (!r.holds) {
      throw InputError("filter violates condition (F); " + to_string(r));
    }
    return build(m.heyting(), &m, f);
  }

  TwistAlgebra twist_full(HeytingAlgebra const& h) {
    return build(h, nullptr, h.all());
  }

  TwistAlgebra twist_filtered(HeytingAlgebra const& h, ElementSet f) {
    require_boolean_filter(h, f);
    return build(h, nullptr, f);
  }

  bool twist_carrier_modal_closed(ModalHeytingAlgebra const& m, ElementSet f) {
    auto const& h = m.heyting();
    for (auto [x, y] : admissible_pairs(h, f)) {
      for (auto [s, t] : {std::pair{m.box(x), m.diamond(y)},
                          std::pair{m.diamond(x), m.box(y)}}) {
        if (h.meet(s, t) != h.bot() || !f.contains(h.join(s, t))) {
          return false;
        }
      }
    }
    return true;
  }

  ElementSet recover_filter(TwistAlgebra const& full, ElementSet b) {
    auto const& n = full.algebra;
    if (!b.subset_of(n.poset().all())) {
      throw InputError("subset is not inside the twist carrier");
    }
    if (!b.contains(n.bot()) || !b.contains(n.top())) {
      throw InputError("subset is not a subalgebra: missing a constant");
    }
    for (Element a : b) {
      for (Element c : b) {
        for (Element v : {n.meet(a, c), n.join(a, c), n.fusion(a, c),
                          n.res(a, c)}) {
          if (!b.contains(v)) {
            throw InputError("subset is not a subalgebra: not closed at ('"
                             + n.name(a) + "', '" + n.name(c) + "')");
          }
        }
      }
    }
    ElementSet firsts, f;
    for (Element a : b) {
      firsts.insert(full.pairs[a].first);
      f.insert(full.pairs[n.join(a, n.neg(a))].first);
    }
    if (firsts != ElementSet::full(full.base_size)) {
      throw InputError("first projection of the subalgebra is not onto");
    }
    // (x,y) ∨ ∼(x,y) = (x∨y, ⊥), so membership in R(H, F) is read off the
    // first coordinate of a ∨ ∼a.
    ElementSet rebuilt;
    for (Element a = 0; a < full.pairs.size(); ++a) {
      if (f.contains(full.pairs[n.join(a, n.neg(a))].first)) {
        rebuilt.insert(a);
      }
    }
    if (rebuilt != b) {
      throw InternalInconsistency("twisting with the recovered filter does "
                                  "not reproduce the subalgebra");
    }
    return f;
  }

  // -----------------------------------------------------------------------

  Morphism identity_morphism(std::size_t n) {
    Morphism f;
    for (Element x = 0; x < n; ++x) {
      f.map.push_back(x);
    }
    return f;
  }

  Morphism compose(Morphism const& g, Morphism const& f) {
    Morphism r;
    for (Element y : f.map) {
      r.map.push_back(g(y));
    }
    return r;
  }

  bool is_bijective(Morphism const& f, std::size_t target_size) {
    if (f.map.size() != target_size) {
      return false;
    }
    ElementSet image;
    for (Element y : f.map) {
      if (y >= target_size) {
        return false;
      }
      image.insert(y);
    }
    return image.size() == target_size;
  }

  namespace {

    using Names = std::vector<std::string>;

    void require_total(Morphism const& f, std::size_t from, std::size_t to) {
      if (f.map.size() != from) {
        throw InputError("map has " + std::to_string(f.map.size())
                         + " entries, expected " + std::to_string(from));
      }
      for (Element y : f.map) {
        if (y >= to) {
          throw InputError("map points outside its target");
        }
      }
    }

    // Shared loop: constants, then unary operations, then binary ones.
    template <class A, class B>
    LawReport preserves(std::string law, A const& a, B const& b,
                        Morphism const& f,
                        std::vector<std::pair<std::string,
                                              std::function<Element(
                                                  bool, Element)>>> const&
                            unary,
                        std::vector<std::pair<std::string,
                                              std::function<Element(
                                                  bool, Element, Element)>>> const&
                            binary) {
      if (f(a.bot()) != b.bot() || f(a.top()) != b.top()) {
        return LawReport::fail(std::move(law),
                               Names{a.name(a.bot()), a.name(a.top())},
                               "bounds are not preserved");
      }
      for (auto const& [op, fn] : unary) {
        for (Element x = 0; x < a.size(); ++x) {
          if (f(fn(true, x)) != fn(false, f(x))) {
            return LawReport::fail(std::move(law), Names{a.name(x)},
                                   op + " is not preserved");
          }
        }
      }
      for (auto const& [op, fn] : binary) {
        for (Element x = 0; x < a.size(); ++x) {
          for (Element y = 0; y < a.size(); ++y) {
            if (f(fn(true, x, y)) != fn(false, f(x), f(y))) {
              return LawReport::fail(std::move(law),
                                     Names{a.name(x), a.name(y)},
                                     op + " is not preserved");
            }
          }
        }
      }
      return LawReport::pass(std::move(law));
    }

  }  // namespace

  LawReport check_heyting_hom(HeytingAlgebra const& a, HeytingAlgebra const& b,
                              Morphism const& f) {
    require_total(f, a.size(), b.size());
    auto pick = [&](bool src) -> HeytingAlgebra const& { return src ? a : b; };
    return preserves(
        "heyting_hom", a, b, f, {},
        {{"∧", [&](bool s, Element x, Element y) { return pick(s).meet(x, y); }},
         {"∨", [&](bool s, Element x, Element y) { return pick(s).join(x, y); }},
         {"⇀", [&](bool s, Element x, Element y) { return pick(s).imp(x, y); }}});
  }

  LawReport check_modal_heyting_hom(ModalHeytingAlgebra const& a,
                                    ModalHeytingAlgebra const& b,
                                    Morphism const&            f) {
    LawReport r = check_heyting_hom(a.heyting(), b.heyting(), f);
    if (!r.holds) {
      r.law = "modal_heyting_hom";
      return r;
    }
    auto pick = [&](bool s) -> ModalHeytingAlgebra const& { return s ? a : b; };
    return preserves(
        "modal_heyting_hom", a.heyting(), b.heyting(), f,
        {{"□", [&](bool s, Element x) { return pick(s).box(x); }},
         {"◇", [&](bool s, Element x) { return pick(s).diamond(x); }}},
        {});
  }

  LawReport check_tw_morphism(ModalHeytingAlgebra const& a, ElementSet f1,
                              ModalHeytingAlgebra const& b, ElementSet f2,
                              Morphism const& f) {
    LawReport r = check_modal_heyting_hom(a, b, f);
    r.law       = "tw_morphism";
    if (!r.holds) {
      return r;
    }
    for (Element x : f1) {
      if (!f2.contains(f(x))) {
        return LawReport::fail("tw_morphism", Names{a.heyting().name(x)},
                               "image of the filter escapes the target "
                               "filter");
      }
    }
    return r;
  }

  LawReport check_nelson_hom(ModalNelsonLattice const& a,
                             ModalNelsonLattice const& b, Morphism const& f) {
    require_total(f, a.size(), b.size());
    auto pick = [&](bool s) -> ModalNelsonLattice const& { return s ? a : b; };
    std::vector<std::pair<std::string, std::function<Element(bool, Element)>>>
        unary;
    if (a.has_modal() && b.has_modal()) {
      unary = {{"■", [&](bool s, Element x) { return pick(s).bsq(x); }},
               {"◆", [&](bool s, Element x) { return pick(s).bdia(x); }}};
    }
    return preserves(
        "nelson_hom", a, b, f, unary,
        {{"∧", [&](bool s, Element x, Element y) { return pick(s).meet(x, y); }},
         {"∨", [&](bool s, Element x, Element y) { return pick(s).join(x, y); }},
         {"*",
          [&](bool s, Element x, Element y) { return pick(s).fusion(x, y); }},
         {"⇒",
          [&](bool s, Element x, Element y) { return pick(s).res(x, y); }}});
  }

  // -----------------------------------------------------------------------

  IsoH iso_h(ModalNelsonLattice const& n) {
    bool const valid = n.has_modal()
                           ? is_mn_lattice(n)
                           : check_residuated(n).holds && check_nelson(n).holds;
    if (!valid) {
      throw InputError(n.has_modal() ? "iso_h needs an MN-lattice"
                                     : "iso_h needs a Nelson lattice");
    }
    IsoH out;
    out.hstar  = h_star(n);
    out.fstar  = f_star(n, out.hstar);
    out.target = n.has_modal()
                     ? twist_filtered(out.hstar.algebra, out.fstar)
                     : twist_filtered(out.hstar.algebra.heyting(), out.fstar);
    auto const& idx = out.hstar.index_of;
    for (Element a = 0; a < n.size(); ++a) {
      TwistPair p{static_cast<Element>(idx[n.square(a)]),
                  static_cast<Element>(idx[n.square(n.neg(a))])};
      auto k = out.target.index_of(p);
      if (!k) {
        throw InternalInconsistency("h(" + n.name(a)
                                    + ") is not in N(M*, F*)");
      }
      out.map.map.push_back(*k);
    }
    if (!is_bijective(out.map, out.target.pairs.size())) {
      throw InternalInconsistency("h is not a bijection onto N(M*, F*)");
    }
    LawReport r = check_nelson_hom(n, out.target.algebra, out.map);
    if (!r.holds) {
      throw InternalInconsistency("h is not a homomorphism: " + to_string(r));
    }
    return out;
  }

  IsoBeta iso_beta(ModalHeytingAlgebra const& m, ElementSet f) {
    IsoBeta out;
    out.twist = twist_filtered(m, f);
    out.hstar = h_star(out.twist.algebra);
    out.fstar = f_star(out.twist.algebra, out.hstar);
    auto const& h = m.heyting();
    for (Element a = 0; a < h.size(); ++a) {
      auto k = out.twist.index_of({a, h.neg(a)});
      if (!k || out.hstar.index_of[*k] == HStar::npos) {
        throw InternalInconsistency("β(" + h.name(a)
                                    + ") is not an idempotent");
      }
      out.map.map.push_back(static_cast<Element>(out.hstar.index_of[*k]));
    }
    if (!is_bijective(out.map, out.hstar.algebra.size())) {
      throw InternalInconsistency("β is not a bijection onto H*");
    }
    LawReport r = check_modal_heyting_hom(m, out.hstar.algebra, out.map);
    if (!r.holds) {
      throw InternalInconsistency("β is not a homomorphism: " + to_string(r));
    }
    ElementSet image;
    for (Element a : f) {
      image.insert(out.map(a));
    }
    if (image != out.fstar) {
      throw InternalInconsistency("β[F] ≠ F*");
    }
    return out;
  }

  // -----------------------------------------------------------------------

  TwObject functor_F(ModalNelsonLattice const& n) {
    HStar      hs = h_star(n);
    ElementSet f  = f_star(n, hs);
    return TwObject{std::move(hs.algebra), f};
  }

  TwistAlgebra functor_E(TwObject const& p) {
    return twist_filtered(p.algebra, p.filter);
  }

  Morphism functor_F(ModalNelsonLattice const& a, ModalNelsonLattice const& b,
                     Morphism const& g) {
    LawReport r = check_nelson_hom(a, b, g);
    if (!r.holds) {
      throw InputError("not a homomorphism: " + to_string(r));
    }
    HStar const ha = h_star(a);
    HStar const hb = h_star(b);
    Morphism    out;
    for (Element e : ha.embedding) {
      std::size_t k = hb.index_of[g(e)];
      if (k == npos) {
        throw InternalInconsistency("homomorphism moves an idempotent to a "
                                    "non-idempotent");
      }
      out.map.push_back(static_cast<Element>(k));
    }
    return out;
  }

  Morphism functor_E(TwObject const& a, TwObject const& b, Morphism const& h) {
    LawReport r = check_tw_morphism(a.algebra, a.filter, b.algebra, b.filter, h);
    if (!r.holds) {
      throw InputError("not a TW-morphism: " + to_string(r));
    }
    TwistAlgebra const ta = functor_E(a);
    TwistAlgebra const tb = functor_E(b);
    Morphism           out;
    for (auto [x, y] : ta.pairs) {
      auto k = tb.index_of({h(x), h(y)});
      if (!k) {
        throw InternalInconsistency("E(h) leaves the target twist");
      }
      out.map.push_back(*k);
    }
    LawReport hr = check_nelson_hom(ta.algebra, tb.algebra, out);
    if (!hr.holds) {
      throw InternalInconsistency("E(h) is not a homomorphism: "
                                  + to_string(hr));
    }
    return out;
  }

  bool naturality_alpha(ModalNelsonLattice const& a,
                        ModalNelsonLattice const& b, Morphism const& g) {
    IsoH const     ia = iso_h(a);
    IsoH const     ib = iso_h(b);
    Morphism const fg = functor_F(a, b, g);
    Morphism const efg =
        functor_E(TwObject{ia.hstar.algebra, ia.fstar},
                  TwObject{ib.hstar.algebra, ib.fstar}, fg);
    return compose(ib.map, g) == compose(efg, ia.map);
  }

  bool naturality_beta(TwObject const& a, TwObject const& b,
                       Morphism const& h) {
    IsoBeta const  ba  = iso_beta(a.algebra, a.filter);
    IsoBeta const  bb  = iso_beta(b.algebra, b.filter);
    Morphism const eh  = functor_E(a, b, h);
    Morphism const feh = functor_F(ba.twist.algebra, bb.twist.algebra, eh);
    return compose(bb.map, h) == compose(feh, ba.map);
  }

  // -----------------------------------------------------------------------

  namespace {
    template <class L>
    Structure lattice_part(L const& l, std::size_t n) {
      Structure s;
      s.size = n;
      for (Element x = 0; x < n; ++x) {
        s.up.push_back(l.poset().up(x));
      }
      std::vector<Element> meet(n * n), join(n * n);
      for (Element x = 0; x < n; ++x) {
        for (Element y = 0; y < n; ++y) {
          meet[x * n + y] = l.meet(x, y);
          join[x * n + y] = l.join(x, y);
        }
      }
      s.binary    = {std::move(meet), std::move(join)};
      s.constants = {l.bot(), l.top()};
      return s;
    }
  }  // namespace

  Structure structure_of(ModalNelsonLattice const& n) {
    Structure s = lattice_part(n.lattice(), n.size());
    s.binary.push_back(n.fusion_table());
    s.binary.push_back(n.res_table());
    if (n.has_modal()) {
      s.unary = {n.bsq_table(), n.bdia_table()};
    }
    return s;
  }

  Structure structure_of(HeytingAlgebra const& h) {
    Structure   s = lattice_part(h.lattice(), h.size());
    std::size_t n = h.size();
    std::vector<Element> imp(n * n);
    for (Element x = 0; x < n; ++x) {
      for (Element y = 0; y < n; ++y) {
        imp[x * n + y] = h.imp(x, y);
      }
    }
    s.binary.push_back(std::move(imp));
    return s;
  }

  Structure structure_of(ModalHeytingAlgebra const& m) {
    Structure s = structure_of(m.heyting());
    s.unary     = {m.box_table(), m.diamond_table()};
    return s;
  }

  std::optional<Morphism> is_isomorphic(ModalNelsonLattice const& a,
                                        ModalNelsonLattice const& b,
                                        std::size_t               cap) {
    if (a.has_modal() != b.has_modal()) {
      throw InputError("cannot compare a modal and a non-modal lattice");
    }
    auto f = find_isomorphism(structure_of(a), structure_of(b), cap);
    if (!f) {
      return std::nullopt;
    }
    return Morphism{*f};
  }

  std::optional<Morphism> is_isomorphic(ModalHeytingAlgebra const& a,
                                        ModalHeytingAlgebra const& b,
                                        std::size_t                cap) {
    auto f = find_isomorphism(structure_of(a), structure_of(b), cap);
    if (!f) {
      return std::nullopt;
    }
    return Morphism{*f};
  }

  std::optional<Morphism> is_isomorphic(HeytingAlgebra const& a,
                                        HeytingAlgebra const& b,
                                        std::size_t           cap) {
    auto f = find_isomorphism(structure_of(a), structure_of(b), cap);
    if (!f) {
      return std::nullopt;
    }
    return Morphism{*f};
  }

  std::pair<bool, bool>
  check_surjectivity_centered(ModalNelsonLattice const& n) {
    IsoH const iso      = iso_h(n);
    bool const onto     = twist_full(iso.hstar.algebra.heyting()).pairs.size()
                      == n.size();
    bool const centered = check_mn_law(n, "centered").holds;
    if (onto != centered) {
      throw InternalInconsistency(
          "embedding into the full twist is onto exactly when centered, "
          "but the two disagree");
    }
    return {onto, centered};
  }

}  // namespace mnl
