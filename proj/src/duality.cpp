#include "mnl/duality.hpp"

#include <algorithm>

#include "mnl/error.hpp"
#include "mnl/structure.hpp"

namespace mnl {

  namespace {

    bool by_size(ElementSet a, ElementSet b) {
      return std::pair(a.size(), a) < std::pair(b.size(), b);
    }

    std::string set_name(FinitePoset const& p, ElementSet s) {
      std::string out = "{";
      bool        sep = false;
      for (Element x : s) {
        if (sep) {
          out += ",";
        }
        out += p.name(x);
        sep = true;
      }
      return out + "}";
    }

    ElementSet image(Morphism const& f, ElementSet s) {
      ElementSet out;
      for (Element x : s) {
        out.insert(f(x));
      }
      return out;
    }

    ElementSet preimage(Morphism const& f, ElementSet s) {
      ElementSet out;
      for (Element x = 0; x < f.map.size(); ++x) {
        if (s.contains(f(x))) {
          out.insert(x);
        }
      }
      return out;
    }

    bool has(std::vector<ElementSet> const& family, ElementSet s) {
      return std::binary_search(family.begin(), family.end(), s);
    }

    void normalize(std::vector<ElementSet>& family) {
      std::sort(family.begin(), family.end());
      family.erase(std::unique(family.begin(), family.end()), family.end());
    }

    std::optional<Element> find_set(std::vector<ElementSet> const& v,
                                    ElementSet                     s) {
      auto it = std::find(v.begin(), v.end(), s);
      if (it == v.end()) {
        return std::nullopt;
      }
      return static_cast<Element>(it - v.begin());
    }

  }  // namespace

  Spectrum prime_filters(HeytingAlgebra const& h) {
    std::vector<ElementSet> scanned;
    for (ElementSet f : all_filters(h)) {
      if (f.contains(h.bot())) {
        continue;
      }
      bool prime = true;
      for (Element a = 0; a < h.size() && prime; ++a) {
        for (Element b = 0; b < h.size() && prime; ++b) {
          if (f.contains(h.join(a, b)) && !f.contains(a) && !f.contains(b)) {
            prime = false;
          }
        }
      }
      if (prime) {
        scanned.push_back(f);
      }
    }
    std::vector<ElementSet> generated;
    for (Element j : join_irreducibles(h.lattice())) {
      generated.push_back(h.poset().up(j));
    }
    std::sort(scanned.begin(), scanned.end(), by_size);
    std::sort(generated.begin(), generated.end(), by_size);
    if (scanned != generated) {
      throw InternalInconsistency(
          "prime filters differ from the principal filters of "
          "join-irreducibles");
    }

    Spectrum s;
    s.filters = scanned;
    std::vector<std::string> names;
    for (ElementSet f : s.filters) {
      names.push_back("↑" + h.name(h.lattice().meet_of(f)));
    }
    s.points = FinitePoset::from_relation(std::move(names),
                                          [&](Element p, Element q) {
                                            return s.filters[p].subset_of(
                                                s.filters[q]);
                                          });
    return s;
  }

  std::vector<ElementSet> sigma(HeytingAlgebra const& h, Spectrum const& s) {
    std::vector<ElementSet> out(h.size());
    for (Element a = 0; a < h.size(); ++a) {
      for (Element p = 0; p < s.filters.size(); ++p) {
        if (s.filters[p].contains(a)) {
          out[a].insert(p);
        }
      }
    }
    return out;
  }

  std::vector<ElementSet> all_upsets(FinitePoset const& p) {
    // Points with larger up-sets come later, so everything strictly above a
    // point is decided before the point itself.
    std::vector<Element> order;
    for (Element x = 0; x < p.size(); ++x) {
      order.push_back(x);
    }
    std::stable_sort(order.begin(), order.end(), [&](Element x, Element y) {
      return p.up(x).size() < p.up(y).size();
    });
    std::vector<ElementSet> out;
    auto rec = [&](auto& self, std::size_t k, ElementSet cur) -> void {
      if (k == order.size()) {
        out.push_back(cur);
        return;
      }
      Element x = order[k];
      self(self, k + 1, cur);
      if ((p.up(x) - ElementSet::singleton(x)).subset_of(cur)) {
        cur.insert(x);
        self(self, k + 1, cur);
      }
    };
    rec(rec, 0, ElementSet());
    std::sort(out.begin(), out.end(), by_size);
    return out;
  }

  std::vector<ElementSet> all_downsets(FinitePoset const& p) {
    std::vector<ElementSet> out;
    for (ElementSet u : all_upsets(p)) {
      out.push_back(u.complement(p.size()));
    }
    std::sort(out.begin(), out.end(), by_size);
    return out;
  }

  std::optional<Element> UpsetAlgebra::index_of(ElementSet u) const {
    return find_set(upsets, u);
  }

  std::optional<Element> SpaceAlgebra::index_of(ElementSet u) const {
    return find_set(upsets, u);
  }

  UpsetAlgebra upset_algebra(FinitePoset const& p) {
    UpsetAlgebra out;
    out.upsets = all_upsets(p);
    std::vector<std::string> names;
    for (ElementSet u : out.upsets) {
      names.push_back(set_name(p, u));
    }
    auto const& us = out.upsets;
    out.algebra    = heyting_from_order(std::move(names),
                                        [&](Element a, Element b) {
                                       return us[a].subset_of(us[b]);
                                     });
    for (Element a = 0; a < us.size(); ++a) {
      for (Element b = 0; b < us.size(); ++b) {
        ElementSet expected;
        for (Element x = 0; x < p.size(); ++x) {
          if ((p.up(x) & us[a]).subset_of(us[b])) {
            expected.insert(x);
          }
        }
        if (us[out.algebra.imp(a, b)] != expected) {
          throw InternalInconsistency("up-set implication disagrees with "
                                      "{x : ↑x ∩ U ⊆ V}");
        }
      }
    }
    return out;
  }

  ElementSet box_from_eta(MESpace const& x, ElementSet u) {
    if (!x.points.is_upset(u)) {
      throw InputError("□_η needs an up-set");
    }
    ElementSet out;
    for (Element p = 0; p < x.points.size(); ++p) {
      if (has(x.eta_box[p], u)) {
        out.insert(p);
      }
    }
    return out;
  }

  ElementSet diamond_from_eta(MESpace const& x, ElementSet u) {
    if (!x.points.is_upset(u)) {
      throw InputError("◇_η needs an up-set");
    }
    ElementSet const rest = u.complement(x.points.size());
    ElementSet       out;
    for (Element p = 0; p < x.points.size(); ++p) {
      if (!has(x.eta_diamond[p], rest)) {
        out.insert(p);
      }
    }
    return out;
  }

  namespace {
    void require_shape(MESpace const& x) {
      std::size_t const n = x.points.size();
      if (x.eta_box.size() != n || x.eta_diamond.size() != n) {
        throw InputError("neighbourhood maps must have one family per point");
      }
      for (Element p = 0; p < n; ++p) {
        for (auto const* fam : {&x.eta_box[p], &x.eta_diamond[p]}) {
          if (!std::is_sorted(fam->begin(), fam->end())
              || std::adjacent_find(fam->begin(), fam->end()) != fam->end()) {
            throw InputError("neighbourhood family of '" + x.points.name(p)
                             + "' is not sorted and duplicate-free");
          }
          for (ElementSet s : *fam) {
            if (!s.subset_of(x.points.all())) {
              throw InputError("neighbourhood of '" + x.points.name(p)
                               + "' mentions unknown points");
            }
          }
        }
      }
    }
  }  // namespace

  LawReport check_me_space(MESpace const& x) {
    require_shape(x);
    auto const&       p = x.points;
    std::size_t const n = p.size();
    for (Element pt = 0; pt < n; ++pt) {
      for (ElementSet u : x.eta_box[pt]) {
        if (!p.is_upset(u)) {
          return LawReport::fail("me_space", {p.name(pt), set_name(p, u)},
                                 "(1) η₁ holds a set that is not an up-set");
        }
      }
      for (ElementSet d : x.eta_diamond[pt]) {
        if (!p.is_downset(d)) {
          return LawReport::fail("me_space", {p.name(pt), set_name(p, d)},
                                 "(1) η₂ holds a set that is not a down-set");
        }
      }
    }
    auto const ups = all_upsets(p);
    for (ElementSet u : ups) {
      if (!p.is_upset(box_from_eta(x, u))) {
        return LawReport::fail("me_space", {set_name(p, u)},
                               "(2) □_η(U) is not an up-set");
      }
      if (!p.is_upset(diamond_from_eta(x, u))) {
        return LawReport::fail("me_space", {set_name(p, u)},
                               "(2) ◇_η(U) is not an up-set");
      }
    }
    for (Element pt = 0; pt < n; ++pt) {
      for (ElementSet u : x.eta_box[pt]) {
        for (ElementSet v : ups) {
          ElementSet d = p.downset(u) | v.complement(n);
          if (!has(x.eta_diamond[pt], d)) {
            return LawReport::fail(
                "me_space", {p.name(pt), set_name(p, u), set_name(p, v)},
                "(3) ↓U ∪ (X∖V) is missing from η₂");
          }
        }
      }
    }
    return LawReport::pass("me_space");
  }

  LawReport check_f_star(MNESpace const& x) {
    auto const& p    = x.me.points;
    auto const  ups  = all_upsets(p);
    ElementSet  c    = x.closed;
    for (ElementSet u : ups) {
      for (ElementSet v : ups) {
        if ((u & v).empty() && c.subset_of(u | v)
            && !c.subset_of(box_from_eta(x.me, u)
                            | diamond_from_eta(x.me, v))) {
          return LawReport::fail("F_star", {set_name(p, u), set_name(p, v)});
        }
      }
    }
    return LawReport::pass("F_star");
  }

  LawReport check_mne_space(MNESpace const& x) {
    LawReport r = check_me_space(x.me);
    if (!r.holds) {
      r.law = "mne_space";
      return r;
    }
    auto const& p = x.me.points;
    if (!x.closed.subset_of(p.maximal(p.all()))) {
      return LawReport::fail(
          "mne_space",
          names_of(p, x.closed - p.maximal(p.all())),
          "C contains a point that is not maximal");
    }
    r = check_f_star(x);
    r.law = "mne_space";
    if (!r.holds) {
      r.detail = "(F*)";
    }
    return r;
  }

  MESpace dual_space(ModalHeytingAlgebra const& m) {
    LawReport r = check_mh(m);
    if (!r.holds) {
      throw InputError("dual space needs a modal Heyting algebra; "
                       + to_string(r));
    }
    auto const&    h   = m.heyting();
    Spectrum const s   = prime_filters(h);
    auto const     sig = sigma(h, s);
    std::size_t const n = s.filters.size();
    auto const downs    = all_downsets(s.points);

    MESpace x;
    x.points = s.points;
    x.eta_box.resize(n);
    x.eta_diamond.resize(n);
    for (Element p = 0; p < n; ++p) {
      std::vector<ElementSet> removed;
      for (Element a = 0; a < h.size(); ++a) {
        if (s.filters[p].contains(m.box(a))) {
          x.eta_box[p].push_back(sig[a]);
        }
        if (s.filters[p].contains(m.diamond(a))) {
          removed.push_back(sig[a].complement(n));
        }
      }
      normalize(x.eta_box[p]);
      normalize(removed);
      for (ElementSet d : downs) {
        if (!has(removed, d)) {
          x.eta_diamond[p].push_back(d);
        }
      }
      normalize(x.eta_diamond[p]);
    }

    r = check_me_space(x);
    if (!r.holds) {
      throw InternalInconsistency("dual space is not an ME-space: "
                                  + to_string(r));
    }
    for (Element a = 0; a < h.size(); ++a) {
      if (sig[m.box(a)] != box_from_eta(x, sig[a])
          || sig[m.diamond(a)] != diamond_from_eta(x, sig[a])) {
        throw InternalInconsistency("σ does not carry the modal operators at '"
                                    + h.name(a) + "'");
      }
    }
    return x;
  }

  SpaceAlgebra algebra_of_space(MESpace const& x) {
    LawReport r = check_me_space(x);
    if (!r.holds) {
      throw InputError("not an ME-space: " + to_string(r));
    }
    UpsetAlgebra ua = upset_algebra(x.points);
    std::vector<Element> box, diamond;
    for (ElementSet u : ua.upsets) {
      box.push_back(*ua.index_of(box_from_eta(x, u)));
      diamond.push_back(*ua.index_of(diamond_from_eta(x, u)));
    }
    SpaceAlgebra out{
        ModalHeytingAlgebra(std::move(ua.algebra), std::move(box),
                            std::move(diamond)),
        std::move(ua.upsets)};
    r = check_mh(out.algebra);
    if (!r.holds) {
      throw InternalInconsistency("algebra of an ME-space violates "
                                  + to_string(r));
    }
    return out;
  }

  Morphism sigma_isomorphism(ModalHeytingAlgebra const& m) {
    auto const&        h   = m.heyting();
    MESpace const      x   = dual_space(m);
    SpaceAlgebra const a   = algebra_of_space(x);
    auto const         sig = sigma(h, prime_filters(h));
    Morphism           f;
    for (Element e = 0; e < h.size(); ++e) {
      auto k = a.index_of(sig[e]);
      if (!k) {
        throw InternalInconsistency("σ(" + h.name(e) + ") is not an up-set");
      }
      f.map.push_back(*k);
    }
    if (!is_bijective(f, a.algebra.size())) {
      throw InternalInconsistency("σ is not a bijection");
    }
    LawReport r = check_modal_heyting_hom(m, a.algebra, f);
    if (!r.holds) {
      throw InternalInconsistency("σ is not a homomorphism: " + to_string(r));
    }
    return f;
  }

  Morphism epsilon(MESpace const& x) {
    SpaceAlgebra const a = algebra_of_space(x);
    auto const&        h = a.algebra.heyting();
    Spectrum const     s = prime_filters(h);
    MESpace const      y = dual_space(a.algebra);
    std::size_t const  n = x.points.size();

    Morphism e;
    for (Element pt = 0; pt < n; ++pt) {
      ElementSet filter;
      for (Element k = 0; k < a.upsets.size(); ++k) {
        if (a.upsets[k].contains(pt)) {
          filter.insert(k);
        }
      }
      auto q = find_set(s.filters, filter);
      if (!q) {
        throw InternalInconsistency("ε(" + x.points.name(pt)
                                    + ") is not a prime filter");
      }
      e.map.push_back(*q);
    }
    if (!is_bijective(e, y.points.size())) {
      throw InternalInconsistency("ε is not a bijection");
    }
    for (Element p = 0; p < n; ++p) {
      for (Element q = 0; q < n; ++q) {
        if (x.points.leq(p, q) != y.points.leq(e(p), e(q))) {
          throw InternalInconsistency("ε is not an order isomorphism");
        }
      }
      std::vector<ElementSet> box, diamond;
      for (ElementSet u : x.eta_box[p]) {
        box.push_back(image(e, u));
      }
      for (ElementSet d : x.eta_diamond[p]) {
        diamond.push_back(image(e, d));
      }
      normalize(box);
      normalize(diamond);
      if (box != y.eta_box[e(p)] || diamond != y.eta_diamond[e(p)]) {
        throw InternalInconsistency("ε does not transport the neighbourhoods "
                                    "of '" + x.points.name(p) + "'");
      }
    }
    return e;
  }

  ElementSet closed_of_filter(Spectrum const& s, ElementSet f) {
    ElementSet c;
    for (Element p = 0; p < s.filters.size(); ++p) {
      if (f.subset_of(s.filters[p])) {
        c.insert(p);
      }
    }
    return c;
  }

  MNESpace mne_from_pair(ModalHeytingAlgebra const& m, ElementSet f) {
    auto const& h = m.heyting();
    if (!is_filter(h, f) || !is_boolean_filter(h, f)) {
      throw InputError("MNE-space needs a Boolean filter");
    }
    LawReport r = check_filter_condition_F(m, f);
    if (!r.holds) {
      throw InputError("filter violates condition (F); " + to_string(r));
    }
    MNESpace x{dual_space(m), closed_of_filter(prime_filters(h), f)};
    r = check_mne_space(x);
    if (!r.holds) {
      throw InternalInconsistency("dual of a TW pair is not an MNE-space: "
                                  + to_string(r));
    }
    return x;
  }

  ElementSet filter_of_closed(MNESpace const& x) {
    LawReport r = check_mne_space(x);
    if (!r.holds) {
      throw InputError("not an MNE-space: " + to_string(r));
    }
    SpaceAlgebra const a = algebra_of_space(x.me);
    ElementSet         f;
    for (Element k = 0; k < a.upsets.size(); ++k) {
      if (x.closed.subset_of(a.upsets[k])) {
        f.insert(k);
      }
    }
    auto const& h = a.algebra.heyting();
    if (!is_filter(h, f) || !is_boolean_filter(h, f)) {
      throw InternalInconsistency("F_C is not a Boolean filter");
    }
    r = check_filter_condition_F(a.algebra, f);
    if (!r.holds) {
      throw InternalInconsistency("F_C violates condition (F): "
                                  + to_string(r));
    }
    return f;
  }

  LawReport check_esakia_function(FinitePoset const& a, FinitePoset const& b,
                                  Morphism const& f) {
    if (f.map.size() != a.size()) {
      throw InputError("point map is not total");
    }
    for (Element y : f.map) {
      if (y >= b.size()) {
        throw InputError("point map leaves its target");
      }
    }
    for (Element x = 0; x < a.size(); ++x) {
      for (Element y : a.up(x)) {
        if (!b.leq(f(x), f(y))) {
          return LawReport::fail("esakia_function", {a.name(x), a.name(y)},
                                 "not order-preserving");
        }
      }
      if (!b.up(f(x)).subset_of(image(f, a.up(x)))) {
        return LawReport::fail("esakia_function", {a.name(x)},
                               "↑f(x) ⊄ f[↑x]");
      }
    }
    return LawReport::pass("esakia_function");
  }

  LawReport check_me_morphism(MESpace const& a, MESpace const& b,
                              Morphism const& f) {
    LawReport r = check_esakia_function(a.points, b.points, f);
    r.law       = "me_morphism";
    if (!r.holds) {
      return r;
    }
    std::size_t const na = a.points.size(), nb = b.points.size();
    for (ElementSet u : all_upsets(b.points)) {
      ElementSet const pre = preimage(f, u);
      for (Element x = 0; x < na; ++x) {
        if (has(b.eta_box[f(x)], u) != has(a.eta_box[x], pre)) {
          return LawReport::fail("me_morphism",
                                 {a.points.name(x), set_name(b.points, u)},
                                 "η₁ is not reflected");
        }
        if (has(b.eta_diamond[f(x)], u.complement(nb))
            != has(a.eta_diamond[x], pre.complement(na))) {
          return LawReport::fail("me_morphism",
                                 {a.points.name(x), set_name(b.points, u)},
                                 "η₂ is not reflected");
        }
      }
    }
    return r;
  }

  LawReport check_mne_morphism(MNESpace const& a, MNESpace const& b,
                               Morphism const& f) {
    LawReport r = check_me_morphism(a.me, b.me, f);
    r.law       = "mne_morphism";
    if (r.holds && !image(f, a.closed).subset_of(b.closed)) {
      return LawReport::fail("mne_morphism",
                             names_of(a.me.points, a.closed),
                             "f[C₁] ⊄ C₂");
    }
    return r;
  }

  Morphism dualize_hom(ModalHeytingAlgebra const& a,
                       ModalHeytingAlgebra const& b, Morphism const& h) {
    LawReport r = check_modal_heyting_hom(a, b, h);
    if (!r.holds) {
      throw InputError("not a modal Heyting homomorphism: " + to_string(r));
    }
    Spectrum const sa = prime_filters(a.heyting());
    Spectrum const sb = prime_filters(b.heyting());
    Morphism       f;
    for (ElementSet p : sb.filters) {
      auto q = find_set(sa.filters, preimage(h, p));
      if (!q) {
        throw InternalInconsistency("h⁻¹[P] is not a prime filter");
      }
      f.map.push_back(*q);
    }
    r = check_me_morphism(dual_space(b), dual_space(a), f);
    if (!r.holds) {
      throw InternalInconsistency("X(h) is not an ME-morphism: "
                                  + to_string(r));
    }
    return f;
  }

  Morphism hom_of_map(MESpace const& a, MESpace const& b, Morphism const& f) {
    LawReport r = check_me_morphism(a, b, f);
    if (!r.holds) {
      throw InputError("not an ME-morphism: " + to_string(r));
    }
    SpaceAlgebra const ua = algebra_of_space(a);
    SpaceAlgebra const ub = algebra_of_space(b);
    Morphism           h;
    for (ElementSet u : ub.upsets) {
      h.map.push_back(*ua.index_of(preimage(f, u)));
    }
    r = check_modal_heyting_hom(ub.algebra, ua.algebra, h);
    if (!r.holds) {
      throw InternalInconsistency("h(f) is not a homomorphism: "
                                  + to_string(r));
    }
    return h;
  }

  bool sigma_naturality(ModalHeytingAlgebra const& a,
                        ModalHeytingAlgebra const& b, Morphism const& h) {
    Morphism const sa = sigma_isomorphism(a);
    Morphism const sb = sigma_isomorphism(b);
    Morphism const jh = dualize_hom(a, b, h);
    Morphism const gj = hom_of_map(dual_space(b), dual_space(a), jh);
    return compose(sb, h) == compose(gj, sa);
  }

  bool epsilon_naturality(MESpace const& a, MESpace const& b,
                          Morphism const& f) {
    Morphism const ea = epsilon(a);
    Morphism const eb = epsilon(b);
    Morphism const gf = hom_of_map(a, b, f);
    Morphism const jg = dualize_hom(algebra_of_space(b).algebra,
                                    algebra_of_space(a).algebra, gf);
    return compose(eb, f) == compose(jg, ea);
  }

  namespace {
    Structure space_structure(MESpace const& x, ElementSet closed) {
      Structure s;
      s.size = x.points.size();
      for (Element p = 0; p < s.size; ++p) {
        s.up.push_back(x.points.up(p));
        s.label.push_back((x.eta_box[p].size() << 24)
                          | (x.eta_diamond[p].size() << 1)
                          | (closed.contains(p) ? 1U : 0U));
      }
      return s;
    }

    std::optional<Morphism> space_iso(MESpace const& a, ElementSet ca,
                                      MESpace const& b, ElementSet cb,
                                      std::size_t cap) {
      require_shape(a);
      require_shape(b);
      auto leaf = [&](std::vector<Element> const& map) {
        Morphism f{map};
        if (image(f, ca) != cb) {
          return false;
        }
        for (Element p = 0; p < a.points.size(); ++p) {
          for (auto [fa, fb] :
               {std::pair{&a.eta_box[p], &b.eta_box[f(p)]},
                std::pair{&a.eta_diamond[p], &b.eta_diamond[f(p)]}}) {
            std::vector<ElementSet> mapped;
            for (ElementSet s : *fa) {
              mapped.push_back(image(f, s));
            }
            normalize(mapped);
            if (mapped != *fb) {
              return false;
            }
          }
        }
        return true;
      };
      auto f = find_isomorphism(space_structure(a, ca), space_structure(b, cb),
                                cap, leaf);
      if (!f) {
        return std::nullopt;
      }
      return Morphism{*f};
    }
  }  // namespace

  std::optional<Morphism> is_isomorphic(MESpace const& a, MESpace const& b,
                                        std::size_t cap) {
    return space_iso(a, ElementSet(), b, ElementSet(), cap);
  }

  std::optional<Morphism> is_isomorphic(MNESpace const& a, MNESpace const& b,
                                        std::size_t cap) {
    return space_iso(a.me, a.closed, b.me, b.closed, cap);
  }

}  // namespace mnl
