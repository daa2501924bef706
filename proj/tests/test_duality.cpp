#include <doctest.h>

#include <random>

#include "mnl/duality.hpp"
#include "mnl/error.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace mnl;
using support::at;
using support::set_of;

namespace {
  using Names = std::vector<std::string>;

  Names point_names(FinitePoset const& p, ElementSet s) {
    return names_of(p, s);
  }

  // Prime filters by brute force: proper filters F with a∨b ∈ F ⇒ a ∈ F or
  // b ∈ F.
  std::vector<std::uint64_t> prime_oracle(HeytingAlgebra const& h) {
    oracle::Tables const       t = oracle::tables_of(h);
    std::vector<std::uint64_t> out;
    for (std::uint64_t f : oracle::filters(t)) {
      if ((f >> t.bot) & 1U) continue;
      bool prime = true;
      for (Element a = 0; a < t.n && prime; ++a) {
        for (Element b = 0; b < t.n && prime; ++b) {
          if (((f >> t.join[a][b]) & 1U) && !((f >> a) & 1U)
              && !((f >> b) & 1U)) {
            prime = false;
          }
        }
      }
      if (prime) out.push_back(f);
    }
    return out;
  }

  // Pointwise: order-preserving and ↑f(x) ⊆ f[↑x].
  bool esakia_oracle(FinitePoset const& a, FinitePoset const& b,
                     Morphism const& f) {
    for (Element x = 0; x < a.size(); ++x) {
      ElementSet image;
      for (Element y = 0; y < a.size(); ++y) {
        if (a.leq(x, y)) {
          if (!b.leq(f(x), f(y))) return false;
          image.insert(f(y));
        }
      }
      for (Element z = 0; z < b.size(); ++z) {
        if (b.leq(f(x), z) && !image.contains(z)) return false;
      }
    }
    return true;
  }

  struct Pair {
    ModalHeytingAlgebra m;
    ElementSet          f;
  };

  // Every sweep instance with every Boolean filter, (F) or not.
  std::vector<Pair> const& all_pairs() {
    static std::vector<Pair> const out = [] {
      std::vector<Pair> v;
      for (auto const& m : support::catalog_modal()) {
        for (ElementSet f : boolean_filters(m.heyting())) v.push_back({m, f});
      }
      return v;
    }();
    return out;
  }

  MESpace one_point(std::vector<ElementSet> eta1, std::vector<ElementSet> eta2) {
    MESpace x;
    x.points      = poset_from_covers({"pt"}, {});
    x.eta_box     = {std::move(eta1)};
    x.eta_diamond = {std::move(eta2)};
    return x;
  }
}  // namespace

TEST_CASE("prime filter examples") {
  HeytingAlgebra c3 = chain3();
  Spectrum       s  = prime_filters(c3);
  CHECK(s.points.names() == Names{"↑⊤", "↑m"});
  CHECK(s.points.leq(at(s.points, "↑⊤"), at(s.points, "↑m")));

  CHECK(prime_filters(boolean_power(1)).points.names() == Names{"↑1"});

  HeytingAlgebra f  = figure_one().heyting();
  Spectrum       fs = prime_filters(f);
  CHECK(fs.points.size() == 3);
  Element b = at(fs.points, "↑b");
  CHECK(fs.points.leq(at(fs.points, "↑a"), b));
  CHECK(fs.points.leq(at(fs.points, "↑c"), b));
  CHECK_FALSE(fs.points.leq(at(fs.points, "↑a"), at(fs.points, "↑c")));
}

TEST_CASE("prime filters agree with the brute oracle") {
  for (auto const& h : support::catalog_heyting()) {
    std::vector<std::uint64_t> got;
    for (ElementSet p : prime_filters(h).filters) got.push_back(p.bits());
    std::sort(got.begin(), got.end());
    CHECK(got == prime_oracle(h));
  }
}

TEST_CASE("σ examples") {
  HeytingAlgebra c3 = chain3();
  Spectrum       s  = prime_filters(c3);
  auto           sg = sigma(c3, s);
  CHECK(point_names(s.points, sg[at(c3, "m")]) == Names{"↑m"});
  CHECK(sg[c3.top()] == s.points.all());
  CHECK(sg[c3.bot()].empty());

  HeytingAlgebra f  = figure_one().heyting();
  Spectrum       fs = prime_filters(f);
  CHECK(point_names(fs.points, sigma(f, fs)[at(f, "a")]) == Names{"↑a", "↑b"});
}

TEST_CASE("up-set algebras implement {x : ↑x ∩ U ⊆ V}") {
  for (auto const& h : support::catalog_heyting()) {
    FinitePoset const  p = prime_filters(h).points;
    UpsetAlgebra const u = upset_algebra(p);
    CHECK(u.upsets.size() == h.size());
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << p.size()); ++bits) {
      CHECK(p.is_upset(ElementSet(bits)) == u.index_of(ElementSet(bits)).has_value());
    }
    for (Element a = 0; a < u.algebra.size(); ++a) {
      for (Element b = 0; b < u.algebra.size(); ++b) {
        ElementSet ref;
        for (Element x = 0; x < p.size(); ++x) {
          if ((p.up(x) & u.upsets[a]).subset_of(u.upsets[b])) ref.insert(x);
        }
        CHECK(u.upsets[u.algebra.imp(a, b)] == ref);
      }
    }
  }
}

TEST_CASE("dual space examples") {
  MESpace b = dual_space(with_identity_modalities(boolean_power(1)));
  CHECK(b.points.size() == 1);
  CHECK(b.eta_box == std::vector<std::vector<ElementSet>>{{ElementSet(1)}});
  CHECK(b.eta_diamond == std::vector<std::vector<ElementSet>>{{ElementSet(1)}});

  MESpace f = dual_space(figure_one());
  CHECK(f.points.size() == 3);
  CHECK(check_me_space(f).holds);

  HeytingAlgebra      c3 = chain3();
  ModalHeytingAlgebra k(c3, std::vector<Element>(3, c3.top()),
                        std::vector<Element>(3, c3.bot()));
  MESpace             kx = dual_space(k);
  auto const          ups = all_upsets(kx.points);
  auto const          downs = all_downsets(kx.points);
  for (Element p = 0; p < kx.points.size(); ++p) {
    CHECK(kx.eta_box[p] == ups);
    auto d = kx.eta_diamond[p];
    auto e = downs;
    std::sort(d.begin(), d.end());
    std::sort(e.begin(), e.end());
    CHECK(d == e);
  }
  CHECK(box_from_eta(kx, kx.points.all()) == kx.points.all());

  HeytingAlgebra two = boolean_power(1);
  CHECK_THROWS_AS(dual_space(ModalHeytingAlgebra(two, {0, 1}, {1, 1})),
                  InputError);
}

TEST_CASE("σ carries □ and ◇ to the neighbourhood operators") {
  for (auto const& m : support::catalog_modal()) {
    auto const&    h  = m.heyting();
    Spectrum const s  = prime_filters(h);
    auto const     sg = sigma(h, s);
    MESpace const  x  = dual_space(m);
    for (Element a = 0; a < h.size(); ++a) {
      CHECK(sg[m.box(a)] == box_from_eta(x, sg[a]));
      CHECK(sg[m.diamond(a)] == diamond_from_eta(x, sg[a]));
    }
  }
  ModalHeytingAlgebra f  = figure_one();
  Spectrum const      s  = prime_filters(f.heyting());
  auto const          sg = sigma(f.heyting(), s);
  Element             b  = at(f.heyting(), "b");
  CHECK(diamond_from_eta(dual_space(f), sg[b]) == sg[f.diamond(b)]);
  CHECK_THROWS_AS(box_from_eta(dual_space(f), ElementSet::singleton(1)),
                  InputError);
}

TEST_CASE("algebra of a space examples") {
  // η₂ = {∅} would break condition (3) at V = ∅.
  MESpace bad = one_point({ElementSet(1)}, {ElementSet()});
  LawReport r = check_me_space(bad);
  CHECK_FALSE(r.holds);
  CHECK(r.detail.rfind("(3)", 0) == 0);
  CHECK_THROWS_AS(algebra_of_space(bad), InputError);

  SpaceAlgebra one = algebra_of_space(one_point({ElementSet(1)}, {ElementSet(1)}));
  CHECK(one.algebra.size() == 2);
  CHECK(one.algebra.box(one.algebra.heyting().top()) == one.algebra.heyting().top());
  CHECK(one.algebra.box_table() == std::vector<Element>{0, 1});
  CHECK(one.algebra.diamond_table() == std::vector<Element>{0, 1});

  MESpace empty = dual_space(figure_one());
  for (auto& e : empty.eta_box) e.clear();
  for (auto& e : empty.eta_diamond) e = all_downsets(empty.points);
  REQUIRE(check_me_space(empty).holds);
  SpaceAlgebra z = algebra_of_space(empty);
  CHECK(check_mh(z.algebra).holds);
  for (Element a = 0; a < z.algebra.size(); ++a) {
    CHECK(z.algebra.box(a) == z.algebra.heyting().bot());
    CHECK(z.algebra.diamond(a) == z.algebra.heyting().bot());
  }

  SpaceAlgebra fig = algebra_of_space(dual_space(figure_one()));
  CHECK(is_isomorphic(fig.algebra, figure_one()).has_value());
}

TEST_CASE("σ and ε round trips over the catalog") {
  for (auto const& m : support::catalog_modal()) {
    Morphism s = sigma_isomorphism(m);
    CHECK(is_bijective(s, m.size()));
    MESpace const x = dual_space(m);
    Morphism      e = epsilon(x);
    CHECK(is_bijective(e, x.points.size()));
    CHECK(is_isomorphic(dual_space(algebra_of_space(x).algebra), x).has_value());
  }
}

TEST_CASE("ε examples") {
  MESpace one = one_point({ElementSet(1)}, {ElementSet(1)});
  CHECK(epsilon(one) == identity_morphism(1));
  CHECK(is_bijective(epsilon(dual_space(with_identity_modalities(chain3()))), 2));
  MESpace f = dual_space(figure_one());
  CHECK(is_bijective(epsilon(f), 3));
}

TEST_CASE("ε on random ME-spaces over small posets") {
  std::mt19937 rng(20261015);
  std::size_t  spaces = 0;
  for (auto const& h : support::catalog_heyting()) {
    FinitePoset const p = prime_filters(h).points;
    if (p.size() == 0 || p.size() > 3) continue;
    auto const ups   = all_upsets(p);
    auto const downs = all_downsets(p);
    for (int trial = 0; trial < 200; ++trial) {
      MESpace x;
      x.points = p;
      x.eta_box.resize(p.size());
      x.eta_diamond.resize(p.size());
      for (Element q = 0; q < p.size(); ++q) {
        for (ElementSet u : ups) {
          if (rng() % 3 == 0) x.eta_box[q].push_back(u);
        }
        for (ElementSet d : downs) {
          if (rng() % 3 != 0) x.eta_diamond[q].push_back(d);
        }
      }
      for (Element q = 0; q < p.size(); ++q) {
        std::sort(x.eta_box[q].begin(), x.eta_box[q].end());
        std::sort(x.eta_diamond[q].begin(), x.eta_diamond[q].end());
      }
      if (!check_me_space(x).holds) continue;
      ++spaces;
      SpaceAlgebra const a = algebra_of_space(x);
      CHECK(check_mh(a.algebra).holds);
      CHECK(is_bijective(epsilon(x), p.size()));
      CHECK(is_isomorphic(dual_space(a.algebra), x).has_value());
    }
  }
  CHECK(spaces > 20);
}

TEST_CASE("MNE spaces from pairs: examples") {
  HeytingAlgebra      c3 = chain3();
  ModalHeytingAlgebra m  = with_identity_modalities(c3);
  MNESpace            x  = mne_from_pair(m, dense_elements(c3));
  CHECK(point_names(x.me.points, x.closed) == Names{"↑m"});
  CHECK(x.closed == max_elements(x.me.points));
  CHECK(mne_from_pair(m, c3.all()).closed.empty());

  ModalHeytingAlgebra f  = figure_one();
  MNESpace            fx = mne_from_pair(f, dense_elements(f.heyting()));
  CHECK(point_names(fx.me.points, fx.closed) == Names{"↑b"});
  CHECK(fx.closed == max_elements(fx.me.points));

  std::vector<Element> zero(3, 0);
  CHECK_THROWS_AS(mne_from_pair(ModalHeytingAlgebra(c3, zero, zero),
                                dense_elements(c3)),
                  InputError);
  CHECK_THROWS_AS(mne_from_pair(m, set_of(c3, {"⊤"})), InputError);
}

TEST_CASE("F_C examples") {
  HeytingAlgebra      c3 = chain3();
  ModalHeytingAlgebra m  = with_identity_modalities(c3);
  MNESpace            whole = mne_from_pair(m, c3.all());
  CHECK(filter_of_closed(whole) == algebra_of_space(whole.me).algebra.heyting().all());

  MNESpace   x  = mne_from_pair(m, dense_elements(c3));
  ElementSet fc = filter_of_closed(x);
  Morphism   s  = sigma_isomorphism(m);
  ElementSet image;
  for (Element a : dense_elements(c3)) image.insert(s(a));
  CHECK(fc == image);

  ModalHeytingAlgebra f  = figure_one();
  MNESpace            fx = mne_from_pair(f, dense_elements(f.heyting()));
  CHECK(filter_of_closed(fx).size() == 4);
}

TEST_CASE("(F) ⇔ (F*), σ[F] = F_C(F) and ε[C] = C(F_C) over the catalog") {
  for (auto const& [m, f] : all_pairs()) {
    Spectrum const s = prime_filters(m.heyting());
    MNESpace       x{dual_space(m), closed_of_filter(s, f)};
    bool const     cond = check_filter_condition_F(m, f).holds;
    CHECK(cond == check_f_star(x).holds);
    CHECK(x.closed.subset_of(max_elements(x.me.points)));
    if (!cond) continue;

    REQUIRE(mne_from_pair(m, f) == x);
    Morphism   sg = sigma_isomorphism(m);
    ElementSet image;
    for (Element a : f) image.insert(sg(a));
    ElementSet const fc = filter_of_closed(x);
    CHECK(image == fc);

    Morphism const     e  = epsilon(x.me);
    SpaceAlgebra const ua = algebra_of_space(x.me);
    Spectrum const     us = prime_filters(ua.algebra.heyting());
    ElementSet         ec;
    for (Element p : x.closed) ec.insert(e(p));
    CHECK(ec == closed_of_filter(us, fc));
  }
}

TEST_CASE("dualizing the quotient of the 3-chain onto 2") {
  HeytingAlgebra c3 = chain3();
  Quotient       q  = quotient_by_filter(c3, dense_elements(c3));
  REQUIRE(q.algebra.size() == 2);
  ModalHeytingAlgebra a = with_identity_modalities(c3);
  ModalHeytingAlgebra b = with_identity_modalities(q.algebra);
  Morphism            h{q.projection};
  Morphism            f = dualize_hom(a, b, h);
  MESpace const       xa = dual_space(a), xb = dual_space(b);
  REQUIRE(f.map.size() == 1);
  CHECK(xa.points.name(f(0)) == "↑m");
  CHECK(max_elements(xa.points) == ElementSet::singleton(f(0)));
  CHECK(check_me_morphism(xb, xa, f).holds);
  CHECK(sigma_naturality(a, b, h));
  CHECK(epsilon_naturality(xb, xa, f));

  CHECK(dualize_hom(a, a, identity_morphism(3)) == identity_morphism(2));
  CHECK_THROWS_AS(dualize_hom(a, b, Morphism{{0, 0, 1}}), InputError);
}

TEST_CASE("morphism duality over homomorphisms found between catalog instances") {
  auto const& ms      = support::catalog_modal();
  std::size_t checked = 0;
  for (std::size_t i = 0; i < ms.size(); i += 5) {
    for (std::size_t j = 0; j < ms.size(); j += 3) {
      auto const& a = ms[i];
      auto const& b = ms[j];
      if (a.size() > 6 || b.size() > 6) continue;
      for (auto const& map : find_homomorphisms(structure_of(a), structure_of(b), 3)) {
        Morphism h{map};
        REQUIRE(check_modal_heyting_hom(a, b, h).holds);
        MESpace const xa = dual_space(a), xb = dual_space(b);
        Morphism      f  = dualize_hom(a, b, h);
        CHECK(esakia_oracle(xb.points, xa.points, f));
        CHECK(check_esakia_function(xb.points, xa.points, f).holds);
        CHECK(sigma_naturality(a, b, h));
        CHECK(epsilon_naturality(xb, xa, f));
        ++checked;
      }
    }
  }
  CHECK(checked > 10);
}

TEST_CASE("MNE morphisms keep C inside C") {
  HeytingAlgebra      c3 = chain3();
  ModalHeytingAlgebra m  = with_identity_modalities(c3);
  MNESpace            dense = mne_from_pair(m, dense_elements(c3));
  MNESpace            full  = mne_from_pair(m, c3.all());
  Morphism            id    = identity_morphism(2);
  CHECK(check_mne_morphism(full, dense, id).holds);
  CHECK_FALSE(check_mne_morphism(dense, full, id).holds);
}

TEST_CASE("space isomorphism respects C") {
  HeytingAlgebra      c3 = chain3();
  ModalHeytingAlgebra m  = with_identity_modalities(c3);
  CHECK(is_isomorphic(mne_from_pair(m, c3.all()), mne_from_pair(m, c3.all()))
            .has_value());
  CHECK_FALSE(is_isomorphic(mne_from_pair(m, c3.all()),
                            mne_from_pair(m, dense_elements(c3)))
                  .has_value());
}

TEST_CASE("the one-element algebra has the empty space") {
  ModalHeytingAlgebra one = with_identity_modalities(boolean_power(0));
  MESpace             x   = dual_space(one);
  CHECK(x.points.size() == 0);
  CHECK(check_me_space(x).holds);
  CHECK(algebra_of_space(x).algebra.size() == 1);
  CHECK(sigma_isomorphism(one) == identity_morphism(1));
  CHECK(epsilon(x).map.empty());
}
