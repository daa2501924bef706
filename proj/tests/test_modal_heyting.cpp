#include <doctest.h>

#include "mnl/error.hpp"
#include "mnl/modal_heyting.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace mnl;
using support::at;
using support::set_of;

namespace {
  using Names = std::vector<std::string>;

  std::vector<Element> constant(HeytingAlgebra const& h, Element c) {
    return std::vector<Element>(h.size(), c);
  }

  // Small catalog members, where all nⁿ × nⁿ tables can be scanned.
  std::vector<HeytingAlgebra> small_algebras(std::size_t max_n) {
    std::vector<HeytingAlgebra> out;
    for (auto const& h : support::catalog_heyting()) {
      if (h.size() <= max_n) {
        out.push_back(h);
      }
    }
    return out;
  }
}  // namespace

TEST_CASE("(mH) and (mH') on the Figure-1 algebra") {
  ModalHeytingAlgebra m = figure_one();
  CHECK(check_mh(m).holds);
  CHECK(check_mh_quasi(m).holds);
  CHECK(m.box(m.heyting().bot()) == m.heyting().bot());
  CHECK(m.diamond(m.heyting().bot()) == m.heyting().bot());
}

TEST_CASE("constant □ = ⊤, ◇ = ⊥ satisfies (mH) and (mH')") {
  for (auto const& h : support::catalog_heyting()) {
    ModalHeytingAlgebra m(h, constant(h, h.top()), constant(h, h.bot()));
    CHECK(check_mh(m).holds);
    CHECK(check_mh_quasi(m).holds);
  }
}

TEST_CASE("Boolean 2 with □ = id and ◇ constant ⊤ fails at (⊤, ⊥)") {
  HeytingAlgebra      h = boolean_power(1);
  ModalHeytingAlgebra m(h, {0, 1}, {1, 1});
  LawReport           r = check_mh(m);
  CHECK_FALSE(r.holds);
  CHECK(r.witness == Names{"1", "0"});
  LawReport q = check_mh_quasi(m);
  CHECK_FALSE(q.holds);
  CHECK(q.witness == Names{"1", "0"});
}

TEST_CASE("law registry examples") {
  ModalHeytingAlgebra b2 = with_identity_modalities(boolean_power(1));
  for (auto const& law : modal_heyting_law_names()) {
    if (law == "F_condition") {
      CHECK(check_law(b2, law, b2.heyting().all()).holds);
    } else {
      CHECK_MESSAGE(check_law(b2, law).holds, law);
    }
  }

  ModalHeytingAlgebra f = figure_one();
  LawReport           r = check_law(f, "mH1");
  CHECK_FALSE(r.holds);
  CHECK(r.witness == Names{"⊤"});

  CHECK(check_law(with_identity_modalities(chain3()), "crisp_box").holds);
  CHECK_THROWS_AS(check_law(b2, "nonsense"), InputError);
  CHECK_THROWS_AS(check_law(b2, "F_condition"), InputError);
}

TEST_CASE("condition (F) examples") {
  for (auto const& m : support::catalog_modal()) {
    CHECK(check_filter_condition_F(m, m.heyting().all()).holds);
  }
  HeytingAlgebra b2 = boolean_power(1);
  CHECK(check_filter_condition_F(with_identity_modalities(b2),
                                 set_of(b2, {"1"}))
            .holds);

  HeytingAlgebra      c3 = chain3();
  ModalHeytingAlgebra zero(c3, constant(c3, c3.bot()), constant(c3, c3.bot()));
  LawReport r = check_filter_condition_F(zero, set_of(c3, {"m", "⊤"}));
  CHECK_FALSE(r.holds);
  // □a ∨ ◇b = ⊥ for every pair, so each witness must be a disjoint pair
  // whose join is in F.
  REQUIRE(r.witness.size() == 2);
  Element a = at(c3, r.witness[0]), b = at(c3, r.witness[1]);
  CHECK(c3.meet(a, b) == c3.bot());
  CHECK(set_of(c3, {"m", "⊤"}).contains(c3.join(a, b)));

  CHECK_THROWS_AS(check_filter_condition_F(zero, set_of(c3, {"⊤"})),
                  InputError);
}

TEST_CASE("enumeration on Boolean 2, the singleton and the 3-chain") {
  HeytingAlgebra b2 = boolean_power(1);
  auto           pairs = enumerate_modal_pairs(b2, {"mH"});
  // Direct count: □⊥∧◇⊥ = □⊥∧◇⊤ = □⊤∧◇⊥ = ⊥ leaves 2 + 2 + 4 pairs.
  CHECK(pairs.size() == 8);
  auto [eq, quasi] = oracle::count_mh_two_pass(b2);
  CHECK(eq == 8);
  CHECK(quasi == 8);

  CHECK(enumerate_modal_pairs(boolean_power(0), {"mH"}).size() == 1);

  HeytingAlgebra c3 = chain3();
  auto           normal = enumerate_modal_pairs(c3, {"mH", "mH1"});
  CHECK_FALSE(normal.empty());
  for (auto const& p : normal) {
    CHECK(p.box[c3.top()] == c3.top());
  }
}

TEST_CASE("enumeration equals the brute-force filter of all tables") {
  for (auto const& h : small_algebras(4)) {
    oracle::Tables const t = oracle::tables_of(h);
    for (Names laws : {Names{"mH"}, Names{"mH", "mH1"}, Names{"mH2", "N1"},
                       Names{"crisp_box", "crisp_diamond"}, Names{"stone"},
                       Names{"mH3", "N2"}}) {
      std::vector<ModalPair> ref;
      oracle::for_each_pair(h.size(), [&](auto const& box, auto const& dia) {
        if (!oracle::mh_holds(t, box, dia)) {
          return;
        }
        ModalHeytingAlgebra m(h, box, dia);
        for (auto const& law : laws) {
          if (law != "mH" && !check_law(m, law).holds) {
            return;
          }
        }
        ref.push_back({box, dia});
      });
      auto got = enumerate_modal_pairs(h, laws);
      CHECK(got == ref);
    }
  }
}

TEST_CASE("count and rank decoding agree with the enumeration") {
  for (auto const& h : small_algebras(5)) {
    auto all = enumerate_modal_pairs(h, {"mH"});
    REQUIRE(count_mh_pairs(h) == all.size());
    for (std::size_t r = 0; r < all.size(); r += 1 + all.size() / 97) {
      CHECK(mh_pair_at(h, r) == all[r]);
    }
    CHECK_THROWS_AS(mh_pair_at(h, all.size()), InputError);
  }
  CHECK_THROWS_AS(count_mh_pairs(boolean_power(3)), LimitExceeded);
}

TEST_CASE("enumeration budgets") {
  HeytingAlgebra    c3 = chain3();
  EnumerationBudget b;
  b.max_results = 5;
  std::vector<ModalPair> seen;
  auto stats = enumerate_modal_pairs(c3, {"mH"}, b, [&](ModalPair const& p) {
    seen.push_back(p);
    return true;
  });
  CHECK(stats.yielded == 5);
  CHECK_FALSE(stats.complete);
  auto all = enumerate_modal_pairs(c3, {"mH"});
  CHECK(std::equal(seen.begin(), seen.end(), all.begin()));
  CHECK_THROWS_AS(enumerate_modal_pairs(c3, {"F_condition"}), InputError);
  CHECK_THROWS_AS(enumerate_modal_pairs(c3, {"bogus"}), InputError);
}

TEST_CASE("(mH) ⇔ (mH') on every table pair of small algebras") {
  for (auto const& h : small_algebras(3)) {
    oracle::for_each_pair(h.size(), [&](auto const& box, auto const& dia) {
      ModalHeytingAlgebra m(h, box, dia);
      REQUIRE(check_mh(m).holds == check_mh_quasi(m).holds);
    });
  }
}

TEST_CASE("consequences of (mH') over the sweep instances") {
  for (auto const& m : support::catalog_modal()) {
    auto const& h = m.heyting();
    for (Element a = 0; a < h.size(); ++a) {
      CHECK(h.leq(m.diamond(h.neg(a)), h.neg(m.box(a))));
      CHECK(h.leq(m.box(h.neg(a)), h.neg(m.diamond(a))));
    }
    if (check_law(m, "mH1").holds && check_law(m, "mH2").holds) {
      CHECK(m.diamond(h.bot()) == h.bot());
    }
    if (check_law(m, "mH1").holds && check_law(m, "mH3").holds) {
      for (Element a = 0; a < h.size(); ++a) {
        for (Element b = 0; b < h.size(); ++b) {
          if (h.imp(a, b) == h.top()) {
            CHECK(h.imp(m.box(a), m.box(b)) == h.top());
          }
          CHECK(m.box(h.meet(a, b)) == h.meet(m.box(a), m.box(b)));
        }
      }
    }
  }
}

TEST_CASE("(mH2) alone does not force ◇⊥ = ⊥") {
  // −◇⊥ = □⊤, so ◇⊥ = ⊥ needs □⊤ = ⊤ as well.
  HeytingAlgebra      b2 = boolean_power(1);
  ModalHeytingAlgebra m(b2, {0, 0}, {1, 1});
  CHECK(check_mh(m).holds);
  CHECK(check_law(m, "mH2").holds);
  CHECK_FALSE(check_law(m, "mH1").holds);
  CHECK(m.diamond(b2.bot()) == b2.top());
}

TEST_CASE("relational algebras satisfy (mH') without assuming (mH)") {
  for (auto const& h : small_algebras(3)) {
    oracle::for_each_pair(h.size(), [&](auto const& box, auto const& dia) {
      ModalHeytingAlgebra m(h, box, dia);
      if (check_law(m, "mH1").holds && check_law(m, "mH2").holds
          && check_law(m, "mH3").holds) {
        REQUIRE(check_mh_quasi(m).holds);
      }
    });
  }
}

TEST_CASE("tables must be total") {
  HeytingAlgebra h = chain3();
  CHECK_THROWS_AS(ModalHeytingAlgebra(h, {0, 1}, {0, 1, 2}), InputError);
  CHECK_THROWS_AS(ModalHeytingAlgebra(h, {0, 1, 7}, {0, 1, 2}), InputError);
}
