#include <doctest.h>

#include "mnl/error.hpp"
#include "mnl/heyting.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace mnl;
using support::at;
using support::set_of;

namespace {
  using Names = std::vector<std::string>;

  HeytingAlgebra fig1() {
    return figure_one().heyting();
  }
}  // namespace

TEST_CASE("implication on the 3-chain") {
  HeytingAlgebra h = chain3();
  Element bot = at(h, "⊥"), m = at(h, "m"), top = at(h, "⊤");
  CHECK(h.imp(top, m) == m);
  CHECK(h.imp(m, bot) == bot);
  for (Element x : {bot, m, top}) {
    CHECK(h.imp(bot, x) == top);
  }
}

TEST_CASE("negations in the Figure-1 algebra") {
  HeytingAlgebra h = fig1();
  for (char const* x : {"b", "a", "c", "⊤"}) {
    CHECK(h.neg(at(h, x)) == h.bot());
  }
  CHECK(h.neg(h.bot()) == h.top());
}

TEST_CASE("non-distributive lattices are rejected") {
  FiniteLattice m3 = lattice_from_poset(poset_from_covers(
      {"⊥", "x", "y", "z", "⊤"},
      {{"⊥", "x"}, {"⊥", "y"}, {"⊥", "z"}, {"x", "⊤"}, {"y", "⊤"}, {"z", "⊤"}}));
  CHECK_THROWS_AS(heyting_from_lattice(m3), InputError);
}

TEST_CASE("dense and regular elements") {
  HeytingAlgebra c3 = chain3(), b2 = boolean_power(1), f = fig1();
  CHECK(names_of(c3.poset(), dense_elements(c3)) == Names{"m", "⊤"});
  CHECK(names_of(b2.poset(), dense_elements(b2)) == Names{"1"});
  CHECK(names_of(f.poset(), dense_elements(f)) == Names{"b", "a", "c", "⊤"});
  CHECK(names_of(c3.poset(), regular_elements(c3)) == Names{"⊥", "⊤"});
  CHECK(names_of(b2.poset(), regular_elements(b2)) == Names{"0", "1"});
  CHECK(names_of(f.poset(), regular_elements(f)) == Names{"⊥", "⊤"});
}

TEST_CASE("Boolean filters") {
  HeytingAlgebra c3 = chain3(), b2 = boolean_power(1), f = fig1();
  auto names = [](HeytingAlgebra const& h) {
    std::vector<Names> out;
    for (ElementSet s : boolean_filters(h)) {
      out.push_back(names_of(h.poset(), s));
    }
    return out;
  };
  CHECK(names(c3) == std::vector<Names>{{"m", "⊤"}, {"⊥", "m", "⊤"}});
  CHECK(names(b2) == std::vector<Names>{{"1"}, {"0", "1"}});
  CHECK(names(f) == std::vector<Names>{{"b", "a", "c", "⊤"},
                                       {"⊥", "b", "a", "c", "⊤"}});

  CHECK_FALSE(is_boolean_filter(c3, set_of(c3, {"⊤"})));
  CHECK(is_boolean_filter(c3, c3.all()));
  CHECK(is_boolean_filter(c3, set_of(c3, {"m", "⊤"})));
  CHECK_THROWS_AS(is_boolean_filter(c3, set_of(c3, {"m"})), InputError);
}

TEST_CASE("quotients by filters") {
  HeytingAlgebra c3 = chain3();
  Quotient       q  = quotient_by_filter(c3, set_of(c3, {"m", "⊤"}));
  CHECK(q.algebra.size() == 2);
  CHECK(is_boolean_algebra(q.algebra));
  CHECK(q.projection[at(c3, "m")] == q.projection[at(c3, "⊤")]);
  CHECK(q.projection[at(c3, "⊥")] != q.projection[at(c3, "m")]);

  CHECK(quotient_by_filter(c3, c3.all()).algebra.size() == 1);

  HeytingAlgebra f = fig1();
  Quotient       fq = quotient_by_filter(f, dense_elements(f));
  CHECK(fq.algebra.size() == 2);
  CHECK(is_boolean_algebra(fq.algebra));
}

TEST_CASE("Stone identity") {
  CHECK(check_stone(chain3()));
  CHECK(check_stone(boolean_power(1)));
  CHECK(check_stone(fig1()));
  // A Boolean square with a new top: −x ∨ −−x = y ∨ x = u ≠ 1.
  HeytingAlgebra sq = heyting_from_covers(
      {"0", "x", "y", "1"}, {{"0", "x"}, {"0", "y"}, {"x", "1"}, {"y", "1"}});
  HeytingAlgebra not_stone = heyting_from_covers(
      {"0", "x", "y", "u", "1"},
      {{"0", "x"}, {"0", "y"}, {"x", "u"}, {"y", "u"}, {"u", "1"}});
  CHECK(check_stone(sq));
  CHECK_FALSE(check_stone(not_stone));
}

TEST_CASE("residuation law and implication table match the brute oracle") {
  for (auto const& h : support::catalog_heyting()) {
    oracle::Tables const t = oracle::tables_of(h);
    for (Element a = 0; a < h.size(); ++a) {
      for (Element b = 0; b < h.size(); ++b) {
        REQUIRE(h.imp(a, b) == t.imp[a][b]);
        for (Element c = 0; c < h.size(); ++c) {
          REQUIRE(h.leq(h.meet(a, c), b) == h.leq(c, h.imp(a, b)));
        }
      }
      CHECK(h.imp(a, a) == h.top());
    }
  }
}

TEST_CASE("negation laws over the catalog") {
  for (auto const& h : support::catalog_heyting()) {
    CHECK(h.neg(h.bot()) == h.top());
    CHECK(h.neg(h.top()) == h.bot());
    for (Element a = 0; a < h.size(); ++a) {
      CHECK(h.leq(a, h.neg(h.neg(a))));
      CHECK(h.neg(h.neg(h.neg(a))) == h.neg(a));
    }
  }
}

TEST_CASE("filters: generated, exhaustive and oracle agree") {
  for (auto const& h : support::catalog_heyting()) {
    auto           fast = all_filters(h);
    auto           slow = all_filters_exhaustive(h);
    auto           ref  = oracle::filters(oracle::tables_of(h));
    std::vector<std::uint64_t> fast_bits, slow_bits;
    for (ElementSet s : fast) fast_bits.push_back(s.bits());
    for (ElementSet s : slow) slow_bits.push_back(s.bits());
    std::sort(fast_bits.begin(), fast_bits.end());
    std::sort(slow_bits.begin(), slow_bits.end());
    CHECK(fast_bits == ref);
    CHECK(slow_bits == ref);
  }
}

TEST_CASE("Boolean filters: D(H) least, H greatest, quotient Boolean") {
  for (auto const& h : support::catalog_heyting()) {
    ElementSet const d  = dense_elements(h);
    auto const       bf = boolean_filters(h);
    REQUIRE(is_filter(h, d));
    REQUIRE_FALSE(bf.empty());
    for (ElementSet f : bf) {
      CHECK(d.subset_of(f));
    }
    CHECK(std::find(bf.begin(), bf.end(), d) != bf.end());
    CHECK(std::find(bf.begin(), bf.end(), h.all()) != bf.end());
    for (ElementSet f : all_filters(h)) {
      bool const boolean = is_boolean_filter(h, f);
      CHECK(boolean == d.subset_of(f));
      CHECK(boolean == is_boolean_algebra(quotient_by_filter(h, f).algebra));
    }
  }
}

TEST_CASE("dense pair conditions agree on every pair of every catalog algebra") {
  for (auto const& h : support::catalog_heyting()) {
    for (Element x = 0; x < h.size(); ++x) {
      for (Element y = 0; y < h.size(); ++y) {
        auto c = dense_pair_conditions(h, x, y);
        CHECK(c[0] == c[1]);
        CHECK(c[1] == c[2]);
        CHECK(c[2] == c[3]);
      }
    }
  }
}
