#include "mnl/nelson.hpp"

#include <algorithm>

#include "mnl/error.hpp"

namespace mnl {

  namespace {
    void check_table(std::vector<Element> const& t, std::size_t expected,
                     std::size_t n, char const* what) {
      if (t.size() != expected) {
        throw InputError(std::string(what) + " table has "
                         + std::to_string(t.size()) + " entries, expected "
                         + std::to_string(expected));
      }
      for (Element v : t) {
        if (v >= n) {
          throw InputError(std::string(what)
                           + " table refers outside the carrier");
        }
      }
    }
  }  // namespace

  ModalNelsonLattice::ModalNelsonLattice(FiniteLattice        lat,
                                         std::vector<Element> fusion,
                                         std::vector<Element> res)
      : lat_(std::move(lat)), fusion_(std::move(fusion)), res_(std::move(res)) {
    std::size_t const n = lat_.size();
    check_table(fusion_, n * n, n, "fusion");
    check_table(res_, n * n, n, "res");
  }

  ModalNelsonLattice::ModalNelsonLattice(FiniteLattice        lat,
                                         std::vector<Element> fusion,
                                         std::vector<Element> res,
                                         std::vector<Element> bsq,
                                         std::vector<Element> bdia)
      : ModalNelsonLattice(std::move(lat), std::move(fusion), std::move(res)) {
    std::size_t const n = lat_.size();
    check_table(bsq, n, n, "blacksquare");
    check_table(bdia, n, n, "blackdiamond");
    bsq_       = std::move(bsq);
    bdia_      = std::move(bdia);
    has_modal_ = true;
  }

  namespace {

    using Names = std::vector<std::string>;
    using N     = ModalNelsonLattice;

    template <class Pred>
    LawReport unary_law(N const& n, std::string law, Pred pred,
                        std::string detail = {}) {
      for (Element a = 0; a < n.size(); ++a) {
        if (!pred(a)) {
          return LawReport::fail(std::move(law), Names{n.name(a)},
                                 std::move(detail));
        }
      }
      return LawReport::pass(std::move(law));
    }

    template <class Pred>
    LawReport binary_law(N const& n, std::string law, Pred pred,
                         std::string detail = {}) {
      for (Element a = 0; a < n.size(); ++a) {
        for (Element b = 0; b < n.size(); ++b) {
          if (!pred(a, b)) {
            return LawReport::fail(std::move(law),
                                   Names{n.name(a), n.name(b)},
                                   std::move(detail));
          }
        }
      }
      return LawReport::pass(std::move(law));
    }

    template <class Pred>
    LawReport ternary_law(N const& n, std::string law, Pred pred,
                          std::string detail = {}) {
      for (Element a = 0; a < n.size(); ++a) {
        for (Element b = 0; b < n.size(); ++b) {
          for (Element c = 0; c < n.size(); ++c) {
            if (!pred(a, b, c)) {
              return LawReport::fail(std::move(law),
                                     Names{n.name(a), n.name(b), n.name(c)},
                                     std::move(detail));
            }
          }
        }
      }
      return LawReport::pass(std::move(law));
    }

    // Runs the checks in order and returns the first failure.
    template <class... Checks>
    LawReport first_failure(std::string law, Checks&&... checks) {
      LawReport r = LawReport::pass(law);
      ((r.holds ? (void)(r = checks()) : (void)0), ...);
      r.law = std::move(law);
      return r;
    }

  }  // namespace

  LawReport check_rl(N const& n) {
    return first_failure(
        "RL",
        [&] {
          return ternary_law(
              n, "RL",
              [&](Element a, Element b, Element c) {
                return n.res(n.fusion(a, b), c) == n.res(a, n.res(b, c));
              },
              "RL1");
        },
        [&] {
          return binary_law(
              n, "RL",
              [&](Element a, Element b) {
                return n.join(n.fusion(a, n.res(a, b)), b) == b;
              },
              "RL2");
        },
        [&] {
          return binary_law(
              n, "RL",
              [&](Element a, Element b) {
                return n.res(n.meet(a, b), b) == n.top();
              },
              "RL3");
        });
  }

  LawReport check_residuated(N const& n) {
    LawReport r = first_failure(
        "res",
        [&] {
          return unary_law(
              n, "res", [&](Element a) { return n.fusion(n.top(), a) == a; },
              "⊤ is not a unit for *");
        },
        [&] {
          return binary_law(
              n, "res",
              [&](Element a, Element b) {
                return n.fusion(a, b) == n.fusion(b, a);
              },
              "* is not commutative");
        },
        [&] {
          return ternary_law(
              n, "res",
              [&](Element a, Element b, Element c) {
                return n.fusion(n.fusion(a, b), c)
                       == n.fusion(a, n.fusion(b, c));
              },
              "* is not associative");
        },
        [&] {
          return ternary_law(
              n, "res",
              [&](Element a, Element b, Element c) {
                return n.leq(n.fusion(a, b), c) == n.leq(b, n.res(a, c));
              },
              "a * b ≤ c and b ≤ a ⇒ c disagree");
        });
    if (r.holds && !check_rl(n).holds) {
      throw InternalInconsistency(
          "residuation holds but RL1–RL3 fail: " + to_string(check_rl(n)));
    }
    return r;
  }

  LawReport check_potency3(N const& n) {
    return first_failure(
        "potency3",
        [&] {
          return unary_law(
              n, "potency3",
              [&](Element a) {
                return n.fusion(n.square(a), a) == n.square(a);
              },
              "a³ ≠ a²");
        },
        [&] {
          return binary_law(
              n, "potency3",
              [&](Element a, Element b) {
                return n.res(n.square(a), b) != n.top()
                       || n.res(n.square(a), n.square(b)) == n.top();
              },
              "a² ⇒ b = ⊤ but a² ⇒ b² ≠ ⊤");
        },
        [&] {
          return binary_law(
              n, "potency3",
              [&](Element a, Element b) {
                return n.square(n.fusion(a, b)) == n.square(n.meet(a, b));
              },
              "(a * b)² ≠ (a ∧ b)²");
        });
  }

  LawReport check_nelson(N const& n) {
    LawReport r = first_failure(
        "nelson",
        [&] {
          return unary_law(
              n, "nelson", [&](Element a) { return n.neg(n.neg(a)) == a; },
              "∼∼a ≠ a");
        },
        [&] {
          return binary_law(
              n, "nelson",
              [&](Element a, Element b) {
                Element lhs = n.meet(n.res(n.square(a), b),
                                     n.res(n.square(n.neg(b)), n.neg(a)));
                return n.res(lhs, n.res(a, b)) == n.top();
              },
              "Nelson identity");
        });
    if (r.holds && check_residuated(n).holds) {
      LawReport p = check_potency3(n);
      if (!p.holds) {
        throw InternalInconsistency("Nelson lattice violates "
                                    + to_string(p));
      }
    }
    return r;
  }

  Element recover_strong(N const& n, Element x, Element y) {
    return n.join(n.neg(n.weak_impl(x, n.neg(y))),
                  n.neg(n.weak_impl(y, n.neg(x))));
  }

  Element recover_res(N const& n, Element x, Element y) {
    return n.meet(n.weak_impl(x, y), n.weak_impl(n.neg(y), n.neg(x)));
  }

  LawReport check_recovered_ops(N const& n) {
    return binary_law(n, "recovered_ops", [&](Element x, Element y) {
      return recover_strong(n, x, y) == n.fusion(x, y)
             && recover_res(n, x, y) == n.res(x, y);
    });
  }

  namespace {
    void require_nelson(N const& n, char const* what) {
      LawReport r = check_residuated(n);
      if (r.holds) {
        r = check_nelson(n);
      }
      if (!r.holds) {
        throw InputError(std::string(what) + " needs a Nelson lattice; "
                         + to_string(r));
      }
    }
  }  // namespace

  EquivPartition equiv_partition(N const& n) {
    require_nelson(n, "the ≡ partition");
    std::vector<Element> reps;
    for (Element a = 0; a < n.size(); ++a) {
      reps.push_back(n.square(a));
    }
    std::sort(reps.begin(), reps.end());
    reps.erase(std::unique(reps.begin(), reps.end()), reps.end());

    EquivPartition p;
    p.representative = reps;
    p.class_of.resize(n.size());
    for (Element a = 0; a < n.size(); ++a) {
      auto it = std::lower_bound(reps.begin(), reps.end(), n.square(a));
      p.class_of[a] = static_cast<std::size_t>(it - reps.begin());
      if (!n.leq(n.square(a), a)) {
        throw InternalInconsistency("a² is not below a at '" + n.name(a)
                                    + "'");
      }
    }

    auto same = [&](Element a, Element b) {
      return n.square(a) == n.square(b);
    };
    for (Element a = 0; a < n.size(); ++a) {
      for (Element b = 0; b < n.size(); ++b) {
        if (!same(a, b)) {
          continue;
        }
        for (Element c = 0; c < n.size(); ++c) {
          if (!same(n.meet(a, c), n.meet(b, c))
              || !same(n.join(a, c), n.join(b, c))
              || !same(n.weak_impl(a, c), n.weak_impl(b, c))
              || !same(n.weak_impl(c, a), n.weak_impl(c, b))) {
            throw InternalInconsistency("≡ is not a congruence at ('"
                                        + n.name(a) + "', '" + n.name(b)
                                        + "', '" + n.name(c) + "')");
          }
        }
        if (!same(n.bsq(a), n.bsq(b)) || !same(n.bdia(a), n.bdia(b))) {
          throw InputError("modal operators do not respect ≡ at ('"
                           + n.name(a) + "', '" + n.name(b) + "') [mN2]");
        }
      }
    }
    return p;
  }

  HStar h_star(N const& n) {
    require_nelson(n, "H*");
    HStar hs;
    hs.index_of.assign(n.size(), HStar::npos);
    std::vector<std::string> names;
    for (Element a = 0; a < n.size(); ++a) {
      if (n.square(a) == a) {
        hs.index_of[a] = hs.embedding.size();
        hs.embedding.push_back(a);
        names.push_back(n.name(a));
      }
    }
    auto const& e = hs.embedding;
    auto        h = heyting_from_order(std::move(names), [&](Element x, Element y) {
      return n.leq(e[x], e[y]);
    });

    auto idx = [&](Element a, char const* what) {
      if (hs.index_of[a] == HStar::npos) {
        throw InternalInconsistency(std::string(what)
                                    + " produced a non-idempotent '"
                                    + n.name(a) + "'");
      }
      return static_cast<Element>(hs.index_of[a]);
    };
    for (Element x = 0; x < h.size(); ++x) {
      if (h.neg(x) != idx(n.square(n.neg(e[x])), "(∼a)²")) {
        throw InternalInconsistency("−*a ≠ (∼a)² at '" + h.name(x) + "'");
      }
      for (Element y = 0; y < h.size(); ++y) {
        if (h.meet(x, y) != idx(n.square(n.meet(e[x], e[y])), "(a∧b)²")
            || h.join(x, y) != idx(n.square(n.join(e[x], e[y])), "(a∨b)²")
            || h.imp(x, y)
                   != idx(n.square(n.weak_impl(e[x], e[y])), "(a→b)²")) {
          throw InternalInconsistency("H* operations disagree with the order "
                                      "at ('" + h.name(x) + "', '"
                                      + h.name(y) + "')");
        }
      }
    }

    std::vector<Element> box(h.size()), diamond(h.size());
    for (Element x = 0; x < h.size(); ++x) {
      box[x]     = idx(n.square(n.bsq(e[x])), "(■a)²");
      diamond[x] = idx(n.square(n.bdia(e[x])), "(◆a)²");
    }
    hs.algebra = ModalHeytingAlgebra(std::move(h), std::move(box),
                                     std::move(diamond));
    return hs;
  }

  ElementSet f_star(N const& n, HStar const& hs) {
    ElementSet f, g;
    for (Element a = 0; a < n.size(); ++a) {
      Element s = n.square(n.join(a, n.neg(a)));
      if (hs.index_of[s] == HStar::npos) {
        throw InternalInconsistency("(a∨∼a)² is not idempotent");
      }
      f.insert(static_cast<Element>(hs.index_of[s]));
      if (n.leq(n.neg(a), a)) {
        g.insert(static_cast<Element>(hs.index_of[n.square(a)]));
      }
    }
    auto const& h = hs.algebra.heyting();
    if (!is_filter(h, f) || !is_boolean_filter(h, f)) {
      throw InternalInconsistency("F* is not a Boolean filter of H*");
    }
    if (f != g) {
      throw InternalInconsistency("F* differs from {b² : ∼b ≤ b}");
    }
    if (n.has_modal() && is_mn_lattice(n)
        && !check_filter_condition_F(hs.algebra, f).holds) {
      throw InternalInconsistency("F* violates condition (F): "
                                  + to_string(check_filter_condition_F(
                                      hs.algebra, f)));
    }
    return f;
  }

  ElementSet f_star(N const& n) {
    return f_star(n, h_star(n));
  }

  Element nabla(N const& n, Element x) {
    return n.neg(n.square(n.neg(n.square(x))));
  }

  Element delta(N const& n, Element x) {
    return n.square(n.neg(n.square(n.neg(x))));
  }

  Element phi(N const& n, Element x) {
    return n.meet(delta(n, x), n.join(nabla(n, n.join(x, n.neg(x))), x));
  }

  PhiImage phi_image_algebra(N const& n) {
    PhiImage out;
    for (Element a = 0; a < n.size(); ++a) {
      out.carrier.push_back(phi(n, a));
    }
    std::sort(out.carrier.begin(), out.carrier.end());
    out.carrier.erase(std::unique(out.carrier.begin(), out.carrier.end()),
                      out.carrier.end());
    std::vector<std::size_t> pos(n.size(), HStar::npos);
    std::vector<std::string> names;
    for (std::size_t k = 0; k < out.carrier.size(); ++k) {
      pos[out.carrier[k]] = k;
      names.push_back(n.name(out.carrier[k]));
    }
    auto const& c = out.carrier;
    auto at = [&](Element a) {
      if (pos[a] == HStar::npos) {
        throw InternalInconsistency("Φ(A) is not closed: '" + n.name(a)
                                    + "' is outside φ(A)");
      }
      return static_cast<Element>(pos[a]);
    };

    FiniteLattice lat = lattice_from_poset(
        FinitePoset::from_relation(names, [&](Element x, Element y) {
          return phi(n, n.meet(c[x], c[y])) == c[x];
        }));
    std::size_t const    m = c.size();
    std::vector<Element> fusion(m * m), res(m * m);
    for (Element x = 0; x < m; ++x) {
      for (Element y = 0; y < m; ++y) {
        if (lat.meet(x, y) != at(phi(n, n.meet(c[x], c[y])))
            || lat.join(x, y) != at(phi(n, n.join(c[x], c[y])))) {
          throw InternalInconsistency("Φ(A) lattice operations disagree with "
                                      "φ(x ∧ y), φ(x ∨ y)");
        }
        fusion[x * m + y] = at(n.fusion(c[x], c[y]));
        res[x * m + y]    = at(n.res(c[x], c[y]));
      }
    }
    out.algebra = ModalNelsonLattice(std::move(lat), std::move(fusion),
                                     std::move(res));
    for (Element a = 0; a < n.size(); ++a) {
      out.projection.push_back(at(phi(n, a)));
    }

    auto const& p = out.projection;
    auto const& r = out.algebra;
    for (Element a = 0; a < n.size(); ++a) {
      for (Element b = 0; b < n.size(); ++b) {
        if (p[n.meet(a, b)] != r.meet(p[a], p[b])
            || p[n.join(a, b)] != r.join(p[a], p[b])
            || p[n.fusion(a, b)] != r.fusion(p[a], p[b])
            || p[n.res(a, b)] != r.res(p[a], p[b])) {
          throw InternalInconsistency("φ is not a homomorphism at ('"
                                      + n.name(a) + "', '" + n.name(b)
                                      + "')");
        }
      }
    }
    return out;
  }

  std::vector<std::string> const& modal_nelson_law_names() {
    static std::vector<std::string> const names = {
        "res",   "RL",          "nelson",        "potency3",    "mN1",
        "mN2",   "mN2s",        "mN2d",          "mN3",         "mN3q",
        "mN4",   "mN4d",        "mN5",           "mN6",         "mN7",
        "normal_nelson", "phi_regular", "phi_regular_modal", "centered"};
    return names;
  }

  namespace {

    LawReport check_phi_regular(N const& n) {
      return unary_law(n, "phi_regular", [&](Element x) {
        Element s = n.square(n.neg(n.square(x)));
        return n.join(s, n.square(n.neg(s))) == n.top();
      });
    }

    // mN6 / mN7 follow from mN1, mN2 and mN4 on Nelson lattices.
    LawReport theorem_check(N const& n, LawReport r) {
      if (!r.holds && check_residuated(n).holds && check_nelson(n).holds
          && check_mn_law(n, "mN1").holds && check_mn_law(n, "mN2").holds
          && check_mn_law(n, "mN4").holds) {
        throw InternalInconsistency("■-regular MN-lattice violates "
                                    + to_string(r));
      }
      return r;
    }

  }  // namespace

  LawReport check_mn_law(N const& n, std::string_view law) {
    auto const bot = n.bot();
    auto sq        = [&](Element a) { return n.square(a); };

    if (law == "res") return check_residuated(n);
    if (law == "RL") return check_rl(n);
    if (law == "nelson") return check_nelson(n);
    if (law == "potency3") return check_potency3(n);
    if (law == "mN1") {
      return unary_law(n, "mN1", [&](Element a) {
        return n.bdia(a) == n.neg(n.bsq(n.neg(a)));
      });
    }
    if (law == "mN2") {
      return binary_law(n, "mN2", [&](Element a, Element b) {
        return sq(a) != sq(b)
               || (sq(n.bsq(a)) == sq(n.bsq(b))
                   && sq(n.bdia(a)) == sq(n.bdia(b)));
      });
    }
    if (law == "mN2s") {
      return unary_law(n, "mN2s", [&](Element a) {
        return sq(n.bsq(a)) == sq(n.bsq(sq(a)));
      });
    }
    if (law == "mN2d") {
      return unary_law(n, "mN2d", [&](Element a) {
        return sq(n.bdia(a)) == sq(n.bdia(sq(a)));
      });
    }
    if (law == "mN3") {
      return binary_law(n, "mN3", [&](Element a, Element b) {
        return sq(n.meet(n.bsq(a), n.bdia(n.meet(n.neg(sq(a)), b)))) == bot;
      });
    }
    if (law == "mN3q") {
      return binary_law(n, "mN3q", [&](Element a, Element b) {
        return sq(n.meet(a, b)) != bot
               || sq(n.meet(n.bsq(a), n.bdia(b))) == bot;
      });
    }
    if (law == "mN4") {
      return binary_law(n, "mN4", [&](Element a, Element b) {
        return n.bsq(n.meet(a, b)) == n.meet(n.bsq(a), n.bsq(b));
      });
    }
    if (law == "mN4d") {
      return binary_law(n, "mN4d", [&](Element a, Element b) {
        return n.bdia(n.join(a, b)) == n.join(n.bdia(a), n.bdia(b));
      });
    }
    if (law == "mN5") {
      if (n.bsq(n.top()) != n.top()) {
        return LawReport::fail("mN5", Names{n.name(n.top())});
      }
      return LawReport::pass("mN5");
    }
    if (law == "mN6") {
      return theorem_check(
          n, binary_law(n, "mN6", [&](Element a, Element b) {
            return !n.leq(sq(a), b) || n.leq(sq(n.bsq(a)), n.bsq(b));
          }));
    }
    if (law == "mN7") {
      return theorem_check(
          n, binary_law(n, "mN7", [&](Element a, Element b) {
            return !n.leq(sq(n.neg(a)), n.neg(b))
                   || n.leq(sq(n.neg(n.bsq(a))), n.neg(n.bsq(b)));
          }));
    }
    if (law == "normal_nelson") {
      return unary_law(n, "normal_nelson", [&](Element x) {
        return nabla(n, x) == delta(n, x);
      });
    }
    if (law == "phi_regular") return check_phi_regular(n);
    if (law == "phi_regular_modal") {
      LawReport r = check_phi_regular(n);
      if (!r.holds) {
        r.law = "phi_regular_modal";
        return r;
      }
      return unary_law(
          n, "phi_regular_modal",
          [&](Element x) { return n.bsq(phi(n, x)) == phi(n, n.bsq(x)); },
          "■φ(x) ≠ φ(■x)");
    }
    if (law == "centered") {
      for (Element x = 0; x < n.size(); ++x) {
        if (n.neg(x) == x) {
          LawReport r = LawReport::pass("centered");
          r.witness   = {n.name(x)};
          return r;
        }
      }
      return LawReport::fail("centered", {}, "∼ has no fixed point");
    }
    throw InputError("unknown modal Nelson law '" + std::string(law) + "'");
  }

  bool is_mn_lattice(N const& n) {
    for (char const* law : {"res", "nelson", "mN1", "mN2", "mN3"}) {
      if (!check_mn_law(n, law).holds) {
        return false;
      }
    }
    return true;
  }

}  // namespace mnl
