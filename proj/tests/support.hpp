#pragma once

#include <string>
#include <vector>

#include "mnl/catalog.hpp"
#include "mnl/document.hpp"
#include "mnl/heyting.hpp"
#include "mnl/nelson.hpp"
#include "mnl/order.hpp"
#include "mnl/twist.hpp"

namespace support {

  using namespace mnl;

  inline Element at(FinitePoset const& p, std::string const& name) {
    auto x = p.index_of(name);
    if (!x) {
      throw std::runtime_error("no element named " + name);
    }
    return *x;
  }
  inline Element at(HeytingAlgebra const& h, std::string const& name) {
    return at(h.poset(), name);
  }
  inline Element at(ModalNelsonLattice const& n, std::string const& name) {
    return at(n.poset(), name);
  }

  inline ElementSet set_of(FinitePoset const& p,
                           std::vector<std::string> const& names) {
    ElementSet s;
    for (auto const& n : names) {
      s.insert(at(p, n));
    }
    return s;
  }
  inline ElementSet set_of(HeytingAlgebra const& h,
                           std::vector<std::string> const& names) {
    return set_of(h.poset(), names);
  }

  // The catalog used by the property suites, built once.
  inline std::vector<CatalogEntry> const& catalog() {
    static std::vector<CatalogEntry> const c = build_catalog(6);
    return c;
  }

  inline std::vector<HeytingAlgebra> const& catalog_heyting() {
    static std::vector<HeytingAlgebra> const hs = [] {
      std::vector<HeytingAlgebra> out;
      for (auto const& e : catalog()) {
        out.push_back(e.document.algebra.heyting());
      }
      return out;
    }();
    return hs;
  }

  inline std::vector<ModalHeytingAlgebra> const& catalog_modal() {
    static std::vector<ModalHeytingAlgebra> const ms =
        sweep_instances(catalog(), 12);
    return ms;
  }

  // Twist products N(M, F) of every sweep instance over every filter
  // satisfying (F), plus the non-modal R(H, F) of each catalog algebra.
  inline std::vector<TwistAlgebra> const& catalog_twists() {
    static std::vector<TwistAlgebra> const ts = [] {
      std::vector<TwistAlgebra> out;
      for (auto const& m : catalog_modal()) {
        for (ElementSet f : tw_filters(m)) {
          out.push_back(twist_filtered(m, f));
        }
      }
      for (auto const& h : catalog_heyting()) {
        for (ElementSet f : boolean_filters(h)) {
          out.push_back(twist_filtered(h, f));
        }
      }
      return out;
    }();
    return ts;
  }

  inline std::string fixture(std::string const& name) {
    return std::string(MNL_FIXTURES) + "/" + name;
  }

  inline Document const& fig2() {
    static Document const d = load_document(fixture("fig2.json"));
    return d;
  }

  // R(C3, D(C3)) with identity modalities: (⊥,⊤) < (⊥,m) < (m,⊥) < (⊤,⊥).
  inline TwistAlgebra four_chain() {
    HeytingAlgebra h = chain3();
    return twist_filtered(with_identity_modalities(h), dense_elements(h));
  }

  // Łukasiewicz n-chain 0 < 1 < ... < n-1 with truncated addition.
  inline ModalNelsonLattice lukasiewicz(std::size_t n) {
    FiniteLattice        lat = chain(n).lattice();
    int const            top = static_cast<int>(n) - 1;
    std::vector<Element> fusion(n * n), res(n * n);
    for (int a = 0; a <= top; ++a) {
      for (int b = 0; b <= top; ++b) {
        fusion[a * n + b] = static_cast<Element>(std::max(0, a + b - top));
        res[a * n + b]    = static_cast<Element>(std::min(top, top - a + b));
      }
    }
    return ModalNelsonLattice(lat, fusion, res);
  }

  // Boolean 2 with * = ∧ and classical implication.
  inline ModalNelsonLattice classical2() {
    FiniteLattice lat = boolean_power(1).lattice();
    return ModalNelsonLattice(lat, {0, 0, 0, 1}, {1, 1, 0, 1});
  }

  inline TwObject c3_dense() {
    HeytingAlgebra h = chain3();
    return {with_identity_modalities(h), dense_elements(h)};
  }

}  // namespace support
