#pragma once

#include <compare>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mnl/heyting.hpp"
#include "mnl/law_report.hpp"
#include "mnl/modal_heyting.hpp"
#include "mnl/nelson.hpp"
#include "mnl/structure.hpp"

namespace mnl {

  struct TwistPair {
    Element first  = 0;
    Element second = 0;

    auto operator<=>(TwistPair const&) const = default;
  };

  // R(H, F) or N(M, F): pairs (x, y) with x ∧ y = ⊥ and x ∨ y ∈ F, in
  // lexicographic order, carrying
  //   (x,y) ∧ (s,t) = (x∧s, y∨t)        (x,y) ∨ (s,t) = (x∨s, y∧t)
  //   (x,y) * (s,t) = (x∧s, (x⇀t)∧(s⇀y))
  //   (x,y) ⇒ (s,t) = ((x⇀s)∧(t⇀y), x∧t)
  //   ■(x,y) = (□x, ◇y)                 ◆(x,y) = (◇x, □y)
  // Elements are named "(x,y)" after the base names.
  struct TwistAlgebra {
    ModalNelsonLattice     algebra;
    std::vector<TwistPair> pairs;
    ElementSet             filter;
    std::size_t            base_size = 0;

    // Position of (x, y) in pairs, if admissible.
    std::optional<Element> index_of(TwistPair p) const;
  };

  std::string pair_name(HeytingAlgebra const& h, TwistPair p);

  // Throws InputError if (mH) fails.
  TwistAlgebra twist_full(ModalHeytingAlgebra const& m);
  // Throws InputError if f is not a Boolean filter or condition (F) fails;
  // the message carries the witness.
  TwistAlgebra twist_filtered(ModalHeytingAlgebra const& m, ElementSet f);
  // Non-modal versions.
  TwistAlgebra twist_full(HeytingAlgebra const& h);
  TwistAlgebra twist_filtered(HeytingAlgebra const& h, ElementSet f);

  // Whether the pairs with x ∨ y ∈ f are closed under ■ and ◆, decided
  // directly without consulting condition (F).
  bool twist_carrier_modal_closed(ModalHeytingAlgebra const& m, ElementSet f);

  // F(B) = π₁{a ∨ ∼a : a ∈ B} for a subset B of the full twist. Throws
  // InputError if B is not a subalgebra or π₁(B) ≠ H, and
  // InternalInconsistency if re-twisting with F(B) does not give B back.
  ElementSet recover_filter(TwistAlgebra const& full, ElementSet b);

  // ---------------------------------------------------------------------
  // Morphisms.

  struct Morphism {
    std::vector<Element> map;

    Element operator()(Element x) const {
      return map[x];
    }
    bool operator==(Morphism const&) const = default;
  };

  Morphism identity_morphism(std::size_t n);
  // (g ∘ f)(x) = g(f(x)).
  Morphism compose(Morphism const& g, Morphism const& f);
  bool     is_bijective(Morphism const& f, std::size_t target_size);

  // Preservation of ∧, ∨, ⇀, ⊥, ⊤ (and □, ◇ for the modal version).
  LawReport check_heyting_hom(HeytingAlgebra const& a, HeytingAlgebra const& b,
                              Morphism const& f);
  LawReport check_modal_heyting_hom(ModalHeytingAlgebra const& a,
                                    ModalHeytingAlgebra const& b,
                                    Morphism const&            f);
  // Modal Heyting homomorphism with f[f1] ⊆ f2.
  LawReport check_tw_morphism(ModalHeytingAlgebra const& a, ElementSet f1,
                              ModalHeytingAlgebra const& b, ElementSet f2,
                              Morphism const& f);
  // Preservation of ∧, ∨, *, ⇒, ⊥, ⊤, and ■, ◆ when both sides are modal.
  LawReport check_nelson_hom(ModalNelsonLattice const& a,
                             ModalNelsonLattice const& b, Morphism const& f);

  // ---------------------------------------------------------------------
  // The isomorphisms h and β.

  struct IsoH {
    HStar        hstar;
    ElementSet   fstar;
    TwistAlgebra target;  // N(M*, F*)
    Morphism     map;     // n → target, a ↦ (a², (∼a)²)
  };

  // Throws InputError unless n is an MN-lattice (or a plain Nelson
  // lattice), and InternalInconsistency if h is not an isomorphism.
  IsoH iso_h(ModalNelsonLattice const& n);

  struct IsoBeta {
    TwistAlgebra twist;  // N(M, F)
    HStar        hstar;  // M* of the twist
    ElementSet   fstar;
    Morphism     map;    // m → hstar.algebra, a ↦ (a, −a)
  };

  // Throws InputError unless (m, f) satisfies (F) with f Boolean, and
  // InternalInconsistency if β is not an isomorphism with β[F] = F*.
  IsoBeta iso_beta(ModalHeytingAlgebra const& m, ElementSet f);

  // ---------------------------------------------------------------------
  // The functors between MN-lattices and pairs (M, F).

  struct TwObject {
    ModalHeytingAlgebra algebra;
    ElementSet          filter;
  };

  // F(N) = (M*, F*).
  TwObject functor_F(ModalNelsonLattice const& n);
  // E(M, F) = N(M, F).
  TwistAlgebra functor_E(TwObject const& p);

  // F(g): restriction of g to idempotents, as a map H*₁ → H*₂. Throws
  // InputError if g is not a homomorphism.
  Morphism functor_F(ModalNelsonLattice const& a, ModalNelsonLattice const& b,
                     Morphism const& g);
  // E(h)(x, y) = (h(x), h(y)). Throws InputError if h is not a
  // TW-morphism.
  Morphism functor_E(TwObject const& a, TwObject const& b, Morphism const& h);

  // α_b ∘ g = E(F(g)) ∘ α_a, with α the map of iso_h.
  bool naturality_alpha(ModalNelsonLattice const& a,
                        ModalNelsonLattice const& b, Morphism const& g);
  // β_b ∘ h = F(E(h)) ∘ β_a.
  bool naturality_beta(TwObject const& a, TwObject const& b,
                       Morphism const& h);

  // ---------------------------------------------------------------------
  // Search.

  Structure structure_of(ModalNelsonLattice const& n);
  Structure structure_of(ModalHeytingAlgebra const& m);
  Structure structure_of(HeytingAlgebra const& h);

  // An isomorphism a → b if one exists. Throws InputError if exactly one
  // side is modal.
  std::optional<Morphism> is_isomorphic(ModalNelsonLattice const& a,
                                        ModalNelsonLattice const& b,
                                        std::size_t               cap = 32);
  std::optional<Morphism> is_isomorphic(ModalHeytingAlgebra const& a,
                                        ModalHeytingAlgebra const& b,
                                        std::size_t                cap = 32);
  std::optional<Morphism> is_isomorphic(HeytingAlgebra const& a,
                                        HeytingAlgebra const& b,
                                        std::size_t           cap = 32);

  // (the embedding N → R(H*) is onto, N is centered). The two must agree;
  // InternalInconsistency otherwise.
  std::pair<bool, bool> check_surjectivity_centered(ModalNelsonLattice const& n);

}  // namespace mnl
