#pragma once

#include <optional>
#include <vector>

#include "mnl/heyting.hpp"
#include "mnl/law_report.hpp"
#include "mnl/modal_heyting.hpp"
#include "mnl/order.hpp"
#include "mnl/twist.hpp"

namespace mnl {

  // Finite spaces only: every subset is clopen, so clopen up-sets are just
  // up-sets and the topology carries no information beyond the order.

  // Prime filters of a finite Heyting algebra, ordered by inclusion and
  // listed by (size, bitmask). Point k is named "↑j" for the least member j
  // of filters[k].
  struct Spectrum {
    FinitePoset             points;
    std::vector<ElementSet> filters;
  };

  // Computed twice, by a primality scan over all filters and as ↑j for the
  // join-irreducibles j; InternalInconsistency if the two differ.
  Spectrum prime_filters(HeytingAlgebra const& h);

  // sigma[a] = {P : a ∈ P} as a set of spectrum points.
  std::vector<ElementSet> sigma(HeytingAlgebra const& h, Spectrum const& s);

  // All up-sets (down-sets) of p ordered by (size, bitmask).
  std::vector<ElementSet> all_upsets(FinitePoset const& p);
  std::vector<ElementSet> all_downsets(FinitePoset const& p);

  // Up-sets of a poset as a Heyting algebra; elements are named "{x,y}".
  // The implication is checked against U → V = {x : ↑x ∩ U ⊆ V}.
  struct UpsetAlgebra {
    HeytingAlgebra          algebra;
    std::vector<ElementSet> upsets;

    std::optional<Element> index_of(ElementSet u) const;
  };

  UpsetAlgebra upset_algebra(FinitePoset const& p);

  // Neighbourhood families are stored positively and sorted by bitmask.
  struct MESpace {
    FinitePoset                          points;
    std::vector<std::vector<ElementSet>> eta_box;
    std::vector<std::vector<ElementSet>> eta_diamond;

    bool operator==(MESpace const&) const = default;
  };

  struct MNESpace {
    MESpace    me;
    ElementSet closed;

    bool operator==(MNESpace const&) const = default;
  };

  // □_η(U) = {x : U ∈ η₁(x)}, ◇_η(U) = {x : X∖U ∉ η₂(x)}. Throws
  // InputError if u is not an up-set.
  ElementSet box_from_eta(MESpace const& x, ElementSet u);
  ElementSet diamond_from_eta(MESpace const& x, ElementSet u);

  // "me_space": (1) η₁ holds up-sets, η₂ down-sets; (2) □_η, ◇_η send
  // up-sets to up-sets; (3) U ∈ η₁(x) implies ↓U ∪ (X∖V) ∈ η₂(x) for
  // every up-set V.
  LawReport check_me_space(MESpace const& x);
  // "F_star": C ⊆ U∪V and U∩V = ∅ imply C ⊆ □_η U ∪ ◇_η V.
  LawReport check_f_star(MNESpace const& x);
  // "mne_space": ME conditions, C ⊆ max(X) and (F*).
  LawReport check_mne_space(MNESpace const& x);

  // η_□(P) = {σ(a) : □a ∈ P}, η_◇(P) = D(X) ∖ {X∖σ(a) : ◇a ∈ P}. Throws
  // InputError if (mH) fails; InternalInconsistency if the result is not an
  // ME-space or σ does not carry □, ◇ to □_η, ◇_η.
  MESpace dual_space(ModalHeytingAlgebra const& m);

  struct SpaceAlgebra {
    ModalHeytingAlgebra     algebra;
    std::vector<ElementSet> upsets;  // element k of algebra is upsets[k]

    std::optional<Element> index_of(ElementSet u) const;
  };

  // Up-sets with □_η₁ and ◇_η₂. Throws InputError if x is not an ME-space.
  SpaceAlgebra algebra_of_space(MESpace const& x);

  // σ as a map m → algebra_of_space(dual_space(m)), verified to be a modal
  // Heyting isomorphism.
  Morphism sigma_isomorphism(ModalHeytingAlgebra const& m);

  // ε(x) = {U : x ∈ U} as a map from x's points to the points of
  // dual_space(algebra_of_space(x)), verified to be an order isomorphism
  // transporting η₁ and η₂ setwise.
  Morphism epsilon(MESpace const& x);

  // C(F) = {P : F ⊆ P} as spectrum points.
  ElementSet closed_of_filter(Spectrum const& s, ElementSet f);

  // The dual of (m, f) with C = C(f). Throws InputError unless f is Boolean
  // and satisfies (F); InternalInconsistency if the result is not an
  // MNE-space.
  MNESpace mne_from_pair(ModalHeytingAlgebra const& m, ElementSet f);

  // F_C = {U : C ⊆ U} as elements of algebra_of_space(x.me), verified to be
  // a Boolean filter with (F).
  ElementSet filter_of_closed(MNESpace const& x);

  // Order-preserving and ↑f(x) ⊆ f[↑x].
  LawReport check_esakia_function(FinitePoset const& a, FinitePoset const& b,
                                  Morphism const& f);
  // Esakia function with U ∈ η'₁(f x) ⇔ f⁻¹U ∈ η₁(x) and
  // X₂∖U ∈ η'₂(f x) ⇔ X₁∖f⁻¹U ∈ η₂(x) for all up-sets U of b.
  LawReport check_me_morphism(MESpace const& a, MESpace const& b,
                              Morphism const& f);
  // ME-morphism with f[C₁] ⊆ C₂.
  LawReport check_mne_morphism(MNESpace const& a, MNESpace const& b,
                               Morphism const& f);

  // X(h)(P) = h⁻¹[P], a map dual_space(b) → dual_space(a). Throws InputError
  // if h is not a modal Heyting homomorphism.
  Morphism dualize_hom(ModalHeytingAlgebra const& a,
                       ModalHeytingAlgebra const& b, Morphism const& h);
  // h(f)(U) = f⁻¹[U], a map algebra_of_space(b) → algebra_of_space(a).
  // Throws InputError if f is not an ME-morphism.
  Morphism hom_of_map(MESpace const& a, MESpace const& b, Morphism const& f);

  // σ_b ∘ h = G(J(h)) ∘ σ_a.
  bool sigma_naturality(ModalHeytingAlgebra const& a,
                        ModalHeytingAlgebra const& b, Morphism const& h);
  // ε_b ∘ f = J(G(f)) ∘ ε_a.
  bool epsilon_naturality(MESpace const& a, MESpace const& b,
                          Morphism const& f);

  std::optional<Morphism> is_isomorphic(MESpace const& a, MESpace const& b,
                                        std::size_t cap = 32);
  std::optional<Morphism> is_isomorphic(MNESpace const& a, MNESpace const& b,
                                        std::size_t cap = 32);

}  // namespace mnl
