#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mnl/heyting.hpp"
#include "mnl/law_report.hpp"

namespace mnl {

  // A Heyting algebra with two arbitrary unary operators □ and ◇. No
  // monotonicity is assumed. The defining law (mH)
  //
  //   □a ∧ ◇(−a ∧ b) = ⊥
  //
  // is not enforced on construction so that failing instances can be
  // inspected; operations that need it check it and throw.
  class ModalHeytingAlgebra {
   public:
    ModalHeytingAlgebra() = default;
    // Throws InputError if a table is not total over the carrier.
    ModalHeytingAlgebra(HeytingAlgebra       h,
                        std::vector<Element> box,
                        std::vector<Element> diamond);

    HeytingAlgebra const& heyting() const {
      return h_;
    }
    std::size_t size() const {
      return h_.size();
    }
    Element box(Element a) const {
      return box_[a];
    }
    Element diamond(Element a) const {
      return diamond_[a];
    }
    std::vector<Element> const& box_table() const {
      return box_;
    }
    std::vector<Element> const& diamond_table() const {
      return diamond_;
    }

    bool operator==(ModalHeytingAlgebra const&) const = default;

   private:
    HeytingAlgebra       h_;
    std::vector<Element> box_;
    std::vector<Element> diamond_;
  };

  // □ = ◇ = identity.
  ModalHeytingAlgebra with_identity_modalities(HeytingAlgebra h);

  LawReport check_mh(ModalHeytingAlgebra const& m);
  // If a ∧ b = ⊥ then □a ∧ ◇b = ⊥.
  LawReport check_mh_quasi(ModalHeytingAlgebra const& m);

  // If a ∧ b = ⊥ and a ∨ b ∈ F then □a ∨ ◇b ∈ F. Throws InputError if f is
  // not a Boolean filter.
  LawReport check_filter_condition_F(ModalHeytingAlgebra const& m,
                                     ElementSet                 f);

  // Stable law names: mH, mH_quasi, mH1, mH2, mH3, N1, N2, crisp_box,
  // crisp_diamond, stone, F_condition.
  std::vector<std::string> const& modal_heyting_law_names();

  // Evaluates a registry law. F_condition needs a filter; every other law
  // ignores it. Throws InputError on an unknown name.
  LawReport check_law(ModalHeytingAlgebra const& m,
                      std::string_view           law,
                      std::optional<ElementSet>  filter = std::nullopt);

  struct ModalPair {
    std::vector<Element> box;
    std::vector<Element> diamond;

    auto operator<=>(ModalPair const&) const = default;
  };

  struct EnumerationBudget {
    // Stop after this many pairs have been yielded.
    std::size_t max_results = static_cast<std::size_t>(-1);
    // Stop after this many search nodes.
    std::size_t max_nodes = static_cast<std::size_t>(-1);
  };

  struct EnumerationStats {
    std::size_t yielded  = 0;
    std::size_t nodes    = 0;
    bool        complete = true;
  };

  // Streams every (□, ◇) over h satisfying (mH) and each named law, in
  // lexicographic order of (□ table, ◇ table). The visitor returns false to
  // stop early; a stop by the visitor or by the budget clears `complete`.
  EnumerationStats enumerate_modal_pairs(
      HeytingAlgebra const&                        h,
      std::vector<std::string> const&              laws,
      EnumerationBudget                            budget,
      std::function<bool(ModalPair const&)> const& visit);

  std::vector<ModalPair>
  enumerate_modal_pairs(HeytingAlgebra const&           h,
                        std::vector<std::string> const& laws,
                        EnumerationBudget               budget = {});

  // Number of (mH) pairs, computed without enumerating them. Throws
  // LimitExceeded when n^n exceeds max_box_tables.
  std::uint64_t count_mh_pairs(HeytingAlgebra const& h,
                               std::uint64_t max_box_tables = 1'000'000);

  // The pair at position `rank` of the lexicographic (mH) enumeration.
  ModalPair mh_pair_at(HeytingAlgebra const& h, std::uint64_t rank);

}  // namespace mnl
