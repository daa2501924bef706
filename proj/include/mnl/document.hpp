#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "mnl/duality.hpp"
#include "mnl/modal_heyting.hpp"
#include "mnl/nelson.hpp"

namespace mnl {

  // JSON documents describing one finite object each:
  //
  //   {"kind": "modal-heyting",
  //    "elements": ["0", "m", "1"],
  //    "covers": [["0", "m"], ["m", "1"]],
  //    "box": {"0": "0", "m": "1", "1": "1"},
  //    ...}
  //
  // Elements are indexed in declaration order. Heyting implication is
  // derived from the order; when present it is checked and it is always
  // written back. Spaces use "points", "eta_box"/"eta_diamond" (point ->
  // list of point sets) and, for MNE-spaces, "closed".
  enum class DocumentKind {
    heyting,
    modal_heyting,
    nelson,
    modal_nelson,
    space,
    mne_space,
  };

  std::string_view kind_name(DocumentKind k);

  struct Document {
    DocumentKind kind = DocumentKind::heyting;
    // heyting: identity modalities, which are not serialized.
    ModalHeytingAlgebra       algebra;
    std::optional<ElementSet> filter;
    ModalNelsonLattice        lattice;
    // space: closed is empty and not serialized.
    MNESpace space;

    bool is_heyting_kind() const {
      return kind == DocumentKind::heyting
             || kind == DocumentKind::modal_heyting;
    }
    bool is_nelson_kind() const {
      return kind == DocumentKind::nelson
             || kind == DocumentKind::modal_nelson;
    }
    bool is_space_kind() const {
      return kind == DocumentKind::space || kind == DocumentKind::mne_space;
    }
    std::size_t size() const;
  };

  Document make_document(HeytingAlgebra const& h,
                         std::optional<ElementSet> filter = std::nullopt);
  Document make_document(ModalHeytingAlgebra const& m,
                         std::optional<ElementSet>  filter = std::nullopt);
  Document make_document(ModalNelsonLattice const& n);
  Document make_document(MESpace const& x);
  Document make_document(MNESpace const& x);

  // Throws InputError on malformed JSON (with line and column), unknown
  // kinds or fields, unknown names, non-total tables and invalid orders.
  Document parse_document(std::string_view text);
  Document load_document(std::string const& path);

  // Two-space indentation, fixed field order, trailing newline.
  std::string serialize_document(Document const& d);

  // Parses a comma-separated list of element names.
  ElementSet parse_name_list(FinitePoset const& p, std::string_view list);

}  // namespace mnl
