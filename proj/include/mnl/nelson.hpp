#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "mnl/heyting.hpp"
#include "mnl/law_report.hpp"
#include "mnl/modal_heyting.hpp"
#include "mnl/order.hpp"

namespace mnl {

  // A finite bounded lattice with fusion * and residual ⇒, optionally with
  // modal operators ■ and ◆. Nothing beyond totality is enforced on
  // construction; the check_* functions decide which laws hold.
  //
  // Plain lattices report has_modal() == false and act as if ■ = ◆ = id.
  class ModalNelsonLattice {
   public:
    ModalNelsonLattice() = default;
    ModalNelsonLattice(FiniteLattice        lat,
                       std::vector<Element> fusion,
                       std::vector<Element> res);
    ModalNelsonLattice(FiniteLattice        lat,
                       std::vector<Element> fusion,
                       std::vector<Element> res,
                       std::vector<Element> bsq,
                       std::vector<Element> bdia);

    FiniteLattice const& lattice() const {
      return lat_;
    }
    FinitePoset const& poset() const {
      return lat_.poset();
    }
    std::size_t size() const {
      return lat_.size();
    }
    std::string const& name(Element x) const {
      return lat_.name(x);
    }
    bool leq(Element a, Element b) const {
      return lat_.leq(a, b);
    }
    Element meet(Element a, Element b) const {
      return lat_.meet(a, b);
    }
    Element join(Element a, Element b) const {
      return lat_.join(a, b);
    }
    Element bot() const {
      return lat_.bot();
    }
    Element top() const {
      return lat_.top();
    }
    Element fusion(Element a, Element b) const {
      return fusion_[a * size() + b];
    }
    Element res(Element a, Element b) const {
      return res_[a * size() + b];
    }
    // ∼a = a ⇒ ⊥.
    Element neg(Element a) const {
      return res(a, bot());
    }
    Element square(Element a) const {
      return fusion(a, a);
    }
    // a → b = a² ⇒ b.
    Element weak_impl(Element a, Element b) const {
      return res(square(a), b);
    }
    // ¬a = a → ⊥.
    Element weak_neg(Element a) const {
      return weak_impl(a, bot());
    }

    bool has_modal() const {
      return has_modal_;
    }
    Element bsq(Element a) const {
      return has_modal_ ? bsq_[a] : a;
    }
    Element bdia(Element a) const {
      return has_modal_ ? bdia_[a] : a;
    }

    std::vector<Element> const& fusion_table() const {
      return fusion_;
    }
    std::vector<Element> const& res_table() const {
      return res_;
    }
    // Empty when has_modal() is false.
    std::vector<Element> const& bsq_table() const {
      return bsq_;
    }
    std::vector<Element> const& bdia_table() const {
      return bdia_;
    }

    ModalNelsonLattice plain_reduct() const {
      return ModalNelsonLattice(lat_, fusion_, res_);
    }

    bool operator==(ModalNelsonLattice const&) const = default;

   private:
    FiniteLattice        lat_;
    std::vector<Element> fusion_;
    std::vector<Element> res_;
    std::vector<Element> bsq_;
    std::vector<Element> bdia_;
    bool                 has_modal_ = false;
  };

  // "res": ⊤ is a unit, * is commutative and associative, and
  // a * b ≤ c iff b ≤ a ⇒ c for all triples. Throws InternalInconsistency
  // if residuation holds while RL1–RL3 fail.
  LawReport check_residuated(ModalNelsonLattice const& n);
  // "RL": (a*b)⇒c = a⇒(b⇒c), (a*(a⇒b))∨b = b, (a∧b)⇒b = ⊤.
  LawReport check_rl(ModalNelsonLattice const& n);
  // "nelson": ∼∼a = a and ((a²⇒b) ∧ ((∼b)²⇒∼a)) ⇒ (a⇒b) = ⊤. When it
  // holds on a residuated lattice, check_potency3 must hold too, otherwise
  // InternalInconsistency is thrown.
  LawReport check_nelson(ModalNelsonLattice const& n);
  // "potency3": a³ = a², a²⇒b = ⊤ implies a²⇒b² = ⊤, (a*b)² = (a∧b)².
  LawReport check_potency3(ModalNelsonLattice const& n);

  // x*y = ∼(x→∼y) ∨ ∼(y→∼x) and x⇒y = (x→y) ∧ (∼y→∼x).
  Element recover_strong(ModalNelsonLattice const& n, Element x, Element y);
  Element recover_res(ModalNelsonLattice const& n, Element x, Element y);
  // "recovered_ops": both recovered operations reproduce the tables.
  LawReport check_recovered_ops(ModalNelsonLattice const& n);

  // The relation x ≡ y iff x² = y².
  struct EquivPartition {
    std::vector<std::size_t> class_of;
    // representative[k] = the square shared by class k, its least member.
    std::vector<Element> representative;

    std::size_t class_count() const {
      return representative.size();
    }
  };

  // Classes are numbered by ascending representative. Throws
  // InternalInconsistency if ≡ is not a congruence for ∧, ∨, → on a Nelson
  // lattice, and InputError naming the witness if a modal operator does not
  // respect ≡.
  EquivPartition equiv_partition(ModalNelsonLattice const& n);

  struct HStar {
    ModalHeytingAlgebra  algebra;
    // embedding[k] = the idempotent of n that is element k of algebra.
    std::vector<Element> embedding;
    // index_of[a] = k if a = embedding[k], else npos.
    std::vector<std::size_t> index_of;

    static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  };

  // The idempotents a = a² with a ⋆ b = (a⋆b)², a ⇀ b = (a→b)²,
  // □a = (■a)², ◇a = (◆a)². Throws InputError if n is not a Nelson lattice
  // and InternalInconsistency if the induced structure misbehaves.
  HStar h_star(ModalNelsonLattice const& n);

  // {(a∨∼a)² : a ∈ n} as a subset of h_star(n). Verified to be a Boolean
  // filter equal to {b² : ∼b ≤ b}; for MN-lattices also verified to satisfy
  // condition (F).
  ElementSet f_star(ModalNelsonLattice const& n, HStar const& hs);
  ElementSet f_star(ModalNelsonLattice const& n);

  // ∇x = ∼(∼x²)², Δx = (∼(∼x)²)², φx = Δx ∧ (∇(x∨∼x) ∨ x).
  Element nabla(ModalNelsonLattice const& n, Element x);
  Element delta(ModalNelsonLattice const& n, Element x);
  Element phi(ModalNelsonLattice const& n, Element x);

  struct PhiImage {
    // Plain Nelson lattice on φ(A), with x ∨' y = φ(x∨y), x ∧' y = φ(x∧y).
    ModalNelsonLattice   algebra;
    // carrier[k] = element of the source that is element k of algebra.
    std::vector<Element> carrier;
    // projection[a] = position of φ(a) in carrier.
    std::vector<Element> projection;
  };

  // Throws InternalInconsistency if φ is not a homomorphism onto Φ(A).
  PhiImage phi_image_algebra(ModalNelsonLattice const& n);

  // Stable law names: res, RL, nelson, potency3, mN1, mN2, mN2s, mN2d, mN3,
  // mN3q, mN4, mN4d, mN5, mN6, mN7, normal_nelson, phi_regular,
  // phi_regular_modal, centered.
  std::vector<std::string> const& modal_nelson_law_names();

  // mN6 and mN7 are consequences of mN1, mN2 and mN4 on Nelson lattices: if
  // they fail while those hold, InternalInconsistency is thrown. "centered"
  // carries the first fixed point of ∼ as witness when it holds.
  LawReport check_mn_law(ModalNelsonLattice const& n, std::string_view law);

  bool is_mn_lattice(ModalNelsonLattice const& n);

}  // namespace mnl
