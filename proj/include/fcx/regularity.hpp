#pragma once

#include <optional>
#include <string>

#include "fcx/errors.hpp"
#include "fcx/ideals.hpp"
#include "fcx/ring.hpp"
#include "fcx/space.hpp"

namespace fcx {

// The f⋆ of the regularity proof: 1/f off Z(f), 0 on Z(f). A member on
// every model (on cofinite ℕ a member f is constant off a finite set,
// and so is its quasi-inverse), and f²·f⋆ = f exactly.
inline ring_elem regular_witness(const ring_elem& f) {
  if (!is_member(f)) throw error(errc::not_member, "f is not in the ring");
  ring_elem g = quasi_inverse(f);
  if (!is_member(g))
    throw error(errc::not_member, "quasi-inverse left the ring");
  return g;
}

struct regularity_report {
  bool fcp = false;   // every member zero set eventually clopen
  bool baer = false;  // every representable subset eventually clopen
  std::optional<xset> baer_witness;  // failing subset when baer = false
  // Verdicts quantify over the representable set algebra of the model.
  std::string relativization = "representable sets only";
};

inline regularity_report space_regularity_report(const space_model& space) {
  regularity_report r;
  switch (space.kind) {
    case space_kind::finite:
    case space_kind::discrete_n:
    case space_kind::conv_seq:
      // F = ∅ resp. {∞} witnesses clopen-ness for every subset.
      r.fcp = true;
      r.baer = true;
      return r;
    case space_kind::cofinite_n:
      // Member zero sets are finite or cofinite, each eventually
      // clopen; a set that is neither (the evens) never becomes clopen
      // in a cofinite subspace.
      r.fcp = true;
      r.baer = false;
      r.baer_witness = xset::countable(space, upset::evens());
      return r;
  }
  return r;
}

struct idempotent_witness {
  std::optional<ring_elem> e;
  std::string failure_reason;
};

// An idempotent member e with COZ(e) = A, when the indicator of A is a
// member of the model's ring.
inline idempotent_witness idempotent_coz_witness(const space_model& space,
                                                 const xset& A) {
  if (A.space != space)
    throw error(errc::not_representable, "set over a different model");
  idempotent_witness w;
  ring_elem e = ring_elem::indicator(space, A);
  if (is_member(e)) {
    w.e = e;
  } else {
    w.failure_reason = "indicator is not a ring member on this model";
  }
  return w;
}

// Ann(f) = ⟨e⟩ with e the indicator of Z(f), over Finite(n).
inline ring_elem pp_annihilator_idempotent(const ring_elem& f) {
  if (!f.space.is_finite_model())
    throw error(errc::model_mismatch, "finite model only");
  return ring_elem::indicator(f.space, zero_set(f));
}

}  // namespace fcx
