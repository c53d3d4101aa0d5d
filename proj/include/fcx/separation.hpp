#pragma once

#include <optional>

#include "fcx/errors.hpp"
#include "fcx/ring.hpp"
#include "fcx/space.hpp"

namespace fcx {

struct separation_verdict {
  bool separated = false;
  std::optional<xset> z1;  // disjoint zero sets with A ⊆ Z1, B ⊆ Z2
  std::optional<xset> z2;
};

// On the finite, discrete and convergent-sequence models every
// representable set is the zero set of a member (indicators are
// members), so A and its complement always work. On cofinite ℕ the
// member zero sets are exactly the finite and the cofinite sets, and
// two cofinite sets always meet, so separation requires one finite
// side.
inline separation_verdict fc_separated(const xset& A, const xset& B,
                                       const space_model& space) {
  if (A.space != space || B.space != space)
    throw error(errc::not_representable, "sets over a different model");
  if (!A.disjoint_with(B)) throw error(errc::not_disjoint, "A meets B");
  separation_verdict v;
  switch (space.kind) {
    case space_kind::finite:
    case space_kind::discrete_n:
    case space_kind::conv_seq:
      v.separated = true;
      v.z1 = A;
      v.z2 = A.complement();
      return v;
    case space_kind::cofinite_n: {
      const bool a_fin = A.up.is_finite();
      const bool b_fin = B.up.is_finite();
      if (a_fin) {
        v.separated = true;
        v.z1 = A;
        v.z2 = A.complement();
      } else if (b_fin) {
        v.separated = true;
        v.z2 = B;
        v.z1 = B.complement();
      }
      return v;
    }
  }
  return v;
}

// A member vanishing on Z1 with Z(f) = Z1 exactly: 1 - indicator(Z1).
inline ring_elem member_with_zero_set(const space_model& space, const xset& z) {
  ring_elem f = ring_elem::constant(space, rat(1)) -
                ring_elem::indicator(space, z);
  if (!is_member(f))
    throw error(errc::not_representable,
                "set is not a member zero set on this model");
  return f;
}

// h = f²/(f²+g²): 0 exactly on Z(f), 1 exactly on Z(g), in [0,1].
inline ring_elem separation_witness(const ring_elem& f, const ring_elem& g) {
  if (!zero_set(f).disjoint_with(zero_set(g)))
    throw error(errc::zero_sets_intersect, "Z(f) meets Z(g)");
  ring_elem f2 = f * f;
  return pointwise_div(f2, f2 + g * g);
}

struct removal_result {
  finite_pts removed;
  bool completely_separated = false;
};

// A finite F after whose removal A∖F and B∖F are completely separated
// in X∖F. F is the union of the witnesses' discontinuity sets ({∞} on
// the convergent sequence); the resulting subspace is discrete or
// cofinite, where complete separation is decidable by rule.
inline removal_result separated_after_removal(const xset& A, const xset& B,
                                              const space_model& space) {
  separation_verdict sv = fc_separated(A, B, space);
  if (!sv.separated) throw error(errc::not_separated, "A, B not separated");
  removal_result r;
  switch (space.kind) {
    case space_kind::finite:
    case space_kind::discrete_n:
      r.completely_separated = true;  // discrete, F = ∅
      return r;
    case space_kind::conv_seq:
      r.removed.inf = true;  // X∖{∞} is discrete
      r.completely_separated = true;
      return r;
    case space_kind::cofinite_n: {
      // Remove the finite side; the empty remainder is vacuously
      // separated from anything in the (still cofinite) subspace.
      const xset& fin = A.up.is_finite() ? A : B;
      r.removed.points = fin.up.finite_points();
      r.completely_separated = true;
      return r;
    }
  }
  return r;
}

}  // namespace fcx
