#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "fcx/errors.hpp"
#include "fcx/upset.hpp"

namespace fcx {

// The four decidable space models. Finite T₁ spaces are discrete, so
// Finite(n) carries no further topological data.
enum class space_kind { finite, discrete_n, cofinite_n, conv_seq };

inline const char* kind_name(space_kind k) {
  switch (k) {
    case space_kind::finite: return "finite";
    case space_kind::discrete_n: return "discrete_n";
    case space_kind::cofinite_n: return "cofinite_n";
    case space_kind::conv_seq: return "conv_seq";
  }
  return "?";
}

struct space_model {
  space_kind kind = space_kind::finite;
  int n = 1;  // point count, finite model only

  bool is_finite_model() const { return kind == space_kind::finite; }
  bool has_inf_point() const { return kind == space_kind::conv_seq; }

  bool operator==(const space_model&) const = default;
};

inline space_model make_space(space_kind kind, int n = -1) {
  if (kind == space_kind::finite) {
    if (n == 0) throw error(errc::empty_space, "Finite(0) has no points");
    if (n < 0) throw error(errc::bad_kind, "Finite model requires n");
    return {space_kind::finite, n};
  }
  if (n >= 0)
    throw error(errc::bad_kind,
                std::string(kind_name(kind)) + " takes no size parameter");
  return {kind, 0};
}

// A representable subset of a model's point set: a bitmask over
// {0..n-1} for the finite model, an ultimately periodic set otherwise.
struct xset {
  space_model space;
  std::uint32_t mask = 0;  // finite model
  upset up;                // countable models

  static xset finite(const space_model& s, std::uint32_t m) {
    std::uint32_t full = s.n >= 32 ? ~0u : (1u << s.n) - 1;
    return {s, m & full, {}};
  }
  static xset countable(const space_model& s, upset u) {
    return {s, 0, std::move(u)};
  }

  bool is_empty() const {
    return space.is_finite_model() ? mask == 0 : up.is_empty();
  }
  bool is_all() const { return complement().is_empty(); }
  xset complement() const {
    if (space.is_finite_model())
      return finite(space, ~mask);
    upset c = up.complement();
    if (!space.has_inf_point()) c.at_inf = false;
    return countable(space, std::move(c));
  }
  xset unite(const xset& o) const {
    if (space.is_finite_model()) return finite(space, mask | o.mask);
    return countable(space, up.unite(o.up));
  }
  xset intersect(const xset& o) const {
    if (space.is_finite_model()) return finite(space, mask & o.mask);
    return countable(space, up.intersect(o.up));
  }
  bool disjoint_with(const xset& o) const { return intersect(o).is_empty(); }
  bool subset_of(const xset& o) const {
    return intersect(o) == (space.is_finite_model()
                                ? finite(space, mask)
                                : countable(space, up));
  }
  // Finite as a subset of the model's point set; the ∞ point only ever
  // contributes one element, so it does not affect finiteness.
  bool finite_in_model() const {
    return space.is_finite_model() || up.is_finite();
  }

  bool operator==(const xset&) const = default;
};

// A finite set of points, used as the removed set F. ∞ is tracked by a
// flag, as everywhere.
struct finite_pts {
  std::vector<std::size_t> points;
  bool inf = false;

  bool contains(std::size_t i) const {
    return std::find(points.begin(), points.end(), i) != points.end();
  }
  bool empty() const { return points.empty() && !inf; }

  upset as_upset() const {
    upset s = upset::from_points(points);
    s.at_inf = inf;
    return s;
  }
  std::uint32_t as_mask() const {
    std::uint32_t m = 0;
    for (auto p : points) m |= 1u << p;
    return m;
  }
};

// Decides whether A∖F is clopen in the subspace X∖F.
inline bool is_clopen_in_subspace(const space_model& space, const xset& A,
                                  const finite_pts& F) {
  if (A.space != space)
    throw error(errc::not_representable, "set is over a different model");
  switch (space.kind) {
    case space_kind::finite:
    case space_kind::discrete_n:
      return true;  // discrete subspaces
    case space_kind::conv_seq: {
      if (F.inf) return true;  // remaining points are all isolated
      // X∖F is again a convergent sequence; its clopen sets are the
      // finite sets missing ∞ and the cofinite sets containing ∞.
      upset rest = A.up.minus(F.as_upset());
      if (rest.is_finite() && !rest.at_inf) return true;
      upset corest = A.up.complement().minus(F.as_upset());
      return corest.is_finite() && !corest.at_inf;
    }
    case space_kind::cofinite_n: {
      // A cofinite space has no proper nonempty clopen subset.
      upset f = F.as_upset();
      upset rest = A.up.minus(f);
      if (rest.is_empty()) return true;
      upset whole_rest = upset::all().minus(f);
      return whole_rest.subset_of(rest);
    }
  }
  return false;
}

// Total decision of "∃ finite F with A∖F clopen in X∖F".
inline bool eventually_clopen(const space_model& space, const xset& A) {
  switch (space.kind) {
    case space_kind::finite:
    case space_kind::discrete_n:
    case space_kind::conv_seq:
      return true;  // F = ∅ resp. F = {∞} always works
    case space_kind::cofinite_n:
      return A.up.is_finite() || A.up.is_cofinite_in_n();
  }
  return false;
}

}  // namespace fcx
