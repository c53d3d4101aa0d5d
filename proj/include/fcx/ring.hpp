#pragma once

#include <algorithm>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "fcx/errors.hpp"
#include "fcx/periodic.hpp"
#include "fcx/rational.hpp"
#include "fcx/space.hpp"
#include "fcx/upset.hpp"

namespace fcx {

// An exact-rational function on a space model: a dense value vector on
// Finite(n), an ultimately periodic sequence (plus a value at ∞ on the
// convergent-sequence model) on the countable models. Always kept in
// canonical form, so operator== is extensional equality.
struct ring_elem {
  space_model space;
  std::vector<rat> values;  // finite model only
  up_seq<rat> seq;          // countable models only
  rat inf_value = rat(0);   // conv_seq only

  static ring_elem finite(const space_model& s, std::vector<rat> vals) {
    if (!s.is_finite_model() || static_cast<int>(vals.size()) != s.n)
      throw error(errc::model_mismatch, "value vector does not fit the model");
    ring_elem f;
    f.space = s;
    f.values = std::move(vals);
    return f;
  }
  static ring_elem countable(const space_model& s, up_seq<rat> seq,
                             rat inf = rat(0)) {
    if (s.is_finite_model())
      throw error(errc::model_mismatch, "sequence element on a finite model");
    ring_elem f;
    f.space = s;
    f.seq = std::move(seq);
    if (s.has_inf_point()) f.inf_value = inf;
    return f;
  }
  static ring_elem constant(const space_model& s, const rat& c) {
    if (s.is_finite_model())
      return finite(s, std::vector<rat>(static_cast<std::size_t>(s.n), c));
    return countable(s, up_seq<rat>::constant(c), c);
  }
  // χ of a single natural-number point.
  static ring_elem chi(const space_model& s, std::size_t x) {
    if (s.is_finite_model()) {
      std::vector<rat> v(static_cast<std::size_t>(s.n), rat(0));
      v.at(x) = rat(1);
      return finite(s, std::move(v));
    }
    std::vector<rat> pre(x + 1, rat(0));
    pre[x] = rat(1);
    return countable(s, up_seq<rat>(std::move(pre), {rat(0)}), rat(0));
  }
  static ring_elem chi_inf(const space_model& s) {
    if (!s.has_inf_point())
      throw error(errc::model_mismatch, "model has no point at infinity");
    return countable(s, up_seq<rat>::constant(rat(0)), rat(1));
  }
  // Indicator of a representable set.
  static ring_elem indicator(const space_model& s, const xset& a) {
    if (s.is_finite_model()) {
      std::vector<rat> v(static_cast<std::size_t>(s.n), rat(0));
      for (int i = 0; i < s.n; ++i)
        if (a.mask >> i & 1) v[i] = rat(1);
      return finite(s, std::move(v));
    }
    auto seq = a.up.bits.map([](std::uint8_t b) { return rat(b ? 1 : 0); });
    return countable(s, std::move(seq), rat(a.up.at_inf ? 1 : 0));
  }

  const rat& at(std::size_t i) const {
    return space.is_finite_model() ? values.at(i) : seq.at(i);
  }
  const rat& at_inf() const { return inf_value; }

  bool is_zero() const { return *this == constant(space, rat(0)); }

  // Distinct values taken (∞ included); always finite by construction.
  std::set<rat> value_set() const {
    std::set<rat> vs;
    if (space.is_finite_model()) {
      vs.insert(values.begin(), values.end());
    } else {
      vs.insert(seq.transient.begin(), seq.transient.end());
      vs.insert(seq.block.begin(), seq.block.end());
      if (space.has_inf_point()) vs.insert(inf_value);
    }
    return vs;
  }

  bool operator==(const ring_elem&) const = default;
};

namespace detail {
template <typename F>
ring_elem pointwise(const ring_elem& a, const ring_elem& b, F&& f) {
  if (a.space != b.space)
    throw error(errc::model_mismatch, "operands over different models");
  if (a.space.is_finite_model()) {
    std::vector<rat> v(a.values.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = f(a.values[i], b.values[i]);
    return ring_elem::finite(a.space, std::move(v));
  }
  // Only evaluate at ∞ when the model has that point; other countable
  // models carry a dormant inf_value of 0 that must not be consulted.
  rat inf = a.space.has_inf_point() ? f(a.inf_value, b.inf_value) : rat(0);
  return ring_elem::countable(a.space, zip_up(a.seq, b.seq, f), inf);
}
template <typename F>
ring_elem pointwise1(const ring_elem& a, F&& f) {
  if (a.space.is_finite_model()) {
    std::vector<rat> v(a.values.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = f(a.values[i]);
    return ring_elem::finite(a.space, std::move(v));
  }
  rat inf = a.space.has_inf_point() ? f(a.inf_value) : rat(0);
  return ring_elem::countable(a.space, a.seq.map(f), inf);
}
}  // namespace detail

inline ring_elem operator+(const ring_elem& a, const ring_elem& b) {
  return detail::pointwise(a, b, [](const rat& x, const rat& y) { return x + y; });
}
inline ring_elem operator-(const ring_elem& a) {
  return detail::pointwise1(a, [](const rat& x) { return -x; });
}
inline ring_elem operator-(const ring_elem& a, const ring_elem& b) {
  return a + (-b);
}
inline ring_elem operator*(const ring_elem& a, const ring_elem& b) {
  return detail::pointwise(a, b, [](const rat& x, const rat& y) { return x * y; });
}
inline ring_elem operator*(const rat& c, const ring_elem& a) {
  return detail::pointwise1(a, [&](const rat& x) { return c * x; });
}
inline ring_elem abs(const ring_elem& a) {
  return detail::pointwise1(a, [](const rat& x) { return rat_abs(x); });
}
inline ring_elem join(const ring_elem& a, const ring_elem& b) {
  return detail::pointwise(a, b,
                           [](const rat& x, const rat& y) { return std::max(x, y); });
}
inline ring_elem meet(const ring_elem& a, const ring_elem& b) {
  return detail::pointwise(a, b,
                           [](const rat& x, const rat& y) { return std::min(x, y); });
}
// Pointwise quotient; defined only when b never vanishes on supp(b)∪... —
// caller guarantees b(x) ≠ 0 wherever consulted. Throws on a vanishing
// denominator.
inline ring_elem pointwise_div(const ring_elem& a, const ring_elem& b) {
  return detail::pointwise(a, b, [](const rat& x, const rat& y) {
    if (y == rat(0))
      throw error(errc::zero_sets_intersect, "denominator vanishes");
    return x / y;
  });
}

enum class ring_op { add, mul, neg, scalar_mul, join, meet, abs };

inline ring_elem ring_arith(ring_op op, const ring_elem& f,
                            const ring_elem* g = nullptr,
                            const rat* c = nullptr) {
  switch (op) {
    case ring_op::add: return f + *g;
    case ring_op::mul: return f * *g;
    case ring_op::neg: return -f;
    case ring_op::scalar_mul: return *c * f;
    case ring_op::join: return join(f, *g);
    case ring_op::meet: return meet(f, *g);
    case ring_op::abs: return abs(f);
  }
  throw error(errc::bad_kind, "unknown ring op");
}

inline xset zero_set(const ring_elem& f) {
  if (f.space.is_finite_model()) {
    std::uint32_t m = 0;
    for (std::size_t i = 0; i < f.values.size(); ++i)
      if (f.values[i] == rat(0)) m |= 1u << i;
    return xset::finite(f.space, m);
  }
  upset z;
  z.bits = f.seq.map([](const rat& v) {
    return static_cast<std::uint8_t>(v == rat(0) ? 1 : 0);
  });
  z.at_inf = f.space.has_inf_point() && f.inf_value == rat(0);
  return xset::countable(f.space, std::move(z));
}

inline xset cozero_set(const ring_elem& f) { return zero_set(f).complement(); }

// Discontinuity set under the model's closed-form rules:
//  - finite and discrete models are discrete, so ∅;
//  - on the convergent sequence only ∞ can fail, and it fails exactly
//    when the tail value differs from f(∞) or the tail does not settle;
//  - on cofinite ℕ, f is continuous at x iff f is eventually constant
//    with that constant value at x, so either the block is constant c
//    and the discontinuity set is the finite set {f ≠ c}, or every
//    point is bad.
struct disc_result {
  bool infinite = false;
  finite_pts pts;
};

inline disc_result discontinuity_set(const ring_elem& f) {
  disc_result r;
  switch (f.space.kind) {
    case space_kind::finite:
    case space_kind::discrete_n:
      return r;
    case space_kind::conv_seq: {
      if (f.seq.eventually_constant() && f.seq.block.front() == f.inf_value)
        return r;
      r.pts.inf = true;
      return r;
    }
    case space_kind::cofinite_n: {
      if (!f.seq.eventually_constant()) {
        r.infinite = true;
        return r;
      }
      const rat c = f.seq.block.front();
      for (std::size_t i = 0; i < f.seq.transient_len(); ++i)
        if (f.seq.transient[i] != c) r.pts.points.push_back(i);
      return r;
    }
  }
  return r;
}

enum class ring_kind { fcx, cc };

struct membership_verdict {
  bool member = false;
  disc_result discontinuities;
  std::string reason;
};

inline membership_verdict membership(const ring_elem& f, ring_kind which) {
  membership_verdict v;
  v.discontinuities = discontinuity_set(f);
  if (which == ring_kind::fcx) {
    v.member = !v.discontinuities.infinite;
    v.reason = v.member ? "finite discontinuity set, countable range"
                        : "infinite discontinuity set";
  } else {
    v.member = !v.discontinuities.infinite && v.discontinuities.pts.empty();
    v.reason = v.member ? "continuous, countable range" : "not continuous";
  }
  return v;
}

inline bool is_member(const ring_elem& f) {
  return membership(f, ring_kind::fcx).member;
}

enum class elem_class { zero, unit, zero_divisor };

inline elem_class classify(const ring_elem& f) {
  if (f.is_zero()) return elem_class::zero;
  return zero_set(f).is_empty() ? elem_class::unit : elem_class::zero_divisor;
}

inline ring_elem inverse(const ring_elem& f) {
  if (classify(f) != elem_class::unit)
    throw error(errc::not_unit, "element has a nonempty zero set");
  return pointwise_div(ring_elem::constant(f.space, rat(1)), f);
}

// An annihilating witness for a zero divisor: χ of a point of Z(f).
inline ring_elem zero_divisor_witness(const ring_elem& f) {
  xset z = zero_set(f);
  if (f.space.is_finite_model()) {
    for (int i = 0; i < f.space.n; ++i)
      if (z.mask >> i & 1) return ring_elem::chi(f.space, i);
  } else {
    const std::size_t bound = z.up.bits.transient_len() + z.up.bits.period();
    for (std::size_t i = 0; i < bound; ++i)
      if (z.up.member(i)) return ring_elem::chi(f.space, i);
    if (f.space.has_inf_point() && z.up.at_inf)
      return ring_elem::chi_inf(f.space);
  }
  throw error(errc::bad_kind, "not a zero divisor");
}

// Pointwise 1/f off Z(f), 0 on Z(f). Satisfies f²·q = f; membership of
// the result is model-dependent and checked by callers that need it.
inline ring_elem quasi_inverse(const ring_elem& f) {
  return detail::pointwise1(
      f, [](const rat& x) { return x == rat(0) ? rat(0) : rat(1) / x; });
}

enum class level_dir { geq, leq };

// A member whose zero set is the level set {f ≥ r} (resp. {f ≤ r}).
inline ring_elem level_set_witness(const ring_elem& f, const rat& r,
                                   level_dir dir) {
  ring_elem shifted = f - ring_elem::constant(f.space, r);
  ring_elem zero = ring_elem::constant(f.space, rat(0));
  return dir == level_dir::geq ? meet(shifted, zero) : join(shifted, zero);
}

}  // namespace fcx
