#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "fcx/errors.hpp"
#include "fcx/ring.hpp"

namespace fcx {

// Over Finite(n) the ring is a finite product of fields and every ideal
// is the vanishing ideal M_A = {f : A ⊆ Z(f)} of exactly one A ⊆ X.
// Ideals are therefore stored as their vanishing set; A = ∅ is the
// improper (whole-ring) marker.
struct ideal_desc {
  std::uint32_t vanishing = 0;
  int n = 0;

  bool proper() const { return vanishing != 0; }
  std::uint32_t full() const { return (1u << n) - 1; }
  bool is_zero_ideal() const { return vanishing == full(); }

  bool contains(const ring_elem& f) const {
    std::uint32_t z = zero_set(f).mask;
    return (vanishing & ~z) == 0;
  }
  // M_A ⊆ M_B iff B ⊆ A.
  bool subset_of(const ideal_desc& o) const {
    return (o.vanishing & ~vanishing) == 0;
  }
  bool operator==(const ideal_desc&) const = default;
};

// The principal (Z_c)_F-filter {Z ⊆ X : base ⊆ Z}.
struct filter_desc {
  std::uint32_t base = 0;
  int n = 0;
  bool operator==(const filter_desc&) const = default;
};

inline void check_small(int n, int limit = 5) {
  if (n < 1 || n > limit) throw error(errc::too_large, "n out of range");
}

inline space_model finite_space(int n) { return make_space(space_kind::finite, n); }

// All sign patterns {-1,0,1}^n as ring elements. The behaviour of every
// zero-set/primality predicate depends only on zero sets and signs, so
// this basis is exhaustive for them.
inline std::vector<ring_elem> sign_basis(int n) {
  check_small(n);
  space_model s = finite_space(n);
  std::vector<ring_elem> out;
  std::size_t total = 1;
  for (int i = 0; i < n; ++i) total *= 3;
  for (std::size_t code = 0; code < total; ++code) {
    std::vector<rat> v(n);
    std::size_t c = code;
    for (int i = 0; i < n; ++i) {
      v[i] = rat(static_cast<int>(c % 3) - 1);
      c /= 3;
    }
    out.push_back(ring_elem::finite(s, std::move(v)));
  }
  return out;
}

inline ideal_desc ideal_from_generators(const std::vector<ring_elem>& fns,
                                        int n) {
  if (fns.empty()) throw error(errc::empty_generator_list, "no generators");
  std::uint32_t a = (1u << n) - 1;
  for (const auto& f : fns) a &= zero_set(f).mask;
  return {a, n};
}

inline filter_desc filter_of(const ideal_desc& I) {
  if (!I.proper()) throw error(errc::improper_ideal, "Z[] of improper ideal");
  return {I.vanishing, I.n};  // ∩Z[M_A] = A
}

inline ideal_desc ideal_of(const filter_desc& F) { return {F.base, F.n}; }

struct filter_enumeration {
  int n = 0;
  std::size_t filter_count = 0;
  std::size_t ultrafilter_count = 0;
  // (maximal ideal vanishing set, ultrafilter base) pairs of the
  // bijection M ↦ Z[M].
  std::vector<std::pair<std::uint32_t, std::uint32_t>> bijection;
};

inline filter_enumeration enumerate_filters_and_ideals(int n) {
  check_small(n);
  filter_enumeration e;
  e.n = n;
  const std::uint32_t full = (1u << n) - 1;
  for (std::uint32_t a = 1; a <= full; ++a) {
    ++e.filter_count;
    bool maximal = true;  // filter maximal iff its ideal is
    for (std::uint32_t b = 1; b <= full; ++b)
      if (b != a && (b & ~a) == 0) maximal = false;
    if (maximal) {
      ++e.ultrafilter_count;
      e.bijection.emplace_back(a, filter_of({a, n}).base);
    }
  }
  return e;
}

struct ideal_predicate_table {
  bool fixed = false;
  bool zc_ideal = false;
  bool prime = false;
  bool maximal = false;
  bool essential = false;
  bool free_ideal = false;
  bool minimal = false;
};

inline ideal_desc annihilator(const ideal_desc& I) {
  return {static_cast<std::uint32_t>(~I.vanishing) & I.full(), I.n};
}

inline ideal_desc annihilator(const std::vector<ring_elem>& S, int n) {
  if (S.empty()) throw error(errc::empty_generator_list, "empty set");
  // Ann(S) = {g : ∪COZ(S) ⊆ Z(g)} = M_{∪COZ(S)}.
  std::uint32_t coz = 0;
  for (const auto& f : S) coz |= cozero_set(f).mask;
  return {coz, n};
}

inline ideal_desc sum_ideals(const ideal_desc& I, const ideal_desc& J) {
  return {I.vanishing & J.vanishing, I.n};  // improper marker when ∅
}

struct prime_check_table {
  bool is_prime = false;
  bool contains_prime = false;
  bool product_zero_condition = false;
  bool sign_constancy = false;

  bool all_agree() const {
    return is_prime == contains_prime && is_prime == product_zero_condition &&
           is_prime == sign_constancy;
  }
};

inline prime_check_table prime_equivalents_check(const ideal_desc& I) {
  const int n = I.n;
  prime_check_table t;
  auto basis = sign_basis(n);

  // (i) primality over the sign basis: fg ∈ I ⇒ f ∈ I or g ∈ I.
  t.is_prime = true;
  for (const auto& f : basis)
    for (const auto& g : basis) {
      if (I.contains(f * g) && !I.contains(f) && !I.contains(g)) {
        t.is_prime = false;
        goto done_i;
      }
    }
done_i:;

  // (ii) contains a prime ideal: scan all proper ideals, test their
  // primality the same way, check containment.
  const std::uint32_t full = I.full();
  for (std::uint32_t b = 1; b <= full && !t.contains_prime; ++b) {
    ideal_desc P{b, n};
    bool p_prime = true;
    for (const auto& f : basis) {
      for (const auto& g : basis)
        if (P.contains(f * g) && !P.contains(f) && !P.contains(g)) {
          p_prime = false;
          break;
        }
      if (!p_prime) break;
    }
    if (p_prime && P.subset_of(I)) t.contains_prime = true;
  }

  // (iii) fg = 0 ⇒ f ∈ I or g ∈ I.
  t.product_zero_condition = true;
  for (const auto& f : basis)
    for (const auto& g : basis) {
      if ((f * g).is_zero() && !I.contains(f) && !I.contains(g)) {
        t.product_zero_condition = false;
        goto done_iii;
      }
    }
done_iii:;

  // (iv) every f has some Z ∈ Z[I] (i.e. Z ⊇ A) on which it does not
  // change sign.
  t.sign_constancy = true;
  for (const auto& f : basis) {
    bool found = false;
    for (std::uint32_t z = 0; z <= full && !found; ++z) {
      if ((I.vanishing & ~z) != 0) continue;  // need A ⊆ Z
      bool pos = false, neg = false;
      for (int i = 0; i < n; ++i)
        if (z >> i & 1) {
          int s = rat_sign(f.values[i]);
          pos |= s > 0;
          neg |= s < 0;
        }
      if (!(pos && neg)) found = true;
    }
    if (!found) {
      t.sign_constancy = false;
      break;
    }
  }
  return t;
}

inline ideal_predicate_table ideal_predicates(const ideal_desc& I) {
  if (!I.proper()) throw error(errc::improper_ideal, "predicates of improper");
  const int n = I.n;
  ideal_predicate_table t;
  t.fixed = I.vanishing != 0;
  t.free_ideal = !t.fixed;

  // (Z_c)_F-ideal: Z(f) ⊆ Z(g), f ∈ I ⇒ g ∈ I, over the sign basis.
  t.zc_ideal = true;
  auto basis = sign_basis(n);
  for (const auto& f : basis) {
    if (!I.contains(f)) continue;
    std::uint32_t zf = zero_set(f).mask;
    for (const auto& g : basis) {
      std::uint32_t zg = zero_set(g).mask;
      if ((zf & ~zg) == 0 && !I.contains(g)) t.zc_ideal = false;
    }
  }

  t.prime = prime_equivalents_check(I).is_prime;

  const std::uint32_t full = I.full();
  t.maximal = true;
  for (std::uint32_t b = 1; b <= full; ++b)
    if (b != I.vanishing && (b & ~I.vanishing) == 0) t.maximal = false;

  t.essential = annihilator(I).is_zero_ideal();

  // Minimal: no nonzero proper ideal strictly inside.
  t.minimal = !I.is_zero_ideal();
  for (std::uint32_t b = 1; b < full; ++b) {
    ideal_desc J{b, n};
    if (J != I && J.subset_of(I)) t.minimal = false;
  }
  return t;
}

// All functions vanishing off a finite set; over a finite model that is
// everything.
inline bool socle_membership(const ring_elem& f) {
  return cozero_set(f).finite_in_model();
}

inline ring_elem idempotent_generator(const ideal_desc& M) {
  if (!M.proper()) throw error(errc::improper_ideal, "improper ideal");
  if (!ideal_predicates(M).maximal)
    throw error(errc::not_maximal, "ideal is not maximal");
  int x = 0;
  while (!(M.vanishing >> x & 1)) ++x;
  space_model s = finite_space(M.n);
  return ring_elem::constant(s, rat(1)) - ring_elem::chi(s, x);
}

struct j1_verdict {
  bool member = false;
  std::optional<ring_elem> refuting_g;
};

// J₁ = {f : Z(1-fg) finite for all g}. With COZ(f) finite, Z(1-fg) ⊆
// COZ(f) for every g. With COZ(f) infinite, g = quasi-inverse of f
// gives fg = indicator of COZ(f), so Z(1-fg) = COZ(f) is infinite —
// the universal quantifier is discharged exactly, not sampled.
inline j1_verdict j1_membership(const ring_elem& f) {
  j1_verdict v;
  if (cozero_set(f).finite_in_model()) {
    v.member = true;
    return v;
  }
  v.refuting_g = quasi_inverse(f);
  return v;
}

struct structure_space_report_t {
  int n = 0;
  std::vector<std::uint32_t> max_ideals;  // vanishing sets, all singletons
  // closure_table[s] = hull-kernel closure of the point subset s of Max.
  std::vector<std::uint32_t> closure_table;
  bool discrete = false;
  // gk_table[p] = vanishing set of M^p = {f : p ∈ cl Z(f)}.
  std::vector<std::uint32_t> gk_table;
};

inline structure_space_report_t structure_space_report(int n) {
  check_small(n);
  structure_space_report_t r;
  r.n = n;
  const std::uint32_t full = (1u << n) - 1;
  for (std::uint32_t a = 1; a <= full; ++a)
    if (ideal_predicates({a, n}).maximal) r.max_ideals.push_back(a);

  // Hull-kernel closure of S ⊆ Max: the maximal ideals containing ∩S.
  r.discrete = true;
  r.closure_table.resize(1u << r.max_ideals.size());
  for (std::uint32_t s = 0; s < r.closure_table.size(); ++s) {
    std::uint32_t kernel = 0;  // vanishing set of ∩S (= M of the union)
    for (std::size_t i = 0; i < r.max_ideals.size(); ++i)
      if (s >> i & 1) kernel |= r.max_ideals[i];
    std::uint32_t cl = 0;
    for (std::size_t i = 0; i < r.max_ideals.size(); ++i) {
      ideal_desc K{kernel, n}, M{r.max_ideals[i], n};
      if (s != 0 && K.subset_of(M)) cl |= 1u << i;
    }
    r.closure_table[s] = cl;
    if (cl != s) r.discrete = false;
  }

  // Gelfand-Kolmogoroff at finite scale: closures are identities, so
  // M^p = {f : p ∈ Z(f)} = M_{p}.
  for (int p = 0; p < n; ++p) r.gk_table.push_back(1u << p);
  return r;
}

}  // namespace fcx
