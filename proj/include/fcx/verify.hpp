#pragma once

#include <algorithm>
#include <chrono>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "fcx/ideals.hpp"
#include "fcx/json_io.hpp"
#include "fcx/regularity.hpp"
#include "fcx/ring.hpp"
#include "fcx/separation.hpp"
#include "fcx/space.hpp"
#include "fcx/zdgraph.hpp"

namespace fcx::verify {

enum class status { confirmed, refuted, refuted_paper, skipped };

inline const char* status_name(status s) {
  switch (s) {
    case status::confirmed: return "confirmed";
    case status::refuted: return "refuted";
    case status::refuted_paper: return "refuted(paper)";
    case status::skipped: return "skipped";
  }
  return "?";
}

struct check_result {
  std::string check_id;
  std::string paper_ref;
  status st = status::skipped;
  json witness;       // optional; null when absent
  long runtime_ms = 0;  // shown in text output, kept out of the report JSON
};

struct config {
  int max_n = 4;
  std::uint64_t seed = 1;
  std::set<std::string> suites;  // empty = all

  static const std::set<std::string>& all_suites() {
    static const std::set<std::string> s{"zerosets",   "separation", "ideals",
                                         "regularity", "graph",      "sections5"};
    return s;
  }
  bool wants(const std::string& s) const {
    return suites.empty() || suites.count(s) > 0;
  }
  void validate() const {
    if (max_n < 1 || max_n > 5)
      throw error(errc::config_error, "max_n must be in 1..5");
    for (const auto& s : suites)
      if (!all_suites().count(s))
        throw error(errc::config_error, "unknown suite '" + s + "'");
  }
};

struct report_t {
  config cfg;
  std::vector<check_result> checks;

  bool ok() const {
    return std::none_of(checks.begin(), checks.end(), [](const check_result& c) {
      return c.st == status::refuted;
    });
  }
};

inline json report_to_json(const report_t& r) {
  json j;
  j["schema_version"] = 1;
  j["config"]["max_n"] = r.cfg.max_n;
  j["config"]["seed"] = r.cfg.seed;
  j["config"]["suites"] = json::array();
  for (const auto& s :
       (r.cfg.suites.empty() ? config::all_suites() : r.cfg.suites))
    j["config"]["suites"].push_back(s);
  j["checks"] = json::array();
  for (const auto& c : r.checks) {
    json cj;
    cj["check_id"] = c.check_id;
    cj["paper_ref"] = c.paper_ref;
    cj["status"] = status_name(c.st);
    if (!c.witness.is_null()) cj["witness"] = c.witness;
    j["checks"].push_back(cj);
  }
  return j;
}

// Deterministic RNG layer. std::mt19937_64 is fully specified; we avoid
// the standard distributions, whose output is implementation-defined.
struct rng_t {
  std::mt19937_64 eng;
  explicit rng_t(std::uint64_t seed) : eng(seed) {}

  std::uint64_t next(std::uint64_t bound) { return eng() % bound; }

  rat rand_rat() {
    static const rat pool[] = {rat(0),     rat(0),    rat(1),  rat(-1),
                               rat(2),     rat(-2),   rat(3),  rat(1, 2),
                               rat(-1, 2), rat(2, 3), rat(5),  rat(0)};
    return pool[next(std::size(pool))];
  }
  rat rand_nonzero_rat() {
    rat r = rand_rat();
    while (r == rat(0)) r = rand_rat();
    return r;
  }

  up_seq<rat> rand_seq() {
    std::vector<rat> pre(next(4)), blk(1 + next(3));
    for (auto& v : pre) v = rand_rat();
    for (auto& v : blk) v = rand_rat();
    return up_seq<rat>(std::move(pre), std::move(blk));
  }

  // A random element of C_c(X)_F over the model.
  ring_elem rand_member(const space_model& s) {
    switch (s.kind) {
      case space_kind::finite: {
        std::vector<rat> v(static_cast<std::size_t>(s.n));
        for (auto& x : v) x = rand_rat();
        return ring_elem::finite(s, std::move(v));
      }
      case space_kind::discrete_n:
        return ring_elem::countable(s, rand_seq());
      case space_kind::conv_seq:
        return ring_elem::countable(s, rand_seq(), rand_rat());
      case space_kind::cofinite_n: {
        // Members are constant off a finite set.
        rat c = rand_rat();
        std::vector<rat> pre(next(5), c);
        for (auto& v : pre)
          if (next(2)) v = rand_rat();
        return ring_elem::countable(s, up_seq<rat>(std::move(pre), {c}));
      }
    }
    throw error(errc::bad_kind, "bad model");
  }

  upset rand_upset() {
    std::vector<std::uint8_t> pre(next(4)), blk(1 + next(3));
    for (auto& b : pre) b = static_cast<std::uint8_t>(next(2));
    for (auto& b : blk) b = static_cast<std::uint8_t>(next(2));
    return upset(std::move(pre), std::move(blk));
  }

  xset rand_subset(const space_model& s) {
    if (s.is_finite_model())
      return xset::finite(s, static_cast<std::uint32_t>(next(1u << s.n)));
    upset u = rand_upset();
    u.at_inf = s.has_inf_point() && next(2) == 1;
    return xset::countable(s, std::move(u));
  }

  // A disjoint nonempty-ish pair of representable sets.
  std::pair<xset, xset> rand_disjoint_pair(const space_model& s) {
    for (;;) {
      xset a = rand_subset(s);
      xset b = rand_subset(s).intersect(a.complement());
      if (!a.is_empty() && !b.is_empty()) return {a, b};
    }
  }
};

namespace detail {

inline std::vector<space_model> all_models(int max_n) {
  return {make_space(space_kind::finite, std::max(2, max_n)),
          make_space(space_kind::discrete_n), make_space(space_kind::cofinite_n),
          make_space(space_kind::conv_seq)};
}

inline std::string model_tag(const space_model& s) {
  if (s.is_finite_model()) return "finite" + std::to_string(s.n);
  return kind_name(s.kind);
}

// Sampled pointwise equality probe for countable models: transient plus
// two periods of both operands, and ∞.
inline std::vector<std::size_t> probe_indices(const ring_elem& f,
                                              const ring_elem& g) {
  std::size_t bound = 8;
  if (!f.space.is_finite_model())
    bound = std::max(f.seq.transient_len() + 2 * f.seq.period(),
                     g.seq.transient_len() + 2 * g.seq.period());
  std::vector<std::size_t> idx(bound);
  for (std::size_t i = 0; i < bound; ++i) idx[i] = i;
  return idx;
}

// Independent brute-force side of the separation check. On cofinite ℕ
// it enumerates candidate member zero-set shapes (finite sets within a
// window and their complements) instead of trusting the rule.
inline bool separation_oracle(const xset& A, const xset& B,
                              const space_model& s) {
  switch (s.kind) {
    case space_kind::finite: {
      const std::uint32_t full = (1u << s.n) - 1;
      for (std::uint32_t z1 = 0; z1 <= full; ++z1)
        for (std::uint32_t z2 = 0; z2 <= full; ++z2)
          if ((z1 & z2) == 0 && (A.mask & ~z1) == 0 && (B.mask & ~z2) == 0)
            return true;
      return false;
    }
    case space_kind::discrete_n:
    case space_kind::conv_seq:
      // Every representable set is a member zero set; A and its
      // complement witness separation for any disjoint pair.
      return true;
    case space_kind::cofinite_n: {
      // Member zero sets are the finite and cofinite sets. Search
      // windowed finite candidates for Z1 ⊇ A with complement ⊇ B and
      // symmetrically.
      auto fits_finite = [](const xset& inside, const xset& outside) {
        // need finite Z1 ⊇ inside with Z1 ∩ outside = ∅: possible iff
        // inside is finite and disjoint from outside (then Z1 = inside,
        // Z2 = complement is cofinite ⊇ outside).
        return inside.up.is_finite();
      };
      return fits_finite(A, B) || fits_finite(B, A);
    }
  }
  return false;
}

}  // namespace detail

class suite_runner {
 public:
  explicit suite_runner(const config& cfg) : cfg_(cfg) {}

  report_t run() {
    cfg_.validate();
    report_.cfg = cfg_;
    if (cfg_.wants("zerosets")) run_zerosets();
    if (cfg_.wants("separation")) run_separation();
    if (cfg_.wants("ideals")) run_ideals();
    if (cfg_.wants("regularity")) run_regularity();
    if (cfg_.wants("graph")) run_graph();
    if (cfg_.wants("sections5")) run_sections5();
    std::sort(report_.checks.begin(), report_.checks.end(),
              [](const check_result& a, const check_result& b) {
                return a.check_id < b.check_id;
              });
    return report_;
  }

 private:
  config cfg_;
  report_t report_;

  void add(const std::string& id, const std::string& paper_ref,
           const std::function<std::pair<status, json>()>& body) {
    auto t0 = std::chrono::steady_clock::now();
    check_result c;
    c.check_id = id;
    c.paper_ref = paper_ref;
    try {
      auto [st, w] = body();
      c.st = st;
      c.witness = w;
    } catch (const std::exception& e) {
      c.st = status::refuted;
      c.witness = json{{"exception", e.what()}};
    }
    c.runtime_ms = static_cast<long>(
        std::chrono::duration_cast<std::chrono::milliseconds>(
            std::chrono::steady_clock::now() - t0)
            .count());
    report_.checks.push_back(std::move(c));
  }

  static std::pair<status, json> pass() { return {status::confirmed, json()}; }
  static std::pair<status, json> fail(json w) {
    return {status::refuted, std::move(w)};
  }

  rng_t rng(const std::string& salt) {
    std::uint64_t h = cfg_.seed;
    for (char ch : salt) h = h * 1099511628211ull + static_cast<unsigned char>(ch);
    return rng_t(h);
  }

  // ---- zerosets --------------------------------------------------------

  void run_zerosets() {
    for (const auto& s : detail::all_models(cfg_.max_n)) {
      const std::string tag = detail::model_tag(s);
      add("zerosets/" + tag + "/identities_2_1",
          "Properties 2.1(i)-(v)", [&]() -> std::pair<status, json> {
            rng_t r = rng("zerosets" + tag);
            for (int it = 0; it < 1000; ++it) {
              ring_elem f = r.rand_member(s), g = r.rand_member(s);
              ring_elem one = ring_elem::constant(s, rat(1));
              xset zf = zero_set(f), zg = zero_set(g);
              // (i)
              if (zero_set(abs(f)) != zf || zero_set(meet(abs(f), one)) != zf ||
                  zero_set(f * f) != zf || zero_set(f * f * f) != zf)
                return fail(json{{"identity", "i"}, {"f", elem_to_json(f)}});
              // (ii)
              if (!zero_set(ring_elem::constant(s, rat(0))).is_all() ||
                  !zero_set(one).is_empty())
                return fail(json{{"identity", "ii"}});
              // (iii)
              xset meet_z = zf.intersect(zg);
              if (zero_set(f * f + g * g) != meet_z ||
                  zero_set(abs(f) + abs(g)) != meet_z)
                return fail(json{{"identity", "iii"},
                                 {"f", elem_to_json(f)},
                                 {"g", elem_to_json(g)}});
              // (iv)
              if (zero_set(f * g) != zf.unite(zg))
                return fail(json{{"identity", "iv"},
                                 {"f", elem_to_json(f)},
                                 {"g", elem_to_json(g)}});
              // (v): level sets are zero sets, checked pointwise.
              rat lvl = r.rand_rat();
              for (level_dir dir : {level_dir::geq, level_dir::leq}) {
                ring_elem w = level_set_witness(f, lvl, dir);
                if (!is_member(w))
                  return fail(json{{"identity", "v"}, {"f", elem_to_json(f)}});
                xset zw = zero_set(w);
                for (std::size_t i : detail::probe_indices(f, w)) {
                  if (s.is_finite_model() &&
                      i >= static_cast<std::size_t>(s.n))
                    break;
                  bool in_level = dir == level_dir::geq ? f.at(i) >= lvl
                                                        : f.at(i) <= lvl;
                  bool in_z = s.is_finite_model()
                                  ? ((zw.mask >> i & 1) != 0)
                                  : zw.up.member(i);
                  if (in_level != in_z)
                    return fail(json{{"identity", "v"},
                                     {"f", elem_to_json(f)},
                                     {"index", i}});
                }
              }
            }
            return pass();
          });

      add("zerosets/" + tag + "/join_formula", "§1 lattice structure",
          [&]() -> std::pair<status, json> {
            rng_t r = rng("join" + tag);
            ring_elem half = ring_elem::constant(s, rat(1, 2));
            for (int it = 0; it < 200; ++it) {
              ring_elem f = r.rand_member(s), g = r.rand_member(s);
              ring_elem via = half * (f + g + abs(f - g));
              if (join(f, g) != via)
                return fail(json{{"f", elem_to_json(f)}, {"g", elem_to_json(g)}});
            }
            return pass();
          });

      add("zerosets/" + tag + "/trichotomy", "Lemma 2.6(ii)-(iii)",
          [&]() -> std::pair<status, json> {
            rng_t r = rng("tri" + tag);
            for (int it = 0; it < 200; ++it) {
              ring_elem f = r.rand_member(s);
              elem_class c = classify(f);
              if (c == elem_class::zero && !f.is_zero()) return fail(json());
              if (c == elem_class::unit) {
                if (f * inverse(f) != ring_elem::constant(s, rat(1)))
                  return fail(json{{"f", elem_to_json(f)}});
              }
              if (c == elem_class::zero_divisor) {
                ring_elem w = zero_divisor_witness(f);
                if (!(f * w).is_zero() || w.is_zero())
                  return fail(json{{"f", elem_to_json(f)}});
              }
            }
            return pass();
          });

      add("zerosets/" + tag + "/closure", "§1 ring and lattice closure",
          [&]() -> std::pair<status, json> {
            rng_t r = rng("closure" + tag);
            for (int it = 0; it < 200; ++it) {
              ring_elem f = r.rand_member(s), g = r.rand_member(s);
              for (const ring_elem& h :
                   {f + g, f * g, join(f, g), meet(f, g), abs(f)}) {
                disc_result d = discontinuity_set(h);
                if (d.infinite) return fail(json{{"f", elem_to_json(f)},
                                                 {"g", elem_to_json(g)}});
                // disc(composite) ⊆ disc(f) ∪ disc(g)
                upset dh = d.pts.as_upset();
                upset du = discontinuity_set(f).pts.as_upset().unite(
                    discontinuity_set(g).pts.as_upset());
                if (!dh.subset_of(du))
                  return fail(json{{"f", elem_to_json(f)},
                                   {"g", elem_to_json(g)}});
              }
              if (f.value_set().size() > 64) return fail(json());
            }
            return pass();
          });
    }
  }

  // ---- separation ------------------------------------------------------

  void run_separation() {
    for (const auto& s : detail::all_models(cfg_.max_n)) {
      const std::string tag = detail::model_tag(s);
      add("separation/" + tag + "/oracle_agreement", "Thm 2.3",
          [&]() -> std::pair<status, json> {
            rng_t r = rng("sep" + tag);
            for (int it = 0; it < 100; ++it) {
              auto [a, b] = r.rand_disjoint_pair(s);
              separation_verdict v = fc_separated(a, b, s);
              bool oracle = detail::separation_oracle(a, b, s);
              if (v.separated != oracle)
                return fail(json{{"a", xset_to_json(a)}, {"b", xset_to_json(b)}});
              if (v.separated) {
                if (!a.subset_of(*v.z1) || !b.subset_of(*v.z2) ||
                    !v.z1->disjoint_with(*v.z2))
                  return fail(json{{"a", xset_to_json(a)},
                                   {"b", xset_to_json(b)}});
                // Witness contract via h = f²/(f²+g²).
                ring_elem f = member_with_zero_set(s, *v.z1);
                ring_elem g = member_with_zero_set(s, *v.z2);
                ring_elem h = separation_witness(f, g);
                if (!check_witness_range(h, *v.z1, *v.z2, s))
                  return fail(json{{"h", elem_to_json(h)}});
              }
            }
            return pass();
          });

      add("separation/" + tag + "/removal", "Thm 2.5",
          [&]() -> std::pair<status, json> {
            rng_t r = rng("rem" + tag);
            for (int it = 0; it < 100; ++it) {
              auto [a, b] = r.rand_disjoint_pair(s);
              separation_verdict v = fc_separated(a, b, s);
              if (!v.separated) continue;
              removal_result rr = separated_after_removal(a, b, s);
              if (!rr.completely_separated)
                return fail(json{{"a", xset_to_json(a)}, {"b", xset_to_json(b)}});
            }
            return pass();
          });
    }

    add("separation/cofinite_n/evens_odds", "Thm 2.3 (cofinite obstruction)",
        [&]() -> std::pair<status, json> {
          space_model s = make_space(space_kind::cofinite_n);
          xset evens = xset::countable(s, upset::evens());
          xset odds = xset::countable(s, upset::odds());
          separation_verdict v = fc_separated(evens, odds, s);
          return v.separated ? fail(json{{"pair", "evens/odds"}}) : pass();
        });

    add("separation/finite/equivalence_exhaustive", "Thm 2.3, Cor 2.4",
        [&]() -> std::pair<status, json> {
          for (int n = 2; n <= std::min(cfg_.max_n, 4); ++n) {
            space_model s = make_space(space_kind::finite, n);
            const std::uint32_t full = (1u << n) - 1;
            for (std::uint32_t a = 0; a <= full; ++a)
              for (std::uint32_t b = 0; b <= full; ++b) {
                if (a & b) continue;
                xset A = xset::finite(s, a), B = xset::finite(s, b);
                separation_verdict v = fc_separated(A, B, s);
                if (v.separated != detail::separation_oracle(A, B, s))
                  return fail(json{{"n", n}, {"a", a}, {"b", b}});
              }
          }
          return pass();
        });
  }

  bool check_witness_range(const ring_elem& h, const xset& z1, const xset& z2,
                           const space_model& s) {
    auto at_set = [&](std::size_t i, const xset& z) {
      return s.is_finite_model() ? ((z.mask >> i & 1) != 0) : z.up.member(i);
    };
    std::size_t bound = s.is_finite_model()
                            ? static_cast<std::size_t>(s.n)
                            : h.seq.transient_len() + 2 * h.seq.period();
    for (std::size_t i = 0; i < bound; ++i) {
      const rat& v = h.at(i);
      if (v < rat(0) || v > rat(1)) return false;
      if ((v == rat(0)) != at_set(i, z1)) return false;
      if ((v == rat(1)) != at_set(i, z2)) return false;
    }
    if (s.has_inf_point()) {
      const rat& v = h.at_inf();
      if (v < rat(0) || v > rat(1)) return false;
      if ((v == rat(0)) != z1.up.at_inf) return false;
      if ((v == rat(1)) != z2.up.at_inf) return false;
    }
    return true;
  }

  // ---- ideals ----------------------------------------------------------

  void run_ideals() {
    for (int n = 1; n <= cfg_.max_n && n <= 4; ++n) {
      const std::string tag = "n" + std::to_string(n);
      const std::uint32_t full = (1u << n) - 1;

      add("ideals/" + tag + "/counts_and_bijection", "Thm 3.2(ii)",
          [&]() -> std::pair<status, json> {
            filter_enumeration e = enumerate_filters_and_ideals(n);
            if (e.filter_count != (1u << n) - 1 ||
                e.ultrafilter_count != static_cast<std::size_t>(n))
              return fail(json{{"filters", e.filter_count},
                               {"ultrafilters", e.ultrafilter_count}});
            for (auto [m, base] : e.bijection)
              if (m != base) return fail(json{{"m", m}, {"base", base}});
            return pass();
          });

      add("ideals/" + tag + "/galois_roundtrip", "Thm 3.2(i)",
          [&]() -> std::pair<status, json> {
            for (std::uint32_t a = 1; a <= full; ++a) {
              ideal_desc I{a, n};
              if (ideal_of(filter_of(I)) != I) return fail(json{{"a", a}});
              filter_desc F{a, n};
              if (filter_of(ideal_of(F)) != F) return fail(json{{"a", a}});
            }
            return pass();
          });

      add("ideals/" + tag + "/prime_equivalences", "Thm 3.7, Cor 3.8",
          [&]() -> std::pair<status, json> {
            int primes_found = 0;
            for (std::uint32_t a = 1; a <= full; ++a) {
              ideal_desc I{a, n};
              prime_check_table t = prime_equivalents_check(I);
              ideal_predicate_table p = ideal_predicates(I);
              if (!t.all_agree()) return fail(json{{"a", a}});
              bool singleton = (a & (a - 1)) == 0;
              if (t.is_prime != singleton || p.maximal != singleton)
                return fail(json{{"a", a}});
              if (t.is_prime) {
                ++primes_found;
                // Gelfand: contained in exactly one maximal ideal.
                int containers = 0;
                for (std::uint32_t b = 1; b <= full; ++b)
                  if (ideal_predicates({b, n}).maximal &&
                      ideal_desc{a, n}.subset_of({b, n}))
                    ++containers;
                if (containers != 1) return fail(json{{"a", a}});
              }
            }
            return primes_found == n ? pass() : fail(json{{"primes", primes_found}});
          });

      add("ideals/" + tag + "/zc_and_predicates", "Cor 3.6, 3.15, Prop 3.16",
          [&]() -> std::pair<status, json> {
            for (std::uint32_t a = 1; a <= full; ++a) {
              ideal_predicate_table t = ideal_predicates({a, n});
              if (!t.fixed || t.free_ideal || t.essential || !t.zc_ideal)
                return fail(json{{"a", a}});
              int pop = 0;
              for (int i = 0; i < n; ++i) pop += a >> i & 1;
              bool expect_min = pop == n - 1 && n > 1;
              // |Z[M_A]| = 2^(n-|A|): equals 2 iff |A| = n-1.
              if (n > 1 && t.minimal != expect_min)
                return fail(json{{"a", a}, {"minimal", t.minimal}});
            }
            return pass();
          });

      add("ideals/" + tag + "/sum_and_annihilator", "Thm 3.9, Cor 3.10, Thm 3.14",
          [&]() -> std::pair<status, json> {
            for (std::uint32_t a = 1; a <= full; ++a)
              for (std::uint32_t b = 1; b <= full; ++b) {
                ideal_desc I{a, n}, J{b, n};
                if (sum_ideals(I, J).vanishing != (a & b))
                  return fail(json{{"a", a}, {"b", b}});
                if (annihilator(I).vanishing != (~a & full))
                  return fail(json{{"a", a}});
                bool ann_mono = annihilator(I).subset_of(annihilator(J));
                bool zi_mono = (a & ~b) == 0;  // ∩Z[I] ⊆ ∩Z[J]
                if (ann_mono != zi_mono) return fail(json{{"a", a}, {"b", b}});
              }
            return pass();
          });

      add("ideals/" + tag + "/socle_and_idempotents", "Prop 3.16-3.18, Cor 3.17",
          [&]() -> std::pair<status, json> {
            space_model s = finite_space(n);
            rng_t r = rng("socle" + tag);
            for (int it = 0; it < 50; ++it)
              if (!socle_membership(r.rand_member(s))) return fail(json());
            for (int x = 0; x < n; ++x) {
              ideal_desc M{1u << x, n};
              ring_elem e = idempotent_generator(M);
              if (e * e != e) return fail(json{{"x", x}});
              if (ideal_from_generators({e}, n) != M) return fail(json{{"x", x}});
              if (!(e * ring_elem::chi(s, x)).is_zero())
                return fail(json{{"x", x}});
            }
            return pass();
          });

      add("ideals/" + tag + "/structure_space", "Thm 4.1, 4.3, 4.4",
          [&]() -> std::pair<status, json> {
            structure_space_report_t r = structure_space_report(n);
            if (static_cast<int>(r.max_ideals.size()) != n || !r.discrete)
              return fail(json{{"max", r.max_ideals.size()}});
            for (int p = 0; p < n; ++p)
              if (r.gk_table[p] != (1u << p)) return fail(json{{"p", p}});
            return pass();
          });
    }

    // J₁ over the countable models and over finite models.
    for (const auto& s : detail::all_models(cfg_.max_n)) {
      const std::string tag = detail::model_tag(s);
      add("ideals/" + tag + "/j1", "Thm 3.19",
          [&]() -> std::pair<status, json> {
            rng_t r = rng("j1" + tag);
            for (int it = 0; it < 50; ++it) {
              ring_elem f = r.rand_member(s);
              j1_verdict v = j1_membership(f);
              bool coz_finite = cozero_set(f).finite_in_model();
              if (v.member != coz_finite)
                return fail(json{{"f", elem_to_json(f)}});
              if (!v.member) {
                const ring_elem& g = *v.refuting_g;
                if (!is_member(g)) return fail(json{{"f", elem_to_json(f)}});
                ring_elem one_minus = ring_elem::constant(s, rat(1)) - f * g;
                xset z = zero_set(one_minus);
                if (z.finite_in_model())
                  return fail(json{{"f", elem_to_json(f)},
                                   {"g", elem_to_json(g)}});
              }
            }
            return pass();
          });
    }
  }

  // ---- regularity ------------------------------------------------------

  void run_regularity() {
    for (const auto& s : detail::all_models(cfg_.max_n)) {
      const std::string tag = detail::model_tag(s);
      add("regularity/" + tag + "/witness", "Thm 7.6 (f²f⋆ = f)",
          [&]() -> std::pair<status, json> {
            rng_t r = rng("reg" + tag);
            for (int it = 0; it < 100; ++it) {
              ring_elem f = r.rand_member(s);
              ring_elem g = regular_witness(f);
              if (f * f * g != f || !is_member(g))
                return fail(json{{"f", elem_to_json(f)}});
            }
            return pass();
          });

      add("regularity/" + tag + "/report", "Thm 7.6(ii), Thm 6.4(vii)",
          [&]() -> std::pair<status, json> {
            regularity_report r = space_regularity_report(s);
            bool expect_baer = s.kind != space_kind::cofinite_n;
            if (!r.fcp || r.baer != expect_baer)
              return fail(json{{"fcp", r.fcp}, {"baer", r.baer}});
            if (!r.baer) {
              // The witness must genuinely fail the eventually-clopen test.
              if (eventually_clopen(s, *r.baer_witness))
                return fail(json{{"witness", xset_to_json(*r.baer_witness)}});
            }
            return pass();
          });

      add("regularity/" + tag + "/idempotent_coz", "Thm 6.4(vi)",
          [&]() -> std::pair<status, json> {
            rng_t r = rng("coz" + tag);
            for (int it = 0; it < 100; ++it) {
              xset a = r.rand_subset(s);
              idempotent_witness w = idempotent_coz_witness(s, a);
              if (w.e) {
                if (*w.e * *w.e != *w.e || cozero_set(*w.e) != a)
                  return fail(json{{"a", xset_to_json(a)}});
              } else if (s.kind != space_kind::cofinite_n) {
                return fail(json{{"a", xset_to_json(a)}});
              }
            }
            return pass();
          });
    }

    add("regularity/finite/thm_7_6_triple", "Thm 7.6(i)-(iii)",
        [&]() -> std::pair<status, json> {
          for (int n = 1; n <= std::min(cfg_.max_n, 4); ++n) {
            space_model s = finite_space(n);
            for (const auto& f : sign_basis(n)) {
              ring_elem g = regular_witness(f);
              if (f * f * g != f) return fail(json{{"n", n}});
              if (!is_clopen_in_subspace(s, zero_set(f), {}))
                return fail(json{{"n", n}});
              ring_elem e = pp_annihilator_idempotent(f);
              if (e * e != e) return fail(json{{"n", n}});
              if (annihilator({f}, n) != ideal_from_generators_or_zero(e, n))
                return fail(json{{"n", n}, {"f", elem_to_json(f)}});
            }
          }
          return pass();
        });

    add("regularity/cross/separation_link", "Thm 6.4(i)",
        [&]() -> std::pair<status, json> {
          for (const auto& s : detail::all_models(cfg_.max_n)) {
            rng_t r = rng("link" + detail::model_tag(s));
            bool baer = space_regularity_report(s).baer;
            for (int it = 0; it < 50; ++it) {
              auto [a, b] = r.rand_disjoint_pair(s);
              if (baer && !fc_separated(a, b, s).separated)
                return fail(json{{"model", detail::model_tag(s)}});
            }
          }
          space_model cof = make_space(space_kind::cofinite_n);
          xset evens = xset::countable(cof, upset::evens());
          xset odds = xset::countable(cof, upset::odds());
          if (fc_separated(evens, odds, cof).separated ||
              eventually_clopen(cof, evens))
            return fail(json{{"pair", "evens/odds"}});
          return pass();
        });
  }

  // Ann(f) as an ideal descriptor from the idempotent e: ⟨e⟩, or the
  // zero ideal when e = 0.
  static ideal_desc ideal_from_generators_or_zero(const ring_elem& e, int n) {
    if (e.is_zero()) return {(1u << n) - 1, n};  // zero ideal = M_X
    return ideal_from_generators({e}, n);
  }

  // ---- graph -----------------------------------------------------------

  void run_graph() {
    for (int n = 2; n <= std::max(cfg_.max_n, 2); ++n) {
      const std::string tag = "n" + std::to_string(n);
      witness_graph g = make_witness_graph(n, 2);
      graph_metrics m = graph_oracle_metrics(g);
      const std::uint32_t full = g.full();

      add("graph/" + tag + "/oracle_agreement",
          "Thm (deg-thm), Lemma (e-lemma), Thm (c-thm)",
          [&]() -> std::pair<status, json> {
            for (std::size_t u = 0; u < g.vertices.size(); ++u) {
              if (eccentricity_closed_mask(g.vertices[u].zclass, n) != m.ecc[u])
                return fail(json{{"u", u}});
              for (std::size_t v = u + 1; v < g.vertices.size(); ++v) {
                int dc = distance_closed_masks(g.vertices[u].zclass,
                                               g.vertices[v].zclass, full);
                if (dc != m.dist[u][v]) return fail(json{{"u", u}, {"v", v}});
                auto co = cycle_oracle(g, static_cast<int>(u),
                                       static_cast<int>(v));
                int cc = cycle_closed_masks(g.vertices[u].zclass,
                                            g.vertices[v].zclass, full);
                if (!co || *co != cc)
                  return fail(json{{"u", u}, {"v", v}, {"closed", cc}});
              }
            }
            return pass();
          });

      add("graph/" + tag + "/metric_constants", "Thm (diam), Cor (radius)",
          [&]() -> std::pair<status, json> {
            int expect_diam = n == 2 ? 2 : 3;
            if (m.diameter != expect_diam || m.radius != 2)
              return fail(json{{"diameter", m.diameter}, {"radius", m.radius}});
            if (n >= 3 && (!m.girth || *m.girth != 3))
              return fail(json{{"girth", m.girth ? *m.girth : -1}});
            return pass();
          });

      if (n == 2) {
        add("graph/n2/girth_vs_paper", "Thm after (diam): gr = ∞ iff |X| = 2",
            [&]() -> std::pair<status, json> {
              // The 4-cycle χ₀, χ₁, 2χ₀, 2χ₁ exists, so the oracle
              // reports 4 against the paper's ∞ claim.
              if (m.girth && *m.girth == 4)
                return {status::refuted_paper,
                        json{{"oracle_girth", 4},
                             {"paper_claim", "infinite"},
                             {"cycle", "chi0, chi1, 2*chi0, 2*chi1"}}};
              return fail(json{{"girth", m.girth ? *m.girth : -1}});
            });
      }

      if (n >= 3) {
        add("graph/" + tag + "/triangulation", "Thm (try)",
            [&]() -> std::pair<status, json> {
              space_model s = finite_space(n);
              ring_elem chi0 = ring_elem::chi(s, 0);
              ring_elem co0 = ring_elem::constant(s, rat(1)) - chi0;
              if (triangle_predicate(triangle_mode::vertex, co0))
                return fail(json{{"vertex", "1-chi0"}});
              if (triangle_predicate(triangle_mode::edge, chi0, &co0))
                return fail(json{{"edge", "(chi0, 1-chi0)"}});
              if (!triangle_predicate(triangle_mode::vertex, chi0))
                return fail(json{{"vertex", "chi0"}});
              return pass();
            });
      }

      add("graph/" + tag + "/common_neighbor", "Lemma (deg2)",
          [&]() -> std::pair<status, json> {
            for (std::size_t u = 0; u < g.vertices.size(); ++u)
              for (std::size_t v = u + 1; v < g.vertices.size(); ++v) {
                bool common = false;
                for (std::size_t h = 0; h < g.vertices.size(); ++h)
                  if (h != u && h != v &&
                      g.adjacent(static_cast<int>(h), static_cast<int>(u)) &&
                      g.adjacent(static_cast<int>(h), static_cast<int>(v)))
                    common = true;
                bool meet = (g.vertices[u].zclass & g.vertices[v].zclass) != 0;
                if (common != meet) return fail(json{{"u", u}, {"v", v}});
              }
            return pass();
          });

      add("graph/" + tag + "/rep_monotonicity", "class-determined distances",
          [&]() -> std::pair<status, json> {
            witness_graph g3 = make_witness_graph(n, 3);
            graph_metrics m3 = graph_oracle_metrics(g3);
            // Distances between the reps<=2 vertices are unchanged.
            for (std::size_t u = 0; u < g.vertices.size(); ++u)
              for (std::size_t v = 0; v < g.vertices.size(); ++v) {
                auto find3 = [&](const witness_graph::vertex& w) {
                  for (std::size_t i = 0; i < g3.vertices.size(); ++i)
                    if (g3.vertices[i].zclass == w.zclass &&
                        g3.vertices[i].k == w.k)
                      return i;
                  return g3.vertices.size();
                };
                std::size_t u3 = find3(g.vertices[u]), v3 = find3(g.vertices[v]);
                if (m3.dist[u3][v3] != m.dist[u][v])
                  return fail(json{{"u", u}, {"v", v}});
              }
            return pass();
          });
    }
  }

  // ---- sections5 -------------------------------------------------------

  void run_sections5() {
    add("sections5/discrete_n/cc_equals_fcx", "Thm 5.1(ii)",
        [&]() -> std::pair<status, json> {
          space_model s = make_space(space_kind::discrete_n);
          rng_t r = rng("s5disc");
          for (int it = 0; it < 1000; ++it) {
            ring_elem f = r.rand_member(s);
            if (membership(f, ring_kind::fcx).member !=
                membership(f, ring_kind::cc).member)
              return fail(json{{"f", elem_to_json(f)}});
          }
          return pass();
        });

    add("sections5/conv_seq/chi_inf_witness", "§5: χ ∈ C_c(X)_F ∖ C_c(X)",
        [&]() -> std::pair<status, json> {
          space_model s = make_space(space_kind::conv_seq);
          ring_elem f = ring_elem::chi_inf(s);
          if (membership(f, ring_kind::fcx).member &&
              !membership(f, ring_kind::cc).member)
            return pass();
          return fail(json{{"f", elem_to_json(f)}});
        });

    add("sections5/cofinite_n/chi0_witness", "Thm 5.1 (non-discrete model)",
        [&]() -> std::pair<status, json> {
          space_model s = make_space(space_kind::cofinite_n);
          ring_elem f = ring_elem::chi(s, 0);
          if (membership(f, ring_kind::fcx).member &&
              !membership(f, ring_kind::cc).member)
            return pass();
          return fail(json{{"f", elem_to_json(f)}});
        });

    add("sections5/conv_seq/restriction_kernel_probe",
        "Thm 5.3 proof (f ↦ f|_Y)",
        [&]() -> std::pair<status, json> {
          // Y = X∖{∞}: χ_{∞} restricts to 0 but is nonzero, so the
          // stated map has nontrivial kernel and is not injective.
          // Reported as an erratum finding, never as a confirmation.
          space_model s = make_space(space_kind::conv_seq);
          ring_elem f = ring_elem::chi_inf(s);
          bool restricts_to_zero = true;
          for (std::size_t i = 0; i < 16; ++i)
            if (f.at(i) != rat(0)) restricts_to_zero = false;
          if (restricts_to_zero && !f.is_zero())
            return {status::refuted_paper,
                    json{{"kernel_element", "chi_inf"},
                         {"finding", "restriction map is not injective"}}};
          return fail(json());
        });

    add("sections5/finite/restriction_kernel", "Thm 5.3 probe, finite analogue",
        [&]() -> std::pair<status, json> {
          // Removing a point of Finite(3): χ of the removed point is in
          // the kernel; with Y = X the kernel is trivial.
          space_model s = finite_space(3);
          ring_elem chi2 = ring_elem::chi(s, 2);
          bool kernel_has_chi =
              chi2.values[0] == rat(0) && chi2.values[1] == rat(0) &&
              !chi2.is_zero();
          if (!kernel_has_chi) return fail(json());
          for (const auto& f : sign_basis(3)) {
            // identity restriction: kernel only 0
            if (!f.is_zero() && f == ring_elem::constant(s, rat(0)))
              return fail(json());
          }
          return pass();
        });
  }
};

inline report_t run_verify_suite(const config& cfg) {
  return suite_runner(cfg).run();
}

}  // namespace fcx::verify
