#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "fcx/periodic.hpp"

namespace fcx {

// Ultimately periodic subset of ℕ, plus a separate membership flag for
// the distinguished point ∞ (meaningful only on the convergent-sequence
// model). ∞ is never aliased onto an index.
struct upset {
  up_seq<std::uint8_t> bits;  // 0/1 membership per index
  bool at_inf = false;

  upset() = default;
  upset(std::vector<std::uint8_t> transient, std::vector<std::uint8_t> block,
        bool inf = false)
      : bits(std::move(transient), std::move(block)), at_inf(inf) {}

  static upset empty() { return upset({}, {0}); }
  static upset all(bool with_inf = false) { return upset({}, {1}, with_inf); }
  static upset singleton(std::size_t i) {
    std::vector<std::uint8_t> pre(i + 1, 0);
    pre[i] = 1;
    return upset(std::move(pre), {0});
  }
  static upset from_points(const std::vector<std::size_t>& pts) {
    upset s = empty();
    for (std::size_t p : pts) s = s.unite(singleton(p));
    return s;
  }
  static upset evens() { return upset({}, {1, 0}); }
  static upset odds() { return upset({}, {0, 1}); }

  bool member(std::size_t i) const { return bits.at(i) != 0; }

  bool is_finite() const {
    // at_inf is about the extra point ∞, not about cardinality in ℕ.
    for (auto b : bits.block)
      if (b) return false;
    return true;
  }
  bool is_cofinite_in_n() const {
    for (auto b : bits.block)
      if (!b) return false;
    return true;
  }
  bool is_empty() const { return is_finite() && count_finite() == 0 && !at_inf; }

  // Number of members, valid only when is_finite().
  std::size_t count_finite() const {
    std::size_t c = 0;
    for (auto b : bits.transient) c += b;
    return c;
  }

  std::vector<std::size_t> finite_points() const {
    std::vector<std::size_t> pts;
    for (std::size_t i = 0; i < bits.transient_len(); ++i)
      if (bits.transient[i]) pts.push_back(i);
    return pts;
  }

  upset unite(const upset& o) const {
    upset r;
    r.bits = zip_up(bits, o.bits, [](std::uint8_t a, std::uint8_t b) {
      return static_cast<std::uint8_t>(a | b);
    });
    r.at_inf = at_inf || o.at_inf;
    return r;
  }
  upset intersect(const upset& o) const {
    upset r;
    r.bits = zip_up(bits, o.bits, [](std::uint8_t a, std::uint8_t b) {
      return static_cast<std::uint8_t>(a & b);
    });
    r.at_inf = at_inf && o.at_inf;
    return r;
  }
  upset complement() const {
    upset r;
    r.bits = bits.map([](std::uint8_t b) {
      return static_cast<std::uint8_t>(b ? 0 : 1);
    });
    r.at_inf = !at_inf;
    return r;
  }
  upset minus(const upset& o) const { return intersect(o.complement()); }

  bool subset_of(const upset& o) const { return intersect(o) == *this; }
  bool disjoint_with(const upset& o) const { return intersect(o).is_empty(); }

  bool operator==(const upset& o) const = default;
};

}  // namespace fcx
