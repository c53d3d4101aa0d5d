#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <vector>

namespace fcx {

// Ultimately periodic sequence over an index set ℕ: a finite transient
// prefix followed by a repeating block. Canonical form has the minimal
// block length and then the minimal transient length, so structural
// equality coincides with extensional equality.
template <typename T>
struct up_seq {
  std::vector<T> transient;
  std::vector<T> block;  // never empty

  up_seq() : block{T{}} {}
  explicit up_seq(std::vector<T> pre, std::vector<T> blk)
      : transient(std::move(pre)), block(std::move(blk)) {
    if (block.empty()) block.push_back(T{});
    canonicalize();
  }

  static up_seq constant(T v) { return up_seq({}, {std::move(v)}); }

  const T& at(std::size_t i) const {
    if (i < transient.size()) return transient[i];
    return block[(i - transient.size()) % block.size()];
  }

  std::size_t transient_len() const { return transient.size(); }
  std::size_t period() const { return block.size(); }

  bool eventually_constant() const {
    return std::all_of(block.begin(), block.end(),
                       [&](const T& v) { return v == block.front(); });
  }

  void canonicalize() {
    // Minimal period: smallest divisor d of |block| under which the
    // block is d-periodic.
    const std::size_t p = block.size();
    for (std::size_t d = 1; d < p; ++d) {
      if (p % d != 0) continue;
      bool ok = true;
      for (std::size_t i = d; i < p && ok; ++i)
        if (!(block[i] == block[i % d])) ok = false;
      if (ok) {
        block.resize(d);
        break;
      }
    }
    // Minimal transient: absorb a trailing transient entry whenever it
    // matches the last block entry, rotating the block right to keep
    // the same extension.
    while (!transient.empty() && transient.back() == block.back()) {
      transient.pop_back();
      std::rotate(block.rbegin(), block.rbegin() + 1, block.rend());
    }
  }

  bool operator==(const up_seq& o) const = default;

  template <typename F>
  auto map(F&& f) const -> up_seq<std::decay_t<decltype(f(block.front()))>> {
    using U = std::decay_t<decltype(f(block.front()))>;
    std::vector<U> pre, blk;
    pre.reserve(transient.size());
    blk.reserve(block.size());
    for (const T& v : transient) pre.push_back(f(v));
    for (const T& v : block) blk.push_back(f(v));
    return up_seq<U>(std::move(pre), std::move(blk));
  }
};

// Pointwise combination of two ultimately periodic sequences; the
// result lives on transient max(T1,T2) and period lcm(p1,p2).
template <typename T, typename U, typename F>
auto zip_up(const up_seq<T>& a, const up_seq<U>& b, F&& f)
    -> up_seq<decltype(f(a.at(0), b.at(0)))> {
  using R = decltype(f(a.at(0), b.at(0)));
  const std::size_t t = std::max(a.transient_len(), b.transient_len());
  const std::size_t p = std::lcm(a.period(), b.period());
  std::vector<R> pre, blk;
  pre.reserve(t);
  blk.reserve(p);
  for (std::size_t i = 0; i < t; ++i) pre.push_back(f(a.at(i), b.at(i)));
  for (std::size_t i = t; i < t + p; ++i) blk.push_back(f(a.at(i), b.at(i)));
  return up_seq<R>(std::move(pre), std::move(blk));
}

}  // namespace fcx
