#pragma once

#include <boost/rational.hpp>
#include <cstdint>
#include <string>

#include "fcx/errors.hpp"

namespace fcx {

// Exact scalar type. Values stay tiny (small constants and their
// reciprocals), so a 64-bit numerator/denominator is plenty.
using rat = boost::rational<std::int64_t>;

inline std::string to_string(const rat& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

// Parses "n" or "n/d".
inline rat parse_rat(const std::string& s) {
  try {
    auto slash = s.find('/');
    if (slash == std::string::npos) {
      size_t used = 0;
      std::int64_t n = std::stoll(s, &used);
      if (used != s.size()) throw std::invalid_argument(s);
      return rat(n);
    }
    size_t used = 0;
    std::int64_t n = std::stoll(s.substr(0, slash), &used);
    if (used != slash) throw std::invalid_argument(s);
    std::int64_t d = std::stoll(s.substr(slash + 1), &used);
    if (used != s.size() - slash - 1) throw std::invalid_argument(s);
    if (d == 0) throw std::invalid_argument(s);
    return rat(n, d);
  } catch (const std::exception&) {
    throw error(errc::parse_error, "bad rational literal '" + s + "'");
  }
}

inline rat rat_abs(const rat& r) { return r < rat(0) ? -r : r; }

inline int rat_sign(const rat& r) {
  if (r.numerator() > 0) return 1;
  if (r.numerator() < 0) return -1;
  return 0;
}

}  // namespace fcx
