#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace vok {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

using IVec = std::vector<int>;
using IMat = std::vector<std::vector<int>>;
using RVec = std::vector<Rat>;
using RMat = std::vector<std::vector<Rat>>;

// All exact scalars in the library are Rat: conformal weights, inner
// products, lattice norms, twisted weights.  cpp_rational keeps values
// canonical (reduced, positive denominator), which is exactly the type
// invariant we need.

inline Rat make_rat(const Int& p, const Int& q) {
  if (q == 0) throw std::domain_error("rational: division by zero");
  return Rat(p, q);
}

inline Rat rat_div(const Rat& a, const Rat& b) {
  if (b == 0) throw std::domain_error("rational: division by zero");
  return a / b;
}

inline bool is_integer(const Rat& r) { return denominator(r) == 1; }

inline Int floor_int(const Rat& r) {
  Int q = numerator(r) / denominator(r);
  if (numerator(r) < 0 && q * denominator(r) != numerator(r)) --q;
  return q;
}

// r - floor(r), in [0,1)
inline Rat mod1(const Rat& r) { return r - Rat(floor_int(r)); }

// Serialized as "p/q", or "p" when q == 1 (the one wire format for
// rationals across CLI, JSON and golden files).
inline std::string rat_str(const Rat& r) {
  std::string s = numerator(r).str();
  if (denominator(r) != 1) s += "/" + denominator(r).str();
  return s;
}

std::optional<Rat> rat_parse(const std::string& s);

inline double rat_double(const Rat& r) {
  return static_cast<double>(numerator(r)) / static_cast<double>(denominator(r));
}

}  // namespace vok
