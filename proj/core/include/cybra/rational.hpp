#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <stdexcept>
#include <string>

namespace cybra {

// Exact arbitrary-precision rational number. All arithmetic in the library is
// exact; no floating point is used anywhere.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Rat rat(long long n, long long d = 1) { return Rat(Int(n), Int(d)); }

// True iff q is an integer.
inline bool is_integer(const Rat& q) { return denominator(q) == 1; }

// True iff q is a (strictly) positive integer.
inline bool is_positive_integer(const Rat& q) { return is_integer(q) && q > 0; }

// True iff q - p is an integer.
inline bool integer_difference(const Rat& q, const Rat& p) {
  return is_integer(q - p);
}

// Serialize as "p" or "p/q" (lowest terms, q > 0).
inline std::string rat_to_string(const Rat& q) {
  std::string s = numerator(q).str();
  if (denominator(q) != 1) s += "/" + denominator(q).str();
  return s;
}

// Parse "p" or "p/q"; returns nullopt on malformed input or zero denominator.
inline std::optional<Rat> rat_from_string(const std::string& s) {
  if (s.empty()) return std::nullopt;
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(Int(s));
    Int num(s.substr(0, slash));
    Int den(s.substr(slash + 1));
    if (den == 0) return std::nullopt;
    return Rat(num, den);
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

}  // namespace cybra
