// Exact arithmetic aliases used throughout the library.
//
// Every quantity in the pipeline is an integer or a rational; there is no
// floating point anywhere. Entries like 16a^2 stay exact for arbitrary
// sweep parameters.

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace k3glue {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

// Base class for library errors.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Two classes/isometries living in different lattices were combined.
struct LatticeMismatchError : Error {
  explicit LatticeMismatchError(const std::string& msg) : Error(msg) {}
};

// Malformed scenario input, unknown preset, out-of-range parameter.
struct InputError : Error {
  explicit InputError(const std::string& msg) : Error(msg) {}
};

// A computation exceeded the size limits of the exact algorithms.
struct ResourceError : Error {
  explicit ResourceError(const std::string& msg) : Error(msg) {}
};

inline Int gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }

inline Int abs(const Int& a) { return boost::multiprecision::abs(a); }

// gcd of all entries; 0 for the zero vector.
inline Int content(const IntVec& v) {
  Int g = 0;
  for (const Int& x : v) g = gcd(g, x);
  return g;
}

// Divide out the content, keeping orientation. Zero vector stays zero.
inline IntVec primitive(IntVec v) {
  Int g = content(v);
  if (g > 1)
    for (Int& x : v) x /= g;
  return v;
}

inline bool is_zero(const IntVec& v) {
  for (const Int& x : v)
    if (x != 0) return false;
  return true;
}

inline IntVec add(const IntVec& a, const IntVec& b) {
  if (a.size() != b.size()) throw Error("vector size mismatch");
  IntVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline IntVec sub(const IntVec& a, const IntVec& b) {
  if (a.size() != b.size()) throw Error("vector size mismatch");
  IntVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline IntVec scale(const Int& c, const IntVec& a) {
  IntVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
  return r;
}

inline Int dot(const IntVec& a, const IntVec& b) {
  if (a.size() != b.size()) throw Error("vector size mismatch");
  Int s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// Clear denominators: smallest positive multiple of a rational vector that is
// integral, returned primitive.
inline IntVec integralize(const RatVec& v) {
  Int lcm = 1;
  for (const Rat& x : v) {
    Int d = boost::multiprecision::denominator(x);
    lcm = lcm / gcd(lcm, d) * d;
  }
  IntVec r(v.size());
  for (size_t i = 0; i < v.size(); ++i) {
    Rat s = v[i] * lcm;
    r[i] = boost::multiprecision::numerator(s);
  }
  return primitive(r);
}

inline std::string to_string(const Int& x) { return x.str(); }

inline std::string to_string(const IntVec& v) {
  std::string s = "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += v[i].str();
  }
  return s + ")";
}

}  // namespace k3glue
