#pragma once

// Exact arithmetic primitives shared by every combinatorial module.
// Rationals are boost::multiprecision cpp_rational (arbitrary precision,
// always stored canonically: coprime, positive denominator).

#include <boost/multiprecision/cpp_int.hpp>
#include <numeric>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

namespace symcut {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int num(const Rat& q) { return boost::multiprecision::numerator(q); }
inline Int den(const Rat& q) { return boost::multiprecision::denominator(q); }

inline Int abs_int(const Int& a) { return a < 0 ? Int(-a) : a; }

inline Int gcd_int(const Int& a, const Int& b) {
  return boost::multiprecision::gcd(a, b);
}

inline Int lcm_int(const Int& a, const Int& b) {
  return boost::multiprecision::lcm(a, b);
}

inline int sign(const Rat& q) {
  if (q > 0) return 1;
  if (q < 0) return -1;
  return 0;
}

// Formats a rational as "p" when integral, "p/q" otherwise.  This is the
// canonical form used in all JSON output.
inline std::string rat_to_string(const Rat& q) {
  std::string s = num(q).str();
  if (den(q) != 1) {
    s += '/';
    s += den(q).str();
  }
  return s;
}

// Accepts exactly the forms produced by rat_to_string: "p" or "p/q" where p
// is an optionally negated digit string and q is a positive digit string.
inline Rat rat_from_string(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  auto slash = s.find('/');
  auto check_digits = [&s](const std::string& part, bool allow_sign) {
    std::size_t i = (allow_sign && !part.empty() && part[0] == '-') ? 1 : 0;
    if (i == part.size())
      throw std::invalid_argument("malformed rational literal: " + s);
    for (; i < part.size(); ++i)
      if (part[i] < '0' || part[i] > '9')
        throw std::invalid_argument("malformed rational literal: " + s);
  };
  if (slash == std::string::npos) {
    check_digits(s, true);
    return Rat(Int(s));
  }
  std::string p = s.substr(0, slash), q = s.substr(slash + 1);
  check_digits(p, true);
  check_digits(q, false);
  Int qi(q);
  if (qi == 0) throw std::invalid_argument("rational with zero denominator: " + s);
  return Rat(Int(p), qi);
}

using RatVec = std::vector<Rat>;
using IntVec = std::vector<Int>;

inline Rat dot(const RatVec& a, const RatVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: size mismatch");
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline RatVec operator+(const RatVec& a, const RatVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vec+: size mismatch");
  RatVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline RatVec operator-(const RatVec& a, const RatVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vec-: size mismatch");
  RatVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

// Deduced-and-constrained first parameter: when this candidate is probed for
// unrelated operands (e.g. Eigen expressions elsewhere in the namespace),
// deduction fails before any conversion to Rat is considered.  A plain
// `const Rat&` parameter would make overload resolution instantiate Boost's
// converting-constructor traits on those operand types, which hard-errors.
template <class T, std::enable_if_t<std::is_same_v<T, Rat>, int> = 0>
inline RatVec operator*(const T& c, const RatVec& a) {
  RatVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
  return r;
}

inline RatVec negate(const RatVec& a) { return Rat(-1) * a; }

inline bool is_zero(const RatVec& a) {
  for (const auto& x : a)
    if (x != 0) return false;
  return true;
}

inline RatVec to_rat(const IntVec& a) {
  RatVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = Rat(a[i]);
  return r;
}

// gcd of absolute values; 0 for the zero vector.
inline Int content(const IntVec& a) {
  Int g = 0;
  for (const auto& x : a) g = gcd_int(g, x);
  return g;
}

// Scales a rational vector to the unique primitive integer vector on the same
// ray (positive multiple).  Zero vector maps to zero.
inline IntVec primitive(const RatVec& a) {
  Int l = 1;
  for (const auto& x : a) l = lcm_int(l, den(x));
  IntVec v(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) v[i] = num(a[i]) * (l / den(a[i]));
  Int g = content(v);
  if (g == 0) return v;
  for (auto& x : v) x /= g;
  return v;
}

inline IntVec primitive(const IntVec& a) {
  Int g = content(a);
  IntVec v = a;
  if (g == 0) return v;
  for (auto& x : v) x /= g;
  return v;
}

}  // namespace symcut
