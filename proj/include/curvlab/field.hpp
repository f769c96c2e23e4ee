#pragma once

// Scalar fields used by every algorithm in curvlab.
//
// All algorithms are templated on a field type F.  Two fields are provided:
//   Rational  exact rationals (GMP mpq), the default everywhere
//   double    opt-in floating point with an explicit rank tolerance
//
// Everything field-specific goes through field_traits<F>.

#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <string_view>

namespace curvlab {

using Rational = mpq_class;

template <class F>
struct field_traits;

template <>
struct field_traits<Rational> {
  static constexpr bool is_exact = true;
  static constexpr const char* name = "exact";

  static bool is_zero(const Rational& x) { return sgn(x) == 0; }
  static bool equal(const Rational& a, const Rational& b) { return a == b; }

  // acc -= f * x without allocating a temporary per call
  static void sub_mul(Rational& acc, const Rational& f, const Rational& x) {
    thread_local Rational tmp;
    mpq_mul(tmp.get_mpq_t(), f.get_mpq_t(), x.get_mpq_t());
    mpq_sub(acc.get_mpq_t(), acc.get_mpq_t(), tmp.get_mpq_t());
  }
  static void add_mul(Rational& acc, const Rational& f, const Rational& x) {
    thread_local Rational tmp;
    mpq_mul(tmp.get_mpq_t(), f.get_mpq_t(), x.get_mpq_t());
    mpq_add(acc.get_mpq_t(), acc.get_mpq_t(), tmp.get_mpq_t());
  }

  // "p/q", or "p" when q = 1
  static std::string to_string(const Rational& x) { return x.get_str(); }

  static Rational parse(std::string_view text) {
    std::string s(text);
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    if (s.front() == '+') s.erase(0, 1);
    Rational r;
    if (r.set_str(s, 10) != 0)
      throw std::invalid_argument("malformed rational literal '" + std::string(text) + "'");
    if (sgn(r.get_den()) == 0)
      throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    r.canonicalize();
    return r;
  }

  static double to_double(const Rational& x) { return x.get_d(); }
  static Rational magnitude(const Rational& x) { return abs(x); }
};

namespace detail {
inline double& float_tolerance_slot() {
  thread_local double tol = 1e-8;
  return tol;
}
}  // namespace detail

/// Current rank/zero tolerance for the floating field on this thread.
inline double float_tolerance() { return detail::float_tolerance_slot(); }

/// "float:1e-08" style label for reports.
inline std::string float_mode_label(double tol) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "float:%g", tol);
  return buf;
}

/// Sets the floating tolerance for the lifetime of the object (this thread only).
class ScopedFloatTolerance {
 public:
  explicit ScopedFloatTolerance(double tol) : saved_(detail::float_tolerance_slot()) {
    if (!(tol > 0.0)) throw std::invalid_argument("float tolerance must be positive");
    detail::float_tolerance_slot() = tol;
  }
  ~ScopedFloatTolerance() { detail::float_tolerance_slot() = saved_; }
  ScopedFloatTolerance(const ScopedFloatTolerance&) = delete;
  ScopedFloatTolerance& operator=(const ScopedFloatTolerance&) = delete;

 private:
  double saved_;
};

template <>
struct field_traits<double> {
  static constexpr bool is_exact = false;
  static constexpr const char* name = "float";

  static bool is_zero(double x) { return std::abs(x) <= float_tolerance(); }
  static bool equal(double a, double b) {
    return std::abs(a - b) <= float_tolerance() * std::max(1.0, std::max(std::abs(a), std::abs(b)));
  }
  static void sub_mul(double& acc, double f, double x) { acc -= f * x; }
  static void add_mul(double& acc, double f, double x) { acc += f * x; }

  static std::string to_string(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
  }
  static double parse(std::string_view text) {
    std::string s(text);
    auto slash = s.find('/');
    if (slash != std::string::npos) {
      return field_traits<Rational>::parse(text).get_d();
    }
    std::size_t used = 0;
    double v = std::stod(s, &used);
    if (used != s.size()) throw std::invalid_argument("malformed number '" + s + "'");
    return v;
  }
  static double to_double(double x) { return x; }
  static double magnitude(double x) { return std::abs(x); }
};

template <class F>
inline bool is_zero(const F& x) {
  return field_traits<F>::is_zero(x);
}

}  // namespace curvlab
