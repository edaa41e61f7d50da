#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

namespace upsilon {

using Integer = mpz_class;
using Rational = mpq_class;

inline int cmpabs(const Integer& a, const Integer& b) { return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t()); }
inline int cmpabs(const Integer& a, unsigned long b) { return mpz_cmpabs_ui(a.get_mpz_t(), b); }

struct ArithmeticOverflow : std::overflow_error {
  using std::overflow_error::overflow_error;
};

// 64-bit integer whose arithmetic throws ArithmeticOverflow instead of wrapping.
class Checked64 {
 public:
  Checked64() = default;
  Checked64(std::int64_t v) : v_(v) {}

  std::int64_t value() const { return v_; }
  bool is_zero() const { return v_ == 0; }

  friend Checked64 operator+(Checked64 a, Checked64 b) {
    std::int64_t r;
    if (__builtin_add_overflow(a.v_, b.v_, &r)) throw ArithmeticOverflow("int64 addition");
    return r;
  }
  friend Checked64 operator-(Checked64 a, Checked64 b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a.v_, b.v_, &r)) throw ArithmeticOverflow("int64 subtraction");
    return r;
  }
  friend Checked64 operator*(Checked64 a, Checked64 b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a.v_, b.v_, &r)) throw ArithmeticOverflow("int64 multiplication");
    return r;
  }
  friend Checked64 operator/(Checked64 a, Checked64 b) {
    if (a.v_ == std::numeric_limits<std::int64_t>::min() && b.v_ == -1)
      throw ArithmeticOverflow("int64 division");
    return a.v_ / b.v_;
  }
  friend Checked64 operator%(Checked64 a, Checked64 b) { return a.v_ % b.v_; }
  Checked64 operator-() const { return Checked64(0) - *this; }
  Checked64& operator+=(Checked64 b) { return *this = *this + b; }
  Checked64& operator-=(Checked64 b) { return *this = *this - b; }
  Checked64& operator*=(Checked64 b) { return *this = *this * b; }

  friend bool operator==(Checked64 a, Checked64 b) { return a.v_ == b.v_; }
  friend auto operator<=>(Checked64 a, Checked64 b) { return a.v_ <=> b.v_; }

 private:
  std::int64_t v_ = 0;
};

// Uniform access to the scalar types used by the elimination engines.
template <class T>
struct Scalar;

template <>
struct Scalar<Checked64> {
  static Checked64 from(const Integer& z) {
    if (!z.fits_slong_p()) throw ArithmeticOverflow("integer does not fit in 64 bits");
    return Checked64(z.get_si());
  }
  static Integer to_integer(Checked64 v) { return Integer(static_cast<long>(v.value())); }
  static bool is_zero(Checked64 v) { return v.value() == 0; }
  static bool is_unit(Checked64 v) { return v.value() == 1 || v.value() == -1; }
  static Checked64 abs(Checked64 v) { return v.value() < 0 ? -v : v; }
  static Checked64 gcd(Checked64 a, Checked64 b) {
    return Checked64(std::gcd(abs(a).value(), abs(b).value()));
  }
  static int sign(Checked64 v) { return (v.value() > 0) - (v.value() < 0); }
  static std::size_t size(Checked64 v) {
    std::uint64_t u = static_cast<std::uint64_t>(abs(v).value());
    return u == 0 ? 0 : 64 - static_cast<std::size_t>(__builtin_clzll(u));
  }
};

template <>
struct Scalar<Integer> {
  static Integer from(const Integer& z) { return z; }
  static Integer to_integer(const Integer& v) { return v; }
  static bool is_zero(const Integer& v) { return sgn(v) == 0; }
  static bool is_unit(const Integer& v) { return cmpabs(v, 1) == 0; }
  static Integer abs(const Integer& v) { return ::abs(v); }
  static Integer gcd(const Integer& a, const Integer& b) { return ::gcd(a, b); }
  static int sign(const Integer& v) { return sgn(v); }
  static std::size_t size(const Integer& v) { return mpz_sizeinbase(v.get_mpz_t(), 2); }
};

// Runs f<Checked64>() and repeats the computation with GMP integers if any
// intermediate value leaves the 64-bit range.
template <class F>
auto with_exact_fallback(F&& f) {
  try {
    return f.template operator()<Checked64>();
  } catch (const ArithmeticOverflow&) {
    return f.template operator()<Integer>();
  }
}

inline std::string to_string(const Integer& z) { return z.get_str(); }
inline std::string to_string(const Rational& q) { return q.get_str(); }

}  // namespace upsilon
