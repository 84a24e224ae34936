#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace mstar {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Gaussian rational: exact complex number with rational real and
/// imaginary parts. All arithmetic is exact; equality is decidable.
struct Scalar {
  Rational re;
  Rational im;

  Scalar() = default;
  Scalar(Rational real) : re(std::move(real)) {}  // NOLINT: implicit by design
  Scalar(std::int64_t real) : re(real) {}         // NOLINT
  Scalar(Rational real, Rational imag) : re(std::move(real)), im(std::move(imag)) {}

  static Scalar zero() { return Scalar{}; }
  static Scalar one() { return Scalar{1}; }
  static Scalar i() { return Scalar{Rational(0), Rational(1)}; }

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_one() const { return re == 1 && im == 0; }

  Scalar conj() const { return Scalar{re, -im}; }

  friend Scalar operator+(const Scalar& a, const Scalar& b) {
    return Scalar{a.re + b.re, a.im + b.im};
  }
  friend Scalar operator-(const Scalar& a, const Scalar& b) {
    return Scalar{a.re - b.re, a.im - b.im};
  }
  friend Scalar operator-(const Scalar& a) { return Scalar{-a.re, -a.im}; }
  friend Scalar operator*(const Scalar& a, const Scalar& b) {
    return Scalar{a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  Scalar& operator+=(const Scalar& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }
};

/// Canonical rendering, e.g. "0", "1", "-2/3", "1/2+3i", "1-1/2i".
std::string to_string(const Scalar& s);

/// Numerator/denominator of a rational as int64, throwing if out of range.
/// Serialization keeps exactness by emitting the two integers separately.
std::int64_t checked_int64(const BigInt& v);

}  // namespace mstar
