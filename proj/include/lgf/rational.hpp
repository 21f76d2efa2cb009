#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "lgf/error.hpp"

namespace lgf {

namespace detail {

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) fail(Errc::Internal, "rational overflow in add");
  return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) fail(Errc::Internal, "rational overflow in mul");
  return r;
}

}  // namespace detail

// Exact rational, kept in lowest terms with a positive denominator.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Rational() = default;
  Rational(std::int64_t n) : num(n), den(1) {}
  Rational(std::int64_t n, std::int64_t d) : num(n), den(d) { reduce(); }

  void reduce() {
    if (den == 0) fail(Errc::Internal, "rational with zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    std::int64_t g = std::gcd(num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }

  Rational reciprocal() const {
    if (num == 0) fail(Errc::Internal, "reciprocal of zero");
    return Rational(den, num);
  }

  std::string str() const { return std::to_string(num) + "/" + std::to_string(den); }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(detail::checked_add(detail::checked_mul(a.num, b.den),
                                        detail::checked_mul(b.num, a.den)),
                    detail::checked_mul(a.den, b.den));
  }

  bool operator==(const Rational&) const = default;

  friend bool operator<(const Rational& a, const Rational& b) {
    return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
  }
};

}  // namespace lgf
