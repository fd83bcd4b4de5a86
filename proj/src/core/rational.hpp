#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace tamp {

/// Exact rational arithmetic for probabilities and costs.
///
/// Probabilities are kept exact end to end (parsing, outcome sums,
/// path-probability products, leaf-mass totals) so that sum-to-one
/// checks need no float tolerance. Backed by arbitrary-precision
/// integers, so deep products of small fractions cannot overflow.
class Rational {
 public:
  using Int = boost::multiprecision::cpp_int;

  Rational() : num_(0), den_(1) {}
  Rational(long long n) : num_(n), den_(1) {}  // NOLINT: implicit by design
  Rational(long long n, long long d);
  Rational(Int n, Int d);

  /// Parses "0.8", ".25", "3", "4/5", with optional leading sign.
  /// Throws std::invalid_argument on malformed text.
  static Rational parse(const std::string& text);

  const Int& numerator() const { return num_; }
  const Int& denominator() const { return den_; }

  double toDouble() const;
  /// "4/5" for proper fractions, "2" for integers. parse() round-trips it.
  std::string str() const;

  bool isZero() const { return num_ == 0; }
  bool isOne() const { return num_ == den_; }

  Rational operator+(const Rational& o) const;
  Rational operator-(const Rational& o) const;
  Rational operator*(const Rational& o) const;
  Rational operator/(const Rational& o) const;
  Rational operator-() const { return Rational(-num_, den_); }
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  bool operator==(const Rational& o) const {
    return num_ == o.num_ && den_ == o.den_;
  }
  bool operator!=(const Rational& o) const { return !(*this == o); }
  bool operator<(const Rational& o) const { return num_ * o.den_ < o.num_ * den_; }
  bool operator<=(const Rational& o) const { return num_ * o.den_ <= o.num_ * den_; }
  bool operator>(const Rational& o) const { return o < *this; }
  bool operator>=(const Rational& o) const { return o <= *this; }

  size_t hash() const;

 private:
  void normalize();

  Int num_;
  Int den_;  // > 0 after normalization
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace tamp

template <>
struct std::hash<tamp::Rational> {
  size_t operator()(const tamp::Rational& r) const { return r.hash(); }
};
