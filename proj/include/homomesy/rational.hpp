#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include <Eigen/Core>
#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

namespace homomesy {

/// Exact rational number with arbitrary-precision numerator and denominator.
///
/// Always kept in lowest terms with a positive denominator. This is the only
/// scalar type used for averages, constants and linear algebra; nothing in the
/// library computes with floating point.
class Rational {
 public:
  using Integer = boost::multiprecision::cpp_int;

  Rational() = default;
  Rational(std::int64_t n) : value_(Integer(n)) {}  // NOLINT: implicit by intent
  Rational(Integer n) : value_(std::move(n)) {}     // NOLINT
  Rational(Integer numerator, Integer denominator);

  const Integer& numerator() const { return value_.numerator(); }
  const Integer& denominator() const { return value_.denominator(); }

  bool is_zero() const { return value_.numerator() == 0; }
  bool is_integer() const { return value_.denominator() == 1; }

  Rational& operator+=(const Rational& o) {
    value_ += o.value_;
    return *this;
  }
  Rational& operator-=(const Rational& o) {
    value_ -= o.value_;
    return *this;
  }
  Rational& operator*=(const Rational& o) {
    value_ *= o.value_;
    return *this;
  }
  /// Throws std::domain_error on division by zero.
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(Rational a) {
    a.value_ = -a.value_;
    return a;
  }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    if (a.value_ == b.value_) return std::strong_ordering::equal;
    return a.value_ < b.value_ ? std::strong_ordering::less : std::strong_ordering::greater;
  }

  /// "p/q" in lowest terms, or "p" when the denominator is 1.
  std::string to_string() const;

  /// Parses "p", "-p", "p/q". Throws std::invalid_argument on malformed input
  /// or a zero denominator.
  static Rational parse(std::string_view text);

 private:
  boost::rational<Integer> value_;
};

Rational abs(const Rational& r);

inline std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

using RationalVector = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;
using RationalMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;

RationalVector zero_vector(Eigen::Index n);

/// Comma separated "p/q" entries, e.g. "1/2,1,1/2".
std::string to_string(const RationalVector& v);

/// Inverse of to_string(RationalVector).
RationalVector parse_rational_vector(std::string_view text);

}  // namespace homomesy

namespace Eigen {

template <>
struct NumTraits<homomesy::Rational> : GenericNumTraits<homomesy::Rational> {
  using Real = homomesy::Rational;
  using NonInteger = homomesy::Rational;
  using Nested = homomesy::Rational;
  using Literal = homomesy::Rational;

  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 8,
    MulCost = 16
  };

  // Exact arithmetic: no tolerance anywhere.
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen
