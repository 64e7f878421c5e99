#include "homomesy/rational.hpp"

#include <stdexcept>
#include <vector>

namespace homomesy {

namespace {

Rational::Integer parse_integer(std::string_view text, std::string_view whole) {
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
    negative = text[i] == '-';
    ++i;
  }
  if (i == text.size()) {
    throw std::invalid_argument("malformed rational: '" + std::string(whole) + "'");
  }
  Rational::Integer value = 0;
  for (; i < text.size(); ++i) {
    const char c = text[i];
    if (c < '0' || c > '9') {
      throw std::invalid_argument("malformed rational: '" + std::string(whole) + "'");
    }
    value = value * 10 + (c - '0');
  }
  return negative ? Rational::Integer(-value) : value;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace

Rational::Rational(Integer numerator, Integer denominator) {
  if (denominator == 0) throw std::domain_error("rational with zero denominator");
  // boost::rational<cpp_int> rejects negative denominators outright.
  if (denominator < 0) {
    numerator = -numerator;
    denominator = -denominator;
  }
  value_ = boost::rational<Integer>(std::move(numerator), std::move(denominator));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("rational division by zero");
  value_ /= o.value_;
  return *this;
}

std::string Rational::to_string() const {
  if (is_integer()) return numerator().str();
  return numerator().str() + "/" + denominator().str();
}

Rational Rational::parse(std::string_view text) {
  const std::string_view t = trim(text);
  const auto slash = t.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(t, text));
  Integer num = parse_integer(trim(t.substr(0, slash)), text);
  Integer den = parse_integer(trim(t.substr(slash + 1)), text);
  if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  return Rational(std::move(num), std::move(den));
}

Rational abs(const Rational& r) { return r < Rational(0) ? -r : r; }

RationalVector zero_vector(Eigen::Index n) {
  RationalVector v(n);
  for (Eigen::Index i = 0; i < n; ++i) v(i) = Rational(0);
  return v;
}

std::string to_string(const RationalVector& v) {
  std::string out;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += v(i).to_string();
  }
  return out;
}

RationalVector parse_rational_vector(std::string_view text) {
  std::vector<Rational> parts;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    parts.push_back(Rational::parse(text.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  RationalVector v(static_cast<Eigen::Index>(parts.size()));
  for (std::size_t i = 0; i < parts.size(); ++i) v(static_cast<Eigen::Index>(i)) = parts[i];
  return v;
}

}  // namespace homomesy
