#pragma once

// Exact rational scalars and the fractional-part helpers used throughout.

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <concepts>
#include <cstdint>
#include <functional>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace mlr {

using Integer = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                              boost::multiprecision::et_off>;

/// Raised whenever an argument violates a documented precondition.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Fraction in lowest terms with a strictly positive denominator.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}

  template <std::integral I>
  Rational(I n) : num_(n), den_(1) {}  // NOLINT(google-explicit-constructor)

  explicit Rational(Integer n) : num_(std::move(n)), den_(1) {}

  Rational(Integer num, Integer den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_ == 0) throw DomainError("rational with zero denominator");
    normalize();
  }

  /// Accepts "p/q", "-p/q" or a bare integer "p". Whitespace is not allowed.
  static Rational parse(std::string_view text) {
    auto parse_int = [&](std::string_view part) {
      std::size_t i = 0;
      if (!part.empty() && (part[0] == '-' || part[0] == '+')) i = 1;
      if (i == part.size()) throw DomainError("malformed rational '" + std::string(text) + "'");
      for (std::size_t j = i; j < part.size(); ++j) {
        if (part[j] < '0' || part[j] > '9')
          throw DomainError("malformed rational '" + std::string(text) + "'");
      }
      return Integer(std::string(part));
    };
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_int(text));
    auto den_part = text.substr(slash + 1);
    if (!den_part.empty() && (den_part[0] == '-' || den_part[0] == '+'))
      throw DomainError("malformed rational '" + std::string(text) + "'");
    Integer den = parse_int(den_part);
    if (den == 0) throw DomainError("zero denominator in '" + std::string(text) + "'");
    return Rational(parse_int(text.substr(0, slash)), std::move(den));
  }

  const Integer& numerator() const { return num_; }
  const Integer& denominator() const { return den_; }
  bool is_integer() const { return den_ == 1; }

  std::string str() const {
    if (den_ == 1) return num_.str();
    return num_.str() + "/" + den_.str();
  }

  double to_double() const {
    // Scale into range before converting so huge numerators/denominators do not overflow.
    using Float = boost::multiprecision::cpp_bin_float_double;
    return static_cast<double>(Float(num_) / Float(den_));
  }

  Rational operator-() const {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }

  Rational& operator+=(const Rational& o) {
    if (den_ == o.den_) {
      num_ += o.num_;
    } else {
      num_ = num_ * o.den_ + o.num_ * den_;
      den_ *= o.den_;
    }
    normalize();
    return *this;
  }
  Rational& operator-=(const Rational& o) { return *this += -o; }
  Rational& operator*=(const Rational& o) {
    num_ *= o.num_;
    den_ *= o.den_;
    normalize();
    return *this;
  }
  Rational& operator/=(const Rational& o) {
    if (o.num_ == 0) throw DomainError("division by zero");
    Integer n = num_ * o.den_;
    Integer d = den_ * o.num_;
    num_ = std::move(n);
    den_ = std::move(d);
    normalize();
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    if (a.den_ == b.den_) return cmp(a.num_, b.num_);
    return cmp(a.num_ * b.den_, b.num_ * a.den_);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  static std::strong_ordering cmp(const Integer& x, const Integer& y) {
    int c = x.compare(y);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  void normalize() {
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    if (den_ == 1) return;
    if (num_ == 0) {
      den_ = 1;
      return;
    }
    Integer g = boost::multiprecision::gcd(num_, den_);
    if (g != 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  Integer num_;
  Integer den_;
};

inline Rational abs(const Rational& x) { return x < 0 ? -x : x; }

/// Largest integer not exceeding x.
inline Integer floor(const Rational& x) {
  Integer q = x.numerator() / x.denominator();  // truncates toward zero
  if (x.numerator() < 0 && q * x.denominator() != x.numerator()) q -= 1;
  return q;
}

/// x - floor(x), in [0, 1).
inline Rational frac(const Rational& x) {
  if (x.is_integer()) return Rational();
  Integer r = x.numerator() % x.denominator();
  if (r < 0) r += x.denominator();
  return Rational(std::move(r), x.denominator());
}

/// Representative of x mod 1 in (-1/2, 1/2].
inline Rational centered_frac(const Rational& x) {
  Rational f = frac(x);
  if (2 * f.numerator() > f.denominator()) f -= 1;
  return f;
}

/// Distance from x to the nearest integer, in [0, 1/2].
inline Rational nearest_int_dist(const Rational& x) { return abs(centered_frac(x)); }

/// Second Bernoulli polynomial x^2 - x + 1/6.
inline Rational bernoulli2(const Rational& x) { return x * x - x + Rational(1, 6); }

/// Sign with sgn(0) = 0.
inline int sign(const Rational& x) {
  if (x.numerator() > 0) return 1;
  if (x.numerator() < 0) return -1;
  return 0;
}

inline std::int64_t gcd(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }
inline std::int64_t lcm(std::int64_t a, std::int64_t b) { return std::lcm(a, b); }

}  // namespace mlr

template <>
struct std::hash<mlr::Rational> {
  std::size_t operator()(const mlr::Rational& r) const noexcept {
    std::size_t h1 = boost::multiprecision::hash_value(r.numerator());
    std::size_t h2 = boost::multiprecision::hash_value(r.denominator());
    return h1 ^ (h2 + 0x9e3779b97f4a7c15ULL + (h1 << 6) + (h1 >> 2));
  }
};
