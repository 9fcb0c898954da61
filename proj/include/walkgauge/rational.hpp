#ifndef WALKGAUGE_RATIONAL_HPP
#define WALKGAUGE_RATIONAL_HPP

#include <gmpxx.h>

#include <compare>
#include <ostream>
#include <string>
#include <string_view>

#include "walkgauge/errors.hpp"

namespace walkgauge {

// Arbitrary-precision integer. All counting invariants (spanning trees,
// Wiener-type sums) use this type so no desk-scale input can overflow.
using Integer = mpz_class;

inline std::string to_string(const Integer& z) { return z.get_str(); }

// Exact rational, always kept in lowest terms with positive denominator.
// Serializes as "p/q", or just "p" when the value is an integer.
class Rational {
public:
  Rational() : v_(0) {}
  Rational(long n) : v_(static_cast<signed long>(n)) {}  // NOLINT(google-explicit-constructor)
  Rational(const Integer& n) : v_(n) {}                  // NOLINT(google-explicit-constructor)
  // Unevaluated gmpxx expression templates (Integer products, sums, ...)
  // would otherwise convert ambiguously; accept them directly.
  template <class T, class U>
  Rational(const __gmp_expr<T, U>& e) : v_(e) {}  // NOLINT(google-explicit-constructor)
  Rational(const Integer& num, const Integer& den) : v_(num, den) {
    if (den == 0) throw DivisionByZeroError("rational with zero denominator");
    v_.canonicalize();
  }
  Rational(long num, long den) : Rational(Integer(num), Integer(den)) {}

  static Rational from_string(std::string_view text) {
    std::string s(text);
    if (s.empty()) throw ParseError("empty rational literal");
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw ParseError("bad rational literal '" + s + "'");
    if (q.get_den() == 0) throw DivisionByZeroError("rational literal '" + s + "' has zero denominator");
    q.canonicalize();
    return Rational(std::move(q));
  }

  Integer numerator() const { return v_.get_num(); }
  Integer denominator() const { return v_.get_den(); }
  bool is_integer() const { return v_.get_den() == 1; }
  bool is_zero() const { return v_ == 0; }
  int sign() const { return sgn(v_); }

  std::string str() const { return v_.get_str(); }
  double approx() const { return v_.get_d(); }

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.v_ == 0) throw DivisionByZeroError("rational division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
         : c > 0 ? std::strong_ordering::greater
                 : std::strong_ordering::equal;
  }

  friend Rational abs(const Rational& a) { return Rational(mpq_class(abs(a.v_))); }
  friend std::ostream& operator<<(std::ostream& os, const Rational& a) { return os << a.v_; }

private:
  explicit Rational(mpq_class q) : v_(std::move(q)) {}
  mpq_class v_;
};

inline std::string to_string(const Rational& q) { return q.str(); }

}  // namespace walkgauge

#endif
