#pragma once

#include <gmpxx.h>

#include <compare>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

namespace ratlp {

/// Exact arbitrary-precision rational scalar.
///
/// Every value is kept in canonical form: the denominator is positive and
/// shares no common factor with the numerator.  All arithmetic is exact;
/// there is no rounding anywhere.  Division by zero throws std::domain_error
/// instead of trapping inside GMP.
class Rat {
public:
  Rat() : v_(0) {}
  Rat(int n) : v_(n) {}
  Rat(long n) : v_(n) {}
  Rat(int n, int d) : Rat(static_cast<long>(n), static_cast<long>(d)) {}
  Rat(long n, long d);

  /// Parse "p" or "p/q" with optional leading minus, base 10, q > 0.
  /// Anything else (including "p/0", signs on q, whitespace) yields nullopt.
  static std::optional<Rat> parse(std::string_view text);

  /// Renders as "p" for integers, "p/q" otherwise, denominator positive.
  std::string to_string() const { return v_.get_str(); }

  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }

  int sign() const { return sgn(v_); }
  bool is_zero() const { return sgn(v_) == 0; }

  Rat operator-() const;

  Rat& operator+=(const Rat& o);
  Rat& operator-=(const Rat& o);
  Rat& operator*=(const Rat& o);
  Rat& operator/=(const Rat& o);  // throws std::domain_error when o == 0

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

  friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    const int c = cmp(a.v_, b.v_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rat& r) {
    return os << r.v_.get_str();
  }

private:
  mpq_class v_;
};

Rat abs(const Rat& r);

}  // namespace ratlp
