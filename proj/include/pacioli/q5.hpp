#ifndef PACIOLI_Q5_HPP
#define PACIOLI_Q5_HPP

#include <gmpxx.h>

#include <optional>
#include <string>

namespace pacioli {

using Rat = mpq_class;

// Builds a canonical rational n/d. mpq_class(n, d) alone does not reduce.
Rat make_rat(long n, long d = 1);
Rat make_rat(const mpz_class& n, const mpz_class& d);

// Parses a plain decimal literal ("-0.125", "3", "1e-30", "4.2e5") into an
// exact rational. Throws std::invalid_argument on anything else.
Rat rat_from_decimal(const std::string& text);

// Exact square root of a rational, if it is a perfect square.
std::optional<Rat> rat_sqrt(const Rat& r);

// An element a + b*sqrt(5) of the real quadratic field Q(sqrt 5).
// Representation is unique because sqrt(5) is irrational; a and b are kept
// canonical by mpq_class arithmetic. All operations and comparisons are exact.
class Q5 {
 public:
  Q5() : a_(0), b_(0) {}
  Q5(long n) : a_(n), b_(0) {}            // NOLINT: implicit by design
  Q5(const Rat& a) : a_(a), b_(0) {}      // NOLINT: implicit by design
  Q5(Rat a, Rat b) : a_(std::move(a)), b_(std::move(b)) {}

  static Q5 sqrt5() { return Q5(Rat(0), Rat(1)); }
  static Q5 phi();       // (1 + sqrt 5) / 2
  static Q5 phi_sq();    // phi + 1

  const Rat& a() const { return a_; }
  const Rat& b() const { return b_; }

  bool is_zero() const { return a_ == 0 && b_ == 0; }
  bool is_rational() const { return b_ == 0; }

  int sign() const;                   // exact: -1, 0, +1
  Q5 conjugate() const { return Q5(a_, -b_); }
  Rat norm() const { return a_ * a_ - 5 * b_ * b_; }  // field norm a^2 - 5 b^2

  Q5 inverse() const;                 // throws DivisionByZero on zero
  std::optional<Q5> sqrt() const;     // exact square root inside the field, if any

  double to_double() const;           // lossy, diagnostics only
  std::string str() const;            // "a + b*sqrt(5)" rendering, diagnostics only

  friend Q5 operator+(const Q5& x, const Q5& y) { return Q5(x.a_ + y.a_, x.b_ + y.b_); }
  friend Q5 operator-(const Q5& x, const Q5& y) { return Q5(x.a_ - y.a_, x.b_ - y.b_); }
  friend Q5 operator-(const Q5& x) { return Q5(-x.a_, -x.b_); }
  friend Q5 operator*(const Q5& x, const Q5& y) {
    return Q5(x.a_ * y.a_ + 5 * x.b_ * y.b_, x.a_ * y.b_ + x.b_ * y.a_);
  }
  friend Q5 operator/(const Q5& x, const Q5& y) { return x * y.inverse(); }

  Q5& operator+=(const Q5& y) { return *this = *this + y; }
  Q5& operator-=(const Q5& y) { return *this = *this - y; }
  Q5& operator*=(const Q5& y) { return *this = *this * y; }
  Q5& operator/=(const Q5& y) { return *this = *this / y; }

  friend bool operator==(const Q5& x, const Q5& y) { return x.a_ == y.a_ && x.b_ == y.b_; }
  friend bool operator!=(const Q5& x, const Q5& y) { return !(x == y); }
  friend bool operator<(const Q5& x, const Q5& y) { return (x - y).sign() < 0; }
  friend bool operator>(const Q5& x, const Q5& y) { return (x - y).sign() > 0; }
  friend bool operator<=(const Q5& x, const Q5& y) { return (x - y).sign() <= 0; }
  friend bool operator>=(const Q5& x, const Q5& y) { return (x - y).sign() >= 0; }

 private:
  Rat a_, b_;
};

}  // namespace pacioli

#endif
