#ifndef PACIOLI_DYADIC_HPP
#define PACIOLI_DYADIC_HPP

#include <mpfr.h>

#include <string>
#include <utility>

#include "pacioli/q5.hpp"

namespace pacioli {

// RAII wrapper over an mpfr_t. MPFR values are dyadic (mantissa * 2^exponent)
// and every operation is correctly rounded in the requested direction, which
// is exactly what the interval layer needs for reproducible outward bounds.
class Dyadic {
 public:
  explicit Dyadic(unsigned bits = 64) { mpfr_init2(v_, static_cast<mpfr_prec_t>(bits)); mpfr_set_zero(v_, 1); }
  Dyadic(const Dyadic& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
  Dyadic(Dyadic&& o) noexcept { mpfr_init2(v_, 2); mpfr_swap(v_, o.v_); }
  Dyadic& operator=(const Dyadic& o) {
    if (this != &o) { mpfr_set_prec(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
    return *this;
  }
  Dyadic& operator=(Dyadic&& o) noexcept { mpfr_swap(v_, o.v_); return *this; }
  ~Dyadic() { mpfr_clear(v_); }

  static Dyadic from_rat(const Rat& q, unsigned bits, mpfr_rnd_t rnd) {
    Dyadic d(bits);
    mpfr_set_q(d.v_, q.get_mpq_t(), rnd);
    return d;
  }
  static Dyadic from_double(double x, unsigned bits = 64) {
    Dyadic d(bits);
    mpfr_set_d(d.v_, x, MPFR_RNDN);  // exact: doubles are dyadic and bits >= 53 in use
    return d;
  }

  unsigned precision() const { return static_cast<unsigned>(mpfr_get_prec(v_)); }
  int sign() const { return mpfr_zero_p(v_) ? 0 : mpfr_sgn(v_); }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }
  int cmp(const Dyadic& o) const { return mpfr_cmp(v_, o.v_); }   // exact across precisions
  int cmp_rat(const Rat& q) const { return mpfr_cmp_q(v_, q.get_mpq_t()); }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

  // Exact conversion; the value is a dyadic rational.
  Rat to_rat() const;

  // Decimal rendering with `digits` significant digits, rounded in direction
  // `rnd`. Plain notation for small exponents, scientific otherwise.
  std::string decimal(size_t digits, mpfr_rnd_t rnd) const;

  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }

 private:
  mpfr_t v_;
};

// Closed interval [lo, hi] with dyadic endpoints; invariant lo <= hi. All
// combining operations round lo down and hi up at the target precision, so the
// true real value is always contained.
struct Interval {
  Dyadic lo, hi;

  Interval() = default;
  Interval(Dyadic l, Dyadic h) : lo(std::move(l)), hi(std::move(h)) {}

  static Interval from_rat(const Rat& q, unsigned bits);
  static Interval from_q5(const Q5& q, unsigned bits);

  // +1 if lo > 0, -1 if hi < 0, else 0 (zero inside or on the boundary).
  int sign() const;
  bool contains_zero() const { return lo.sign() <= 0 && hi.sign() >= 0; }
  bool contains_rat(const Rat& q) const { return lo.cmp_rat(q) <= 0 && hi.cmp_rat(q) >= 0; }
  bool is_point() const { return lo.cmp(hi) == 0; }
  Dyadic width(unsigned bits) const;     // hi - lo, rounded up
  Dyadic midpoint(unsigned bits) const;  // (lo + hi)/2, rounded to nearest

  static Interval add(const Interval& x, const Interval& y, unsigned bits);
  static Interval sub(const Interval& x, const Interval& y, unsigned bits);
  static Interval mul(const Interval& x, const Interval& y, unsigned bits);
  // Pre: 0 is not in y (caller certifies).
  static Interval div(const Interval& x, const Interval& y, unsigned bits);
  static Interval neg(const Interval& x);
  // Pre: x.lo >= 0 (caller clamps or rejects first).
  static Interval sqrt(const Interval& x, unsigned bits);
  // Endpoint-wise tightest common refinement; exact (no rounding). Pre: the
  // intervals overlap (they do whenever both contain the same true value).
  static Interval intersect(const Interval& x, const Interval& y);
};

}  // namespace pacioli

#endif
