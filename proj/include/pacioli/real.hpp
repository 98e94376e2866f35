#ifndef PACIOLI_REAL_HPP
#define PACIOLI_REAL_HPP

#include <memory>
#include <optional>

#include "pacioli/dyadic.hpp"
#include "pacioli/q5.hpp"

namespace pacioli {

struct SignPolicy {
  unsigned start_bits = 64;
  unsigned max_bits = 4096;
};

// Result of adaptive sign certification. Positive/Negative come with an
// interval certificate excluding zero; ExactZero comes from the exact layer
// (bits_used == 0 when no interval work was needed); Undecided reports the
// precision ladder exhausted and the final achieved width.
struct SignVerdict {
  enum class Kind { Negative, ExactZero, Positive, Undecided };
  Kind kind = Kind::Undecided;
  unsigned bits_used = 0;
  std::optional<Interval> certificate;  // set for interval-certified Positive/Negative
  std::optional<Dyadic> final_width;    // set for Undecided

  bool decided() const { return kind != Kind::Undecided; }
  bool is_zero() const { return kind == Kind::ExactZero; }
  int value() const {  // -1 / 0 / +1; 0 also for Undecided (check decided())
    if (kind == Kind::Positive) return 1;
    if (kind == Kind::Negative) return -1;
    return 0;
  }
};

// Immutable real-number expression. Copies share subgraphs; structural
// sharing is what makes repeated subexpressions cheap and keeps rounding
// behavior identical across uses. Subtrees whose value provably lies in
// Q(sqrt 5) carry that exact value and short-circuit evaluation.
class Real {
 public:
  Real() : Real(Q5()) {}
  Real(long n) : Real(Q5(n)) {}          // NOLINT: implicit by design
  Real(const Rat& q) : Real(Q5(q)) {}    // NOLINT: implicit by design
  Real(const Q5& q);                     // NOLINT: implicit by design

  // Exact leaf from a double read from external input; doubles are dyadic
  // rationals, so this is lossless.
  static Real from_double(double x);

  friend Real operator+(const Real& x, const Real& y);
  friend Real operator-(const Real& x, const Real& y);
  friend Real operator*(const Real& x, const Real& y);
  // Throws DivisionByZero if y is exactly zero.
  friend Real operator/(const Real& x, const Real& y);
  friend Real operator-(const Real& x);

  // Square root. Throws SqrtOfNegative{straddled=false} if x is exactly
  // negative. Collapses to an exact leaf when the root lies in Q(sqrt 5).
  static Real sqrt(const Real& x);
  // mul(x, x) with a shared operand, recognizable as a syntactic square.
  static Real sq(const Real& x);

  // Exact value when the whole expression collapsed into the field.
  const std::optional<Q5>& exact() const;

  // Certified enclosure at the given working precision (>= 8 bits). May throw
  // DivisorStraddlesZero / SqrtOfNegative{straddled=true} when the precision
  // is too low to separate a divisor or sqrt operand from zero.
  Interval eval(unsigned bits) const;

  // Adaptive sign certification on a doubling precision ladder. Never
  // certifies a wrong sign; returns Undecided only after max_bits.
  SignVerdict sign(const SignPolicy& policy = {}) const;

  // Enclosure refined by escalating precision until width <= bound (given as
  // an exact rational). Successive results are intersected, so tightening the
  // bound can only shrink the interval. Returns the interval and the bits
  // used, or nullopt for the interval if max_bits was insufficient.
  struct Refined {
    Interval interval;
    unsigned bits_used;
    bool reached;
  };
  Refined refine(const Rat& width_bound, const SignPolicy& policy = {}) const;

  double approx() const { return eval(64).midpoint(64).to_double(); }  // diagnostics

  struct Node;
  const Node* node() const { return node_.get(); }

 private:
  explicit Real(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

}  // namespace pacioli

#endif
