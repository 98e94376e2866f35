#include "pacioli/q5.hpp"

#include <cctype>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

#include "pacioli/errors.hpp"

namespace pacioli {

Rat make_rat(long n, long d) { return make_rat(mpz_class(n), mpz_class(d)); }

Rat make_rat(const mpz_class& n, const mpz_class& d) {
  if (d == 0) throw DivisionByZero();
  Rat r(n, d);
  r.canonicalize();
  return r;
}

Rat rat_from_decimal(const std::string& text) {
  const char* p = text.c_str();
  std::string digits;
  bool neg = false;
  if (*p == '+' || *p == '-') neg = (*p++ == '-');
  size_t int_len = 0;
  while (std::isdigit(static_cast<unsigned char>(*p))) digits.push_back(*p++), ++int_len;
  size_t frac_len = 0;
  if (*p == '.') {
    ++p;
    while (std::isdigit(static_cast<unsigned char>(*p))) digits.push_back(*p++), ++frac_len;
  }
  if (int_len + frac_len == 0) throw std::invalid_argument("not a decimal literal: " + text);
  long exp10 = 0;
  if (*p == 'e' || *p == 'E') {
    char* end = nullptr;
    exp10 = std::strtol(p + 1, &end, 10);
    if (end == p + 1) throw std::invalid_argument("bad exponent in: " + text);
    p = end;
  }
  if (*p != '\0') throw std::invalid_argument("trailing junk in decimal literal: " + text);

  mpz_class mantissa(digits.empty() ? "0" : digits, 10);
  if (neg) mantissa = -mantissa;
  long shift = exp10 - static_cast<long>(frac_len);
  mpz_class pow10;
  mpz_ui_pow_ui(pow10.get_mpz_t(), 10, static_cast<unsigned long>(shift < 0 ? -shift : shift));
  return shift >= 0 ? Rat(mantissa * pow10) : make_rat(mantissa, pow10);
}

std::optional<Rat> rat_sqrt(const Rat& r) {
  int s = sgn(r);
  if (s < 0) return std::nullopt;
  if (s == 0) return Rat(0);
  const mpz_class& num = r.get_num();
  const mpz_class& den = r.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
    return std::nullopt;
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  return make_rat(rn, rd);
}

Q5 Q5::phi() { return Q5(make_rat(1, 2), make_rat(1, 2)); }
Q5 Q5::phi_sq() { return Q5(make_rat(3, 2), make_rat(1, 2)); }

int Q5::sign() const {
  int sa = sgn(a_), sb = sgn(b_);
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // Opposite signs: compare a^2 with 5 b^2. Equality would make sqrt(5)
  // rational, so it cannot happen for nonzero a, b.
  int c = cmp(a_ * a_, 5 * b_ * b_);
  return c > 0 ? sa : sb;
}

Q5 Q5::inverse() const {
  if (is_zero()) throw DivisionByZero();
  Rat n = norm();  // nonzero: norm vanishes only at zero since sqrt(5) is irrational
  return Q5(a_ / n, -b_ / n);
}

std::optional<Q5> Q5::sqrt() const {
  int s = sign();
  if (s < 0) return std::nullopt;
  if (s == 0) return Q5();
  if (b_ == 0) {
    if (auto t = rat_sqrt(a_)) return Q5(*t);           // a = t^2
    if (auto t = rat_sqrt(a_ / 5)) return Q5(Rat(0), *t);  // a = 5 t^2
    return std::nullopt;
  }
  // (x + y sqrt5)^2 = a + b sqrt5 requires x^2 + 5 y^2 = a, 2 x y = b.
  // x^2 and 5 y^2 are then roots of z^2 - a z + 5 b^2/4, with discriminant
  // a^2 - 5 b^2 = norm(); the root must itself be a rational square.
  auto t = rat_sqrt(norm());
  if (!t) return std::nullopt;
  for (const Rat& root : {Rat((a_ + *t) / 2), Rat((a_ - *t) / 2)}) {
    auto x = rat_sqrt(root);
    if (!x || *x == 0) continue;
    Rat y = b_ / (2 * *x);
    Q5 cand(*x, y);
    if (cand * cand == *this) return cand.sign() >= 0 ? cand : -cand;
  }
  return std::nullopt;
}

double Q5::to_double() const { return a_.get_d() + b_.get_d() * 2.2360679774997896; }

std::string Q5::str() const {
  std::ostringstream os;
  os << a_.get_str();
  if (b_ != 0) os << (sgn(b_) < 0 ? " - " : " + ") << Rat(abs(b_)).get_str() << "*sqrt(5)";
  return os.str();
}

}  // namespace pacioli
