#include "pacioli/dyadic.hpp"

#include <cassert>
#include <cstdlib>
#include <stdexcept>

namespace pacioli {

Rat Dyadic::to_rat() const {
  if (!is_finite()) throw std::domain_error("to_rat on non-finite dyadic");
  mpq_class q;
  mpfr_get_q(q.get_mpq_t(), v_);
  return q;
}

std::string Dyadic::decimal(size_t digits, mpfr_rnd_t rnd) const {
  if (mpfr_zero_p(v_)) return "0";
  if (!is_finite()) throw std::domain_error("decimal on non-finite dyadic");
  mpfr_exp_t e = 0;
  char* raw = mpfr_get_str(nullptr, &e, 10, digits, v_, rnd);
  std::string mant(raw);
  mpfr_free_str(raw);
  std::string sign;
  if (mant[0] == '-') {
    sign = "-";
    mant.erase(0, 1);
  }
  // mant is `digits` digits d1 d2 ...; value = 0.d1d2... * 10^e.
  std::string out;
  if (e >= 1 && e <= 40 && static_cast<size_t>(e) <= mant.size() + 20) {
    size_t k = static_cast<size_t>(e);
    if (k >= mant.size()) {
      out = mant + std::string(k - mant.size(), '0');
    } else {
      out = mant.substr(0, k) + "." + mant.substr(k);
    }
  } else if (e <= 0 && e >= -8) {
    out = "0." + std::string(static_cast<size_t>(-e), '0') + mant;
  } else {
    out = mant.substr(0, 1);
    if (mant.size() > 1) out += "." + mant.substr(1);
    out += "e" + std::to_string(static_cast<long>(e - 1));
  }
  // Trim trailing zeros in the fraction part (keep at least one digit).
  auto dot = out.find('.');
  if (dot != std::string::npos && out.find('e') == std::string::npos) {
    size_t last = out.find_last_not_of('0');
    if (out[last] == '.') last--;
    out.erase(last + 1);
  }
  return sign + out;
}

Interval Interval::from_rat(const Rat& q, unsigned bits) {
  return Interval(Dyadic::from_rat(q, bits, MPFR_RNDD), Dyadic::from_rat(q, bits, MPFR_RNDU));
}

Interval Interval::from_q5(const Q5& q, unsigned bits) {
  Interval a = from_rat(q.a(), bits);
  if (q.b() == 0) return a;
  Dyadic s_lo(bits), s_hi(bits);
  mpfr_sqrt_ui(s_lo.get(), 5, MPFR_RNDD);
  mpfr_sqrt_ui(s_hi.get(), 5, MPFR_RNDU);
  Interval root5(std::move(s_lo), std::move(s_hi));
  return add(a, mul(from_rat(q.b(), bits), root5, bits), bits);
}

int Interval::sign() const {
  if (lo.sign() > 0) return 1;
  if (hi.sign() < 0) return -1;
  return 0;
}

Dyadic Interval::width(unsigned bits) const {
  Dyadic w(bits);
  mpfr_sub(w.get(), hi.get(), lo.get(), MPFR_RNDU);
  return w;
}

Dyadic Interval::midpoint(unsigned bits) const {
  Dyadic m(bits);
  mpfr_add(m.get(), lo.get(), hi.get(), MPFR_RNDN);
  mpfr_div_2ui(m.get(), m.get(), 1, MPFR_RNDN);
  return m;
}

Interval Interval::add(const Interval& x, const Interval& y, unsigned bits) {
  Dyadic l(bits), h(bits);
  mpfr_add(l.get(), x.lo.get(), y.lo.get(), MPFR_RNDD);
  mpfr_add(h.get(), x.hi.get(), y.hi.get(), MPFR_RNDU);
  return Interval(std::move(l), std::move(h));
}

Interval Interval::sub(const Interval& x, const Interval& y, unsigned bits) {
  Dyadic l(bits), h(bits);
  mpfr_sub(l.get(), x.lo.get(), y.hi.get(), MPFR_RNDD);
  mpfr_sub(h.get(), x.hi.get(), y.lo.get(), MPFR_RNDU);
  return Interval(std::move(l), std::move(h));
}

Interval Interval::mul(const Interval& x, const Interval& y, unsigned bits) {
  const mpfr_srcptr xs[2] = {x.lo.get(), x.hi.get()};
  const mpfr_srcptr ys[2] = {y.lo.get(), y.hi.get()};
  Dyadic l(bits), h(bits), t(bits);
  bool first = true;
  for (auto xe : xs)
    for (auto ye : ys) {
      mpfr_mul(t.get(), xe, ye, MPFR_RNDD);
      if (first || t.cmp(l) < 0) l = t;
      mpfr_mul(t.get(), xe, ye, MPFR_RNDU);
      if (first || t.cmp(h) > 0) h = t;
      first = false;
    }
  return Interval(std::move(l), std::move(h));
}

Interval Interval::div(const Interval& x, const Interval& y, unsigned bits) {
  assert(!y.contains_zero());
  const mpfr_srcptr xs[2] = {x.lo.get(), x.hi.get()};
  const mpfr_srcptr ys[2] = {y.lo.get(), y.hi.get()};
  Dyadic l(bits), h(bits), t(bits);
  bool first = true;
  for (auto xe : xs)
    for (auto ye : ys) {
      mpfr_div(t.get(), xe, ye, MPFR_RNDD);
      if (first || t.cmp(l) < 0) l = t;
      mpfr_div(t.get(), xe, ye, MPFR_RNDU);
      if (first || t.cmp(h) > 0) h = t;
      first = false;
    }
  return Interval(std::move(l), std::move(h));
}

Interval Interval::neg(const Interval& x) {
  Dyadic l(x.hi.precision()), h(x.lo.precision());
  mpfr_neg(l.get(), x.hi.get(), MPFR_RNDD);  // exact at equal precision
  mpfr_neg(h.get(), x.lo.get(), MPFR_RNDU);
  return Interval(std::move(l), std::move(h));
}

Interval Interval::sqrt(const Interval& x, unsigned bits) {
  assert(x.lo.sign() >= 0);
  Dyadic l(bits), h(bits);
  mpfr_sqrt(l.get(), x.lo.get(), MPFR_RNDD);
  mpfr_sqrt(h.get(), x.hi.get(), MPFR_RNDU);
  return Interval(std::move(l), std::move(h));
}

Interval Interval::intersect(const Interval& x, const Interval& y) {
  Interval out(x.lo.cmp(y.lo) >= 0 ? x.lo : y.lo, x.hi.cmp(y.hi) <= 0 ? x.hi : y.hi);
  assert(out.lo.cmp(out.hi) <= 0);
  return out;
}

}  // namespace pacioli
