#include "pacioli/real.hpp"

#include <stdexcept>
#include <unordered_map>

#include "pacioli/errors.hpp"

namespace pacioli {

struct Real::Node {
  enum class Kind { Leaf, Add, Sub, Mul, Div, Neg, Sqrt } kind = Kind::Leaf;
  std::shared_ptr<const Node> lhs, rhs;
  std::optional<Q5> exact;  // always set for Leaf; set elsewhere when the subtree collapses
};

namespace {

using NodePtr = std::shared_ptr<const Real::Node>;
using Kind = Real::Node::Kind;

NodePtr leaf(Q5 v) {
  auto n = std::make_shared<Real::Node>();
  n->kind = Kind::Leaf;
  n->exact = std::move(v);
  return n;
}

NodePtr binary(Kind k, NodePtr l, NodePtr r) {
  auto n = std::make_shared<Real::Node>();
  n->kind = k;
  n->lhs = std::move(l);
  n->rhs = std::move(r);
  return n;
}

bool is_syntactic_square(const Real::Node& n) { return n.kind == Kind::Mul && n.lhs == n.rhs; }

using Memo = std::unordered_map<const Real::Node*, Interval>;

const Interval& eval_node(const NodePtr& node, unsigned bits, Memo& memo) {
  if (auto it = memo.find(node.get()); it != memo.end()) return it->second;
  Interval out;
  if (node->exact) {
    out = Interval::from_q5(*node->exact, bits);
  } else {
    switch (node->kind) {
      case Kind::Leaf:
        out = Interval::from_q5(*node->exact, bits);
        break;
      case Kind::Add:
        out = Interval::add(eval_node(node->lhs, bits, memo), eval_node(node->rhs, bits, memo), bits);
        break;
      case Kind::Sub:
        out = Interval::sub(eval_node(node->lhs, bits, memo), eval_node(node->rhs, bits, memo), bits);
        break;
      case Kind::Mul:
        out = Interval::mul(eval_node(node->lhs, bits, memo), eval_node(node->rhs, bits, memo), bits);
        break;
      case Kind::Div: {
        const Interval& den = eval_node(node->rhs, bits, memo);
        if (den.contains_zero()) throw DivisorStraddlesZero(bits);
        out = Interval::div(eval_node(node->lhs, bits, memo), den, bits);
        break;
      }
      case Kind::Neg:
        out = Interval::neg(eval_node(node->lhs, bits, memo));
        break;
      case Kind::Sqrt: {
        Interval op = eval_node(node->lhs, bits, memo);
        if (op.hi.sign() < 0) throw SqrtOfNegative(false, bits);
        if (op.lo.sign() < 0) {
          // A square of a shared subexpression is nonnegative by identity, so
          // clamping its enclosure at zero stays sound. Anything else must be
          // separated from zero by more precision.
          if (!is_syntactic_square(*node->lhs)) throw SqrtOfNegative(true, bits);
          op.lo = Dyadic(bits);  // zero
        }
        out = Interval::sqrt(op, bits);
        break;
      }
    }
  }
  return memo.try_emplace(node.get(), std::move(out)).first->second;
}

}  // namespace

Real::Real(const Q5& q) : node_(leaf(q)) {}

Real Real::from_double(double x) {
  Rat q;
  mpq_set_d(q.get_mpq_t(), x);
  return Real(q);
}

const std::optional<Q5>& Real::exact() const { return node_->exact; }

Real operator+(const Real& x, const Real& y) {
  if (x.node_->exact && y.node_->exact) return Real(leaf(*x.node_->exact + *y.node_->exact));
  return Real(binary(Kind::Add, x.node_, y.node_));
}

Real operator-(const Real& x, const Real& y) {
  if (x.node_->exact && y.node_->exact) return Real(leaf(*x.node_->exact - *y.node_->exact));
  return Real(binary(Kind::Sub, x.node_, y.node_));
}

Real operator*(const Real& x, const Real& y) {
  if (x.node_->exact && y.node_->exact) return Real(leaf(*x.node_->exact * *y.node_->exact));
  return Real(binary(Kind::Mul, x.node_, y.node_));
}

Real operator/(const Real& x, const Real& y) {
  if (y.node_->exact && y.node_->exact->is_zero()) throw DivisionByZero();
  if (x.node_->exact && y.node_->exact) return Real(leaf(*x.node_->exact / *y.node_->exact));
  return Real(binary(Kind::Div, x.node_, y.node_));
}

Real operator-(const Real& x) {
  if (x.node_->exact) return Real(leaf(-*x.node_->exact));
  return Real(binary(Kind::Neg, x.node_, nullptr));
}

Real Real::sqrt(const Real& x) {
  if (x.node_->exact) {
    if (x.node_->exact->sign() < 0) throw SqrtOfNegative(false, 0);
    if (auto root = x.node_->exact->sqrt()) return Real(leaf(*root));
  }
  return Real(binary(Kind::Sqrt, x.node_, nullptr));
}

Real Real::sq(const Real& x) {
  if (x.node_->exact) return Real(leaf(*x.node_->exact * *x.node_->exact));
  return Real(binary(Kind::Mul, x.node_, x.node_));
}

Interval Real::eval(unsigned bits) const {
  if (bits < 8) throw std::invalid_argument("eval precision must be at least 8 bits");
  Memo memo;
  return eval_node(node_, bits, memo);
}

SignVerdict Real::sign(const SignPolicy& policy) const {
  if (node_->exact) {
    SignVerdict v;
    int s = node_->exact->sign();
    v.kind = s == 0 ? SignVerdict::Kind::ExactZero
                    : (s > 0 ? SignVerdict::Kind::Positive : SignVerdict::Kind::Negative);
    v.bits_used = 0;
    return v;
  }
  std::optional<Interval> acc;
  unsigned bits = policy.start_bits;
  for (;;) {
    bool evaluated = false;
    try {
      Interval iv = eval(bits);
      acc = acc ? Interval::intersect(*acc, iv) : iv;
      evaluated = true;
    } catch (const DivisorStraddlesZero&) {
      if (bits >= policy.max_bits) throw;
    } catch (const SqrtOfNegative& e) {
      if (!e.straddled || bits >= policy.max_bits) throw;
    }
    if (evaluated) {
      int s = acc->sign();
      if (s != 0) {
        SignVerdict v;
        v.kind = s > 0 ? SignVerdict::Kind::Positive : SignVerdict::Kind::Negative;
        v.bits_used = bits;
        v.certificate = acc;
        return v;
      }
    }
    if (bits >= policy.max_bits) break;
    bits = std::min(bits * 2, policy.max_bits);
  }
  SignVerdict v;
  v.kind = SignVerdict::Kind::Undecided;
  v.bits_used = policy.max_bits;
  v.final_width = acc->width(policy.max_bits);
  return v;
}

Real::Refined Real::refine(const Rat& width_bound, const SignPolicy& policy) const {
  std::optional<Interval> acc;
  unsigned bits = policy.start_bits;
  for (;;) {
    try {
      Interval iv = eval(bits);
      acc = acc ? Interval::intersect(*acc, iv) : iv;
      if (acc->width(bits).cmp_rat(width_bound) <= 0) return {*acc, bits, true};
    } catch (const DivisorStraddlesZero&) {
      if (bits >= policy.max_bits) throw;
    } catch (const SqrtOfNegative& e) {
      if (!e.straddled || bits >= policy.max_bits) throw;
    }
    if (bits >= policy.max_bits) break;
    bits = std::min(bits * 2, policy.max_bits);
  }
  return {*acc, policy.max_bits, false};
}

}  // namespace pacioli
