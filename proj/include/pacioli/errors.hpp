#ifndef PACIOLI_ERRORS_HPP
#define PACIOLI_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace pacioli {

// Base class for every error this library throws on purpose.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// -- scalar layer ------------------------------------------------------------

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by exact zero") {}
};

// Thrown when a sqrt operand is certainly negative (straddled == false), or
// when at the caller's precision the operand interval still straddles zero
// and is not a syntactic square (straddled == true; sign drivers escalate).
class SqrtOfNegative : public Error {
 public:
  SqrtOfNegative(bool straddled_, unsigned bits_)
      : Error(straddled_ ? "sqrt operand straddles zero at " + std::to_string(bits_) + " bits"
                         : "sqrt of a negative value"),
        straddled(straddled_),
        bits(bits_) {}
  bool straddled;
  unsigned bits;
};

class DivisorStraddlesZero : public Error {
 public:
  explicit DivisorStraddlesZero(unsigned bits_)
      : Error("divisor interval straddles zero at " + std::to_string(bits_) + " bits"),
        bits(bits_) {}
  unsigned bits;
};

// -- mesh layer --------------------------------------------------------------

class NonManifoldEdge : public Error {
 public:
  NonManifoldEdge(int a, int b, int count)
      : Error("edge (" + std::to_string(a) + "," + std::to_string(b) + ") borders " +
              std::to_string(count) + " faces, expected 2") {}
};

class OrientationMismatch : public Error {
 public:
  OrientationMismatch(int a, int b)
      : Error("edge (" + std::to_string(a) + "," + std::to_string(b) +
              ") traversed twice in the same direction") {}
};

class DegenerateFace : public Error {
 public:
  explicit DegenerateFace(int face)
      : Error("face " + std::to_string(face) + " has a zero-area normal") {}
};

class EquilateralInfeasible : public Error {
 public:
  explicit EquilateralInfeasible(int arity_)
      : Error("equilateral elevation is infeasible for a " + std::to_string(arity_) +
              "-gon: its circumradius is not smaller than its edge"),
        arity(arity_) {}
  int arity;
};

class NegativeHeight : public Error {
 public:
  explicit NegativeHeight(int arity)
      : Error("explicit height for arity " + std::to_string(arity) + " is negative") {}
};

class MissingExplicitHeight : public Error {
 public:
  explicit MissingExplicitHeight(int arity_)
      : Error("no explicit height given for faces of arity " + std::to_string(arity_)),
        arity(arity_) {}
  int arity;
};

// -- predicates layer --------------------------------------------------------

class CollinearBase : public Error {
 public:
  CollinearBase() : Error("first three points do not span a plane") {}
};

class NotAPentagon : public Error {
 public:
  explicit NotAPentagon(int face)
      : Error(face < 0 ? std::string("the solid has no pentagonal face")
                       : "face " + std::to_string(face) + " is not a pentagon") {}
};

class SymmetryUnavailable : public Error {
 public:
  explicit SymmetryUnavailable(const std::string& why)
      : Error("order-5 symmetry certificate unavailable: " + why) {}
};

class ZeroDirection : public Error {
 public:
  ZeroDirection() : Error("contact direction cannot be certified nonzero") {}
};

class ToleranceUnreachable : public Error {
 public:
  explicit ToleranceUnreachable(const std::string& why)
      : Error("height tolerance unreachable: " + why) {}
};

// -- model_io layer ----------------------------------------------------------

class MalformedHeader : public Error {
 public:
  explicit MalformedHeader(const std::string& why) : Error("malformed OFF header: " + why) {}
};

class CountMismatch : public Error {
 public:
  explicit CountMismatch(const std::string& why) : Error("OFF count mismatch: " + why) {}
};

class IndexOutOfRange : public Error {
 public:
  IndexOutOfRange(long idx, long n)
      : Error("face references vertex " + std::to_string(idx) + ", valid range is [0," +
              std::to_string(n) + ")") {}
};

}  // namespace pacioli

#endif
