#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace conetoric {

// All arithmetic in this library is exact: arbitrary-precision integers for
// lattice data, rationals for solving and membership tests. No floating point.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// A point of Z^n. The ambient rank is carried by the containing object
// (matrix, cone, ...) and checked at the API boundaries.
using LatticeVector = std::vector<Int>;
using RationalVector = std::vector<Rat>;

enum class ErrorCode {
  ZeroVector,
  RankMismatch,
  NotFullDimensional,
  DegenerateParallelogram,
  DegenerateWedge,
  NotPrimitive,
  NoNormals,
  InvalidInput,
  MalformedDocument,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

const char* error_code_name(ErrorCode code);

// Division rounding toward negative infinity (cpp_int's operator/ truncates).
Int floor_div(const Int& a, const Int& b);

// Non-negative gcd of all coordinates; 0 for the zero vector.
Int gcd_all(const LatticeVector& v);

bool is_zero(const LatticeVector& v);

LatticeVector negated(const LatticeVector& v);

Int dot(const LatticeVector& a, const LatticeVector& b);
Rat dot(const RationalVector& a, const LatticeVector& b);
Rat dot(const RationalVector& a, const RationalVector& b);

RationalVector to_rational(const LatticeVector& v);

// Canonical ordering used everywhere a deterministic vector order is needed.
bool lex_less(const LatticeVector& a, const LatticeVector& b);

std::string to_string(const Int& x);
std::string to_string(const Rat& x);
std::string to_string(const LatticeVector& v);   // "(1,0,-2)"
std::string to_string(const RationalVector& v);  // "(1/2,0)"

}  // namespace conetoric
