#include "conetoric/types.hpp"

#include <boost/multiprecision/integer.hpp>

#include <sstream>

namespace conetoric {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::ZeroVector: return "ZeroVector";
    case ErrorCode::RankMismatch: return "RankMismatch";
    case ErrorCode::NotFullDimensional: return "NotFullDimensional";
    case ErrorCode::DegenerateParallelogram: return "DegenerateParallelogram";
    case ErrorCode::DegenerateWedge: return "DegenerateWedge";
    case ErrorCode::NotPrimitive: return "NotPrimitive";
    case ErrorCode::NoNormals: return "NoNormals";
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::MalformedDocument: return "MalformedDocument";
  }
  return "Unknown";
}

Int floor_div(const Int& a, const Int& b) {
  Int q = a / b;
  if (a % b != 0 && ((a < 0) != (b < 0))) --q;
  return q;
}

Int gcd_all(const LatticeVector& v) {
  Int g = 0;
  for (const Int& x : v) g = boost::multiprecision::gcd(g, x);
  return g;
}

bool is_zero(const LatticeVector& v) {
  for (const Int& x : v)
    if (x != 0) return false;
  return true;
}

LatticeVector negated(const LatticeVector& v) {
  LatticeVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = -v[i];
  return out;
}

Int dot(const LatticeVector& a, const LatticeVector& b) {
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rat dot(const RationalVector& a, const LatticeVector& b) {
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * Rat(b[i]);
  return s;
}

Rat dot(const RationalVector& a, const RationalVector& b) {
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

RationalVector to_rational(const LatticeVector& v) {
  RationalVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = Rat(v[i]);
  return out;
}

bool lex_less(const LatticeVector& a, const LatticeVector& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

std::string to_string(const Int& x) { return x.str(); }

std::string to_string(const Rat& x) {
  if (boost::multiprecision::denominator(x) == 1)
    return boost::multiprecision::numerator(x).str();
  return boost::multiprecision::numerator(x).str() + "/" +
         boost::multiprecision::denominator(x).str();
}

namespace {
template <class Vec>
std::string vec_to_string(const Vec& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ',';
    os << to_string(v[i]);
  }
  os << ')';
  return os.str();
}
}  // namespace

std::string to_string(const LatticeVector& v) { return vec_to_string(v); }
std::string to_string(const RationalVector& v) { return vec_to_string(v); }

}  // namespace conetoric
