#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace tropmoduli {

// Lattice coordinates and small exact integers. Inputs are desk-scale
// (coordinates well below 10^4), so 64-bit arithmetic never overflows in
// the integer geometry predicates.
using Int = long long;

// Arbitrary precision integers/rationals for height functionals, linear
// programming and rank computations, where intermediate values can grow.
using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline BigInt numerator(const Rat& r) { return boost::multiprecision::numerator(r); }
inline BigInt denominator(const Rat& r) { return boost::multiprecision::denominator(r); }

// cpp_rational's two-argument constructor rejects negative denominators.
inline Rat make_rat(BigInt num, BigInt den)
{
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return Rat(num, den);
}

// Malformed or out-of-domain input (bad polygon literal, wrong genus, ...).
class input_error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// A configured resource cap (lattice point count, triangulation count) was hit.
class cap_exceeded : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

inline Int gcd_int(Int a, Int b)
{
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        Int t = a % b;
        a = b;
        b = t;
    }
    return a;
}

// Floor division for possibly negative numerators.
inline Int floor_div(Int a, Int b)
{
    Int q = a / b, r = a % b;
    if (r != 0 && ((r < 0) != (b < 0))) --q;
    return q;
}

inline Int ceil_div(Int a, Int b) { return -floor_div(-a, b); }

}  // namespace tropmoduli
