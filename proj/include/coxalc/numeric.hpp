#pragma once

// Exact arithmetic primitives shared by the whole library.  All core
// computations run over arbitrary-precision integers and rationals; no
// floating point enters any verification path.

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace coxalc {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::rational<Int>;

inline Int floor_div(const Int& a, const Int& b) {
    if (b == 0) throw std::invalid_argument("floor_div: division by zero");
    Int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

// Greatest integer <= r.
inline Int floor_rat(const Rat& r) { return floor_div(r.numerator(), r.denominator()); }

inline std::string to_string(const Int& n) { return n.str(); }

inline std::string to_string(const Rat& r) {
    if (r.denominator() == 1) return r.numerator().str();
    return r.numerator().str() + "/" + r.denominator().str();
}

}  // namespace coxalc
