#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

namespace sd {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::rational<Int>;

inline int sgn(const Int& x) { return x == 0 ? 0 : (x < 0 ? -1 : 1); }
inline int sgn(const Rat& x) { return sgn(x.numerator()); }

} // namespace sd
