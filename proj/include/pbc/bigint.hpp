#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace pbc {

using BigInt = boost::multiprecision::cpp_int;

inline BigInt abs(const BigInt& x) { return x < 0 ? BigInt(-x) : x; }

}  // namespace pbc
