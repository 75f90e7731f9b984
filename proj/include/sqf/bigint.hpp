#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace sqf {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt ipow(std::uint64_t base, unsigned exp) {
  return boost::multiprecision::pow(BigInt(base), exp);
}

}  // namespace sqf
