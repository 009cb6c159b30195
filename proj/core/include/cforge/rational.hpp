#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace cforge::sym {

using Int = boost::multiprecision::cpp_int;

inline Int int_gcd(const Int& a, const Int& b) {
  return boost::multiprecision::gcd(a, b);
}

inline Int int_lcm(const Int& a, const Int& b) {
  if (a == 0 || b == 0) return 0;
  return a / int_gcd(a, b) * b;
}

}  // namespace cforge::sym
