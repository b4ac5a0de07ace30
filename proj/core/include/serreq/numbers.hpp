#ifndef SERREQ_NUMBERS_HPP
#define SERREQ_NUMBERS_HPP

#include <boost/multiprecision/cpp_int.hpp>

namespace serreq {

// Exact arithmetic throughout; no fixed-width shortcuts.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer gcd(const Integer& a, const Integer& b) {
  return boost::multiprecision::gcd(a, b);
}

}  // namespace serreq

#endif
