// Exact arithmetic types shared by every module.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace posprob {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// "p/q" in lowest terms; whole numbers print without "/1".
std::string fraction_string(const Rational& r);

// Decimal approximation to `digits` significant figures. Exact enough for
// display of values as small as 2^-2400, which double cannot represent.
std::string decimal_string(const Rational& r, int digits = 6);

}  // namespace posprob
