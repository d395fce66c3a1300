#include "posprob/numeric.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <iomanip>
#include <sstream>

namespace posprob {

std::string fraction_string(const Rational& r) {
  std::ostringstream os;
  os << numerator(r);
  if (denominator(r) != 1) os << "/" << denominator(r);
  return os.str();
}

std::string decimal_string(const Rational& r, int digits) {
  using Float = boost::multiprecision::cpp_bin_float_50;
  Float v = Float(numerator(r)) / Float(denominator(r));
  std::ostringstream os;
  os << std::setprecision(digits) << v;
  return os.str();
}

}  // namespace posprob
