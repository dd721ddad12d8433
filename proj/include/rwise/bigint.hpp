#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace rwise {

using BigInt = boost::multiprecision::cpp_int;
/// Always reduced with a positive denominator.
using ExactRational = boost::multiprecision::cpp_rational;

}  // namespace rwise
