#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace plie {

// Exact rational coefficients. cpp_rational keeps the canonical form
// (positive denominator, coprime) after every operation.
using Scalar = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

// Parses "p/q" or "p". Rejects zero denominators and non-rational text.
Scalar scalar_from_string(const std::string& s);

// "p/q", or "p" when the denominator is 1.
std::string scalar_to_string(const Scalar& x);

}  // namespace plie
