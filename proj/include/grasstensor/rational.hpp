#ifndef GRASSTENSOR_RATIONAL_HPP
#define GRASSTENSOR_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace grasstensor {

// Exact scalar used throughout construction and the rank oracle.  Stored in
// lowest terms with positive denominator by the backend.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer numerator(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Integer denominator(const Rational& q) { return boost::multiprecision::denominator(q); }

/// Parses "5", "-3/7" or an exact decimal such as "1.25" (= 5/4).
Rational parse_rational(const std::string& text);

/// Formats as "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& q);

/// Best-effort conversion for the floating-point lane.
inline double to_double(const Rational& q) { return q.template convert_to<double>(); }

}  // namespace grasstensor

#endif
