#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace tricolor {

// Exact arbitrary-precision rational used for every threshold comparison
// against integer degrees and set sizes.
using Rational = boost::multiprecision::cpp_rational;

inline Rational ratio(std::int64_t num, std::int64_t den = 1) { return Rational(num, den); }

// Largest integer <= q / smallest integer >= q.
std::int64_t floor_of(const Rational& q);
std::int64_t ceil_of(const Rational& q);

double to_double(const Rational& q);

// "a/b" or "a"; also accepts decimal notation such as "0.25".
Rational parse_rational(const std::string& text);
std::string to_string(const Rational& q);

}  // namespace tricolor
