#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

namespace ksg {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

using RatVec = std::vector<Rat>;
using IntVec = std::vector<int>;

/// Parses "p/q", "p", or "-p/q" (arbitrary precision). Throws ksg::Error
/// with code ParseError on malformed input or zero denominator.
Rat parse_rational(const std::string& text);

/// Canonical text form: "p" for integers, "p/q" otherwise.
std::string rational_to_string(const Rat& value);

inline bool is_integer(const Rat& value) {
  return boost::multiprecision::denominator(value) == 1;
}

double to_double(const Rat& value);

}  // namespace ksg
