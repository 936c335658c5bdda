#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <string>

namespace qwx {

// Exact arithmetic only. Nothing in this project touches floating point.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Canonical printing: gcd-reduced, denominator > 0, "p" when the
// denominator is 1 and "p/q" otherwise.
std::string rational_str(const Rational& x);

// Accepts "p", "p/q" and an optional leading sign on p; q must be a
// positive integer literal. Returns nullopt on malformed input.
std::optional<Rational> parse_rational(const std::string& s);

Integer rational_floor(const Rational& x);
Integer rational_ceil(const Rational& x);

// FNV-1a, used for the echoed input hash in result documents.
std::uint64_t fnv1a64(const std::string& data);
std::string fnv1a64_hex(const std::string& data);

}  // namespace qwx
