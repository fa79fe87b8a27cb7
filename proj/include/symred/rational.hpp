#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace symred {

// mpq_class keeps every value canonical (lowest terms, positive
// denominator, zero as 0/1) after each arithmetic operation.
using Rational = mpq_class;
using RatVector = std::vector<Rational>;

/// Parses "p" or "p/q" (optional leading sign). Throws InputError.
Rational parse_rational(std::string_view text);

/// "p" when the denominator is 1, otherwise "p/q".
std::string to_string(const Rational& q);

/// "[a, b, c]"
std::string to_string(const RatVector& v);

bool is_integer(const Rational& q);
bool is_zero(const RatVector& v);

Rational dot(const RatVector& a, const RatVector& b);

}  // namespace symred
