#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace hkfs {

/// Arbitrary-precision rational, always kept in canonical form.
using BigRational = mpq_class;
using BigInt = mpz_class;

/// "p/q" in lowest terms, or "p" when the denominator is one.
std::string to_string(const BigRational& q);

/// Parses "p", "-p" or "p/q"; throws std::invalid_argument on malformed text
/// or a zero denominator.
BigRational parse_rational(std::string_view text);

/// Nearest double; only used for diagnostics and Monte-Carlo bookkeeping.
double to_double(const BigRational& q);

}  // namespace hkfs
