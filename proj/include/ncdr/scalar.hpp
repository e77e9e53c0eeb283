#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace ncdr {

/// Exact rational scalar. Every algebraic identity in the kernel is checked
/// with zero tolerance on this type.
using Scalar = mpq_class;

/// Parses "p", "-p" or "p/q" (optionally with a decimal point, "1.25").
/// Throws Error(ParseError) on malformed input or a zero denominator.
Scalar parse_scalar(std::string_view text);

/// Canonical text form: "p" for integers, "p/q" otherwise (lowest terms).
std::string to_string(const Scalar& value);

inline double to_double(const Scalar& value) { return value.get_d(); }

/// Exact binary value of a finite double.
Scalar from_double(double value);

/// Best rational approximation with denominator <= max_den (continued fractions).
Scalar best_rational(double value, std::int64_t max_den);

/// Snaps `value` to a rational with denominator <= max_den when it lies within
/// `tolerance`; returns nullopt otherwise.
std::optional<Scalar> snap_rational(double value, std::int64_t max_den, double tolerance);

Scalar factorial(unsigned n);

}  // namespace ncdr
