#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace fran {

/// Arbitrary-precision exact rational. All combinatorial NDT quantities
/// (packet counts, fronthaul/edge NDTs, envelope breakpoints) live here.
using Rational = mpq_class;

/// num/den in canonical form. Throws std::invalid_argument on den == 0.
Rational ratio(std::int64_t num, std::int64_t den = 1);

/// Accepts integers ("3"), fractions ("3/4"), decimals ("0.25") and
/// scientific notation ("1e-3"); the result is the exact value written.
Rational parse_rational(std::string_view text);

/// "p/q", or "p" when the denominator is one.
std::string to_fraction_string(const Rational& q);

double to_double(const Rational& q);

std::int64_t floor_to_int(const Rational& q);
std::int64_t ceil_to_int(const Rational& q);

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

}  // namespace fran
