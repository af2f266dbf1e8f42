// Exact rational scalar used for every extremal value and coordinate.
// Backed by GMP; no floating point enters any computation.
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace exk {

using Rat = mpq_class;
using Int = mpz_class;

// Parses "p", "-p" or "p/q" (arbitrary precision). Throws std::invalid_argument
// on malformed input or a zero denominator.
Rat rat_from_string(const std::string& text);

// Canonical "p" or "p/q" form.
std::string rat_to_string(const Rat& value);

inline std::int64_t choose2(std::int64_t k) { return k < 2 ? 0 : k * (k - 1) / 2; }

}  // namespace exk
