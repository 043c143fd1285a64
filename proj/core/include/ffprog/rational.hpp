#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace ffprog {

// Exact rationals. mpq_class keeps values canonical (lowest terms, positive
// denominator) as long as every constructed value goes through make_rational.
using Rational = mpq_class;
using BigInt = mpz_class;

Rational make_rational(std::int64_t num, std::int64_t den = 1);

// "3", "-1/2"; parsing canonicalizes. Throws Error(Parse) on malformed input.
Rational parse_rational(const std::string& text);

std::string to_string(const Rational& q);

// |num| and den clamped to int64 max.
std::int64_t abs_numerator_clamped(const Rational& q);
std::int64_t denominator_clamped(const Rational& q);

}  // namespace ffprog
