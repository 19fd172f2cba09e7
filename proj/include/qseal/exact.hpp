#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace qseal {

using BigInt = mpz_class;
using Rational = mpq_class;

BigInt binomial(std::uint64_t n, std::uint64_t k);
BigInt pow2(std::uint64_t exponent);

// "p/q" in lowest terms, or "p" for integers.
std::string to_fraction_string(const Rational& value);
Rational parse_fraction(const std::string& text);

}  // namespace qseal
