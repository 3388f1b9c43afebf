#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace chardeg {

// Exact arithmetic everywhere a degree, hook product or ratio is involved.
using BigNat = mpz_class;
using BigRational = mpq_class;

BigNat factorial(unsigned n);

// num/den reduced to lowest terms with a positive denominator.
BigRational make_rational(const BigNat& num, const BigNat& den);

// A rational q with q >= sqrt(value) and q - sqrt(value) < 10^-digits.
BigRational sqrt_upper_bound(const BigNat& value, unsigned digits = 6);

std::string to_string(const BigNat& value);

// Always "num/den", even when den == 1.
std::string to_string(const BigRational& value);

// Decimal approximation with the given number of significant digits.
std::string to_decimal(const BigRational& value, int significant = 12);

// Accepts "p/q" or a plain integer. Throws std::invalid_argument.
BigRational parse_rational(std::string_view text);
BigNat parse_natural(std::string_view text);

}  // namespace chardeg
