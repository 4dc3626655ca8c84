#pragma once

#include <gmpxx.h>

#include <span>
#include <string>

namespace csf {

using Integer = mpz_class;
using Rational = mpq_class;

/// Binomial coefficient; zero whenever k < 0, n < 0 or k > n.
Integer binomial(long n, long k);

/// (m_1 + ... + m_j)! / (m_1! ... m_j!). Zero if any entry is negative.
Integer multinomial(std::span<const long> counts);

inline Integer sign_power(long exponent) { return (exponent % 2 == 0) ? Integer(1) : Integer(-1); }

inline std::string to_string(const Integer& z) { return z.get_str(); }

}  // namespace csf
