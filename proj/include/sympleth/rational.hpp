#pragma once

// Exact rational coefficients backed by GMP.

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace sympleth {

using Integer = mpz_class;
using Coefficient = mpq_class;

/// num/den in lowest terms.
inline Coefficient ratio(const Integer& num, const Integer& den)
{
    if (den == 0)
        throw std::domain_error("ratio: zero denominator");
    Coefficient q{num, den};
    q.canonicalize();
    return q;
}

inline Coefficient rational(long num, long den = 1) { return ratio(Integer(num), Integer(den)); }

inline Integer factorial(int n)
{
    Integer r = 1;
    for (int i = 2; i <= n; ++i)
        r *= i;
    return r;
}

inline Integer binomial(int n, int k)
{
    if (k < 0 || k > n)
        return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

/// "3", "-1/2"
inline std::string to_string(const Coefficient& q) { return q.get_str(); }

inline bool is_integer(const Coefficient& q) { return q.get_den() == 1; }

}  // namespace sympleth
