#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace qf2 {

using BigInt = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                             boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::cpp_rational_backend,
                                               boost::multiprecision::et_off>;

/// Binomial coefficient, zero outside 0 <= k <= n.
BigInt binom(long n, long k);

/// r(r-1)...(r-k+1)/k! for rational r.
Rational binom_rational(const Rational& r, long k);

BigInt factorial(long n);

/// binom(b+n-1, n): multisets of size n drawn from b kinds.
BigInt multiset(long b, long n);

/// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& x);
std::string to_string(const BigInt& x);

/// Parses "p" or "p/q". Throws std::invalid_argument.
Rational parse_rational(const std::string& s);

inline Rational pow(const Rational& x, long k)
{
    Rational r = 1;
    Rational base = k >= 0 ? x : Rational(1) / x;
    for (long i = 0; i < (k >= 0 ? k : -k); ++i) r *= base;
    return r;
}

inline BigInt num(const Rational& x) { return boost::multiprecision::numerator(x); }
inline BigInt den(const Rational& x) { return boost::multiprecision::denominator(x); }

}  // namespace qf2
