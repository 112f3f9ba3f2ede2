#include "qf2/rational.hpp"

#include <stdexcept>

namespace qf2 {

BigInt binom(long n, long k)
{
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (long i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

Rational binom_rational(const Rational& r, long k)
{
    if (k < 0) throw std::invalid_argument("binom_rational: negative k");
    Rational out = 1;
    for (long i = 0; i < k; ++i) out *= (r - i) / Rational(i + 1);
    return out;
}

BigInt factorial(long n)
{
    if (n < 0) throw std::invalid_argument("factorial: negative argument");
    BigInt r = 1;
    for (long i = 2; i <= n; ++i) r *= i;
    return r;
}

BigInt multiset(long b, long n) { return binom(b + n - 1, n); }

std::string to_string(const BigInt& x) { return x.str(); }

std::string to_string(const Rational& x)
{
    if (den(x) == 1) return num(x).str();
    return num(x).str() + "/" + den(x).str();
}

Rational parse_rational(const std::string& s)
{
    auto valid_int = [](const std::string& t) {
        std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
        if (i == t.size()) return false;
        for (; i < t.size(); ++i)
            if (t[i] < '0' || t[i] > '9') return false;
        return true;
    };
    auto slash = s.find('/');
    std::string p = s.substr(0, slash);
    std::string q = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!valid_int(p) || !valid_int(q) || q[0] == '-')
        throw std::invalid_argument("not a rational: '" + s + "'");
    BigInt d(q);
    if (d == 0) throw std::invalid_argument("zero denominator: '" + s + "'");
    return Rational(BigInt(p)) / Rational(d);
}

}  // namespace qf2
