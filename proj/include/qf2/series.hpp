#pragma once

#include "qf2/rational.hpp"

#include <Eigen/Core>

#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qf2 {

/// Power series in (q2, q4) truncated at total degree a + b <= order.
///
/// A series built from a bare scalar has no order of its own and adopts the
/// order of whatever it is combined with; mixing two explicit orders throws.
template <class Scalar>
class TruncSeries2 {
public:
    static constexpr int kFree = -1;

    TruncSeries2() : order_(kFree), c_{Scalar(0)} {}
    TruncSeries2(const Scalar& c) : order_(kFree), c_{c} {}
    TruncSeries2(int c) : order_(kFree), c_{Scalar(c)} {}

    static TruncSeries2 zero(int order)
    {
        if (order < 0) throw std::invalid_argument("series order must be >= 0");
        TruncSeries2 s;
        s.order_ = order;
        s.c_.assign(size_for(order), Scalar(0));
        return s;
    }
    static TruncSeries2 constant(const Scalar& c, int order)
    {
        TruncSeries2 s = zero(order);
        s.c_[0] = c;
        return s;
    }
    static TruncSeries2 monomial(int a, int b, const Scalar& c, int order)
    {
        TruncSeries2 s = zero(order);
        if (a < 0 || b < 0) throw std::invalid_argument("negative exponent");
        if (a + b <= order) s.c_[index(a, b)] = c;
        return s;
    }
    static TruncSeries2 q2(int order) { return monomial(1, 0, Scalar(1), order); }
    static TruncSeries2 q4(int order) { return monomial(0, 1, Scalar(1), order); }

    /// kFree for a scalar lift.
    int order() const { return order_; }
    bool has_order() const { return order_ != kFree; }
    /// Effective truncation used when iterating coefficients.
    int span() const { return order_ == kFree ? 0 : order_; }

    Scalar coeff(int a, int b) const
    {
        if (a < 0 || b < 0 || a + b > span()) return Scalar(0);
        return c_[index(a, b)];
    }
    void set(int a, int b, const Scalar& v)
    {
        if (a < 0 || b < 0 || a + b > span())
            throw std::out_of_range("coefficient beyond truncation order");
        c_[index(a, b)] = v;
    }
    Scalar constant_term() const { return c_[0]; }

    bool is_zero() const
    {
        for (const auto& x : c_)
            if (x != 0) return false;
        return true;
    }

    TruncSeries2 with_order(int order) const
    {
        TruncSeries2 s = zero(order);
        for (int t = 0; t <= std::min(order, span()); ++t)
            for (int b = 0; b <= t; ++b) s.c_[index(t - b, b)] = c_[index(t - b, b)];
        return s;
    }

    TruncSeries2& operator+=(const TruncSeries2& o) { return combine(o, [](Scalar& x, const Scalar& y) { x += y; }); }
    TruncSeries2& operator-=(const TruncSeries2& o) { return combine(o, [](Scalar& x, const Scalar& y) { x -= y; }); }
    TruncSeries2& operator*=(const TruncSeries2& o) { return *this = *this * o; }
    TruncSeries2& operator*=(const Scalar& s)
    {
        for (auto& x : c_) x *= s;
        return *this;
    }

    friend TruncSeries2 operator+(TruncSeries2 a, const TruncSeries2& b) { return a += b; }
    friend TruncSeries2 operator-(TruncSeries2 a, const TruncSeries2& b) { return a -= b; }
    friend TruncSeries2 operator-(TruncSeries2 a)
    {
        for (auto& x : a.c_) x = -x;
        return a;
    }
    friend TruncSeries2 operator*(TruncSeries2 a, const Scalar& s) { return a *= s; }
    friend TruncSeries2 operator*(const Scalar& s, TruncSeries2 a) { return a *= s; }
    friend TruncSeries2 operator*(TruncSeries2 a, int s) { return a *= Scalar(s); }
    friend TruncSeries2 operator*(int s, TruncSeries2 a) { return a *= Scalar(s); }

    friend TruncSeries2 operator*(const TruncSeries2& x, const TruncSeries2& y)
    {
        const int n = common_order(x.order_, y.order_);
        TruncSeries2 r = n == kFree ? TruncSeries2() : zero(n);
        const int m = r.span();
        const int nx = std::min(x.span(), m), ny = std::min(y.span(), m);
        for (int tx = 0; tx <= nx; ++tx)
            for (int bx = 0; bx <= tx; ++bx) {
                const Scalar& cx = x.c_[index(tx - bx, bx)];
                if (cx == 0) continue;
                for (int ty = 0; ty <= std::min(ny, m - tx); ++ty)
                    for (int by = 0; by <= ty; ++by) {
                        const Scalar& cy = y.c_[index(ty - by, by)];
                        if (cy == 0) continue;
                        r.c_[index(tx + ty - bx - by, bx + by)] += cx * cy;
                    }
            }
        return r;
    }

    friend bool operator==(const TruncSeries2& x, const TruncSeries2& y)
    {
        const int n = common_order(x.order_, y.order_);
        const int m = n == kFree ? 0 : n;
        for (int t = 0; t <= m; ++t)
            for (int b = 0; b <= t; ++b)
                if (x.coeff(t - b, b) != y.coeff(t - b, b)) return false;
        return true;
    }
    friend bool operator!=(const TruncSeries2& x, const TruncSeries2& y) { return !(x == y); }

    /// Nonzero terms ordered by total degree, then by q4 exponent.
    template <class F>
    void for_each_term(F&& f) const
    {
        for (int t = 0; t <= span(); ++t)
            for (int b = 0; b <= t; ++b) {
                const Scalar& c = c_[index(t - b, b)];
                if (c != 0) f(t - b, b, c);
            }
    }

    static int index(int a, int b) { return (a + b) * (a + b + 1) / 2 + b; }

private:
    static std::size_t size_for(int order) { return static_cast<std::size_t>((order + 1) * (order + 2) / 2); }

    static int common_order(int a, int b)
    {
        if (a == kFree) return b;
        if (b == kFree || a == b) return a;
        throw std::invalid_argument("series order mismatch: " + std::to_string(a) + " vs " + std::to_string(b));
    }

    template <class Op>
    TruncSeries2& combine(const TruncSeries2& o, Op op)
    {
        const int n = common_order(order_, o.order_);
        if (n != order_) *this = with_order(n);
        const int m = std::min(span(), o.span());
        for (int t = 0; t <= m; ++t)
            for (int b = 0; b <= t; ++b) op(c_[index(t - b, b)], o.c_[index(t - b, b)]);
        return *this;
    }

    int order_;
    std::vector<Scalar> c_;
};

using Series = TruncSeries2<Rational>;

/// f = sum_{d>=1} binom(2d,d) q4^d.
template <class Scalar = Rational>
TruncSeries2<Scalar> f_series(int order)
{
    auto s = TruncSeries2<Scalar>::zero(order);
    for (int d = 1; d <= order; ++d) s.set(0, d, Scalar(binom(2 * d, d)));
    return s;
}

/// Multiplicative inverse; requires an invertible constant term.
template <class Scalar>
TruncSeries2<Scalar> series_invert(const TruncSeries2<Scalar>& s)
{
    const Scalar c0 = s.constant_term();
    if (c0 == 0) throw std::domain_error("series_invert: zero constant term");
    if (!s.has_order()) return TruncSeries2<Scalar>(Scalar(1) / c0);
    const int n = s.order();
    auto t = TruncSeries2<Scalar>::zero(n);
    t.set(0, 0, Scalar(1) / c0);
    for (int deg = 1; deg <= n; ++deg)
        for (int b = 0; b <= deg; ++b) {
            const int a = deg - b;
            Scalar acc(0);
            for (int i = 0; i <= a; ++i)
                for (int j = 0; j <= b; ++j) {
                    if (i == 0 && j == 0) continue;
                    acc += s.coeff(i, j) * t.coeff(a - i, b - j);
                }
            t.set(a, b, -acc / c0);
        }
    return t;
}

/// Human-readable form such as "1 + 2*q4 - 1/2*q2*q4^3".
template <class Scalar>
std::string format_series(const TruncSeries2<Scalar>& s)
{
    std::ostringstream os;
    bool first = true;
    s.for_each_term([&](int a, int b, const Scalar& c) {
        Scalar m = c < 0 ? Scalar(-c) : c;
        os << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
        first = false;
        std::string mono;
        auto add = [&](const char* v, int e) {
            if (e == 0) return;
            if (!mono.empty()) mono += "*";
            mono += v;
            if (e > 1) mono += "^" + std::to_string(e);
        };
        add("q2", a);
        add("q4", b);
        if (mono.empty())
            os << to_string(m);
        else if (m == 1)
            os << mono;
        else
            os << to_string(m) << "*" << mono;
    });
    return first ? "0" : os.str();
}

template <class Scalar>
std::ostream& operator<<(std::ostream& os, const TruncSeries2<Scalar>& s)
{
    return os << format_series(s);
}

}  // namespace qf2

namespace Eigen {

template <class S>
struct NumTraits<qf2::TruncSeries2<S>> : GenericNumTraits<qf2::TruncSeries2<S>> {
    using Real = qf2::TruncSeries2<S>;
    using NonInteger = qf2::TruncSeries2<S>;
    using Literal = qf2::TruncSeries2<S>;
    using Nested = qf2::TruncSeries2<S>;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 50,
        AddCost = 100,
        MulCost = 1000
    };
};

}  // namespace Eigen
