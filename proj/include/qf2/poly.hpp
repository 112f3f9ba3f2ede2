#pragma once

#include "qf2/rational.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>
#include <utility>
#include <vector>

namespace qf2 {

/// Dense univariate polynomial, coefficients low degree first, no trailing zeros.
template <class Scalar>
class Poly {
public:
    Poly() = default;
    Poly(const Scalar& c) : c_{c} { trim(); }
    Poly(int c) : c_{Scalar(c)} { trim(); }
    explicit Poly(std::vector<Scalar> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Poly x() { return Poly(std::vector<Scalar>{Scalar(0), Scalar(1)}); }
    static Poly monomial(int k, const Scalar& c = Scalar(1))
    {
        std::vector<Scalar> v(k + 1, Scalar(0));
        v[k] = c;
        return Poly(std::move(v));
    }

    bool is_zero() const { return c_.empty(); }
    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    Scalar coeff(int k) const { return k >= 0 && k < static_cast<int>(c_.size()) ? c_[k] : Scalar(0); }
    const std::vector<Scalar>& coeffs() const { return c_; }
    Scalar leading() const { return c_.empty() ? Scalar(0) : c_.back(); }

    /// Lowest power with nonzero coefficient; -1 for zero.
    int valuation() const
    {
        for (std::size_t k = 0; k < c_.size(); ++k)
            if (c_[k] != 0) return static_cast<int>(k);
        return -1;
    }

    /// Divides by x^k; the low coefficients must vanish.
    Poly shift_down(int k) const
    {
        if (k <= 0) return *this;
        for (int i = 0; i < k && i < static_cast<int>(c_.size()); ++i)
            if (c_[i] != 0) throw std::logic_error("Poly::shift_down: not divisible");
        if (k >= static_cast<int>(c_.size())) return Poly();
        return Poly(std::vector<Scalar>(c_.begin() + k, c_.end()));
    }

    Scalar operator()(const Scalar& x) const
    {
        Scalar r(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
        return r;
    }

    Poly& operator+=(const Poly& o)
    {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Scalar(0));
        for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
        trim();
        return *this;
    }
    Poly& operator-=(const Poly& o)
    {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Scalar(0));
        for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
        trim();
        return *this;
    }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }
    Poly& operator*=(const Scalar& s)
    {
        for (auto& a : c_) a *= s;
        trim();
        return *this;
    }

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator-(Poly a)
    {
        for (auto& x : a.c_) x = -x;
        return a;
    }
    friend Poly operator*(const Poly& a, const Poly& b)
    {
        if (a.is_zero() || b.is_zero()) return Poly();
        std::vector<Scalar> r(a.c_.size() + b.c_.size() - 1, Scalar(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        }
        return Poly(std::move(r));
    }
    friend Poly operator*(Poly a, const Scalar& s) { return a *= s; }
    friend Poly operator*(const Scalar& s, Poly a) { return a *= s; }
    friend Poly operator/(Poly a, const Scalar& s)
    {
        for (auto& x : a.c_) x /= s;
        return a;
    }
    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

    /// Euclidean division over a field.
    friend std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b)
    {
        if (b.is_zero()) throw std::domain_error("Poly division by zero");
        Poly q, r = a;
        while (!r.is_zero() && r.degree() >= b.degree()) {
            Poly t = monomial(r.degree() - b.degree(), r.leading() / b.leading());
            q += t;
            r -= t * b;
        }
        return {q, r};
    }

    /// Monic gcd; gcd(0,0) = 0.
    friend Poly gcd(Poly a, Poly b)
    {
        while (!b.is_zero()) {
            Poly r = divmod(a, b).second;
            a = std::move(b);
            b = std::move(r);
        }
        if (a.is_zero()) return a;
        return a / a.leading();
    }

    std::string str(const std::string& var = "V") const
    {
        if (c_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (int k = degree(); k >= 0; --k) {
            if (c_[k] == 0) continue;
            Scalar a = c_[k];
            bool neg = a < 0;
            if (neg) a = -a;
            os << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
            first = false;
            bool unit = a == 1;
            if (!unit || k == 0) os << to_string(a);
            if (k > 0) os << (unit ? "" : "*") << var;
            if (k > 1) os << "^" << k;
        }
        return os.str();
    }

private:
    void trim()
    {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::vector<Scalar> c_;
};

template <class Scalar>
std::ostream& operator<<(std::ostream& os, const Poly<Scalar>& p)
{
    return os << p.str();
}

using RPoly = Poly<Rational>;

}  // namespace qf2
