#pragma once

#include "qf2/poly.hpp"

#include <stdexcept>
#include <string>

namespace qf2 {

/// Pole at V = 0 in a weight fraction that was expected to be regular.
struct PoleError : std::domain_error {
    using std::domain_error::domain_error;
};

/// A homogeneous rational function of the weights (V, W), kept at W = 1.
///
/// `degree` is the total degree in (V, W); num/den are polynomials in V.
template <class Scalar>
class VFraction {
public:
    VFraction() : VFraction(0, Poly<Scalar>(0)) {}
    VFraction(const Scalar& c) : VFraction(0, Poly<Scalar>(c)) {}
    VFraction(int degree, Poly<Scalar> num, Poly<Scalar> den = Poly<Scalar>(1))
        : degree_(degree), num_(std::move(num)), den_(std::move(den))
    {
        if (den_.is_zero()) throw std::domain_error("VFraction: zero denominator");
        reduce();
    }

    static VFraction V() { return VFraction(1, Poly<Scalar>::x()); }
    static VFraction W() { return VFraction(1, Poly<Scalar>(1)); }
    /// c0*V + c1*W.
    static VFraction linear(const Scalar& cv, const Scalar& cw)
    {
        return VFraction(1, Poly<Scalar>(std::vector<Scalar>{cw, cv}));
    }

    int degree() const { return degree_; }
    const Poly<Scalar>& num() const { return num_; }
    const Poly<Scalar>& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    VFraction reciprocal() const
    {
        if (is_zero()) throw std::domain_error("VFraction: reciprocal of zero");
        return VFraction(-degree_, den_, num_);
    }

    friend VFraction operator*(const VFraction& a, const VFraction& b)
    {
        return VFraction(a.degree_ + b.degree_, a.num_ * b.num_, a.den_ * b.den_);
    }
    friend VFraction operator/(const VFraction& a, const VFraction& b) { return a * b.reciprocal(); }
    friend VFraction operator+(const VFraction& a, const VFraction& b)
    {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        if (a.degree_ != b.degree_)
            throw std::invalid_argument("VFraction: adding degrees " + std::to_string(a.degree_) + " and " +
                                        std::to_string(b.degree_));
        return VFraction(a.degree_, a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend VFraction operator-(const VFraction& a) { return VFraction(a.degree_, -a.num_, a.den_); }
    friend VFraction operator-(const VFraction& a, const VFraction& b) { return a + (-b); }
    friend bool operator==(const VFraction& a, const VFraction& b)
    {
        if (a.is_zero() && b.is_zero()) return true;
        return a.degree_ == b.degree_ && a.num_ == b.num_ && a.den_ == b.den_;
    }

    /// Value at V = 0 (with W = 1); the W-exponent is degree().
    Scalar at_v0() const
    {
        if (den_.coeff(0) == 0) throw PoleError("VFraction: pole at V = 0 in " + str());
        return num_.coeff(0) / den_.coeff(0);
    }

    Scalar operator()(const Scalar& v) const
    {
        Scalar d = den_(v);
        if (d == 0) throw PoleError("VFraction: pole at V = " + to_string(v));
        return num_(v) / d;
    }

    std::string str() const
    {
        return "(" + num_.str() + ")/(" + den_.str() + ") [deg " + std::to_string(degree_) + "]";
    }

private:
    void reduce()
    {
        if (num_.is_zero()) {
            den_ = Poly<Scalar>(1);
            return;
        }
        int k = std::min(num_.valuation(), den_.valuation());
        num_ = num_.shift_down(k);
        den_ = den_.shift_down(k);
        Poly<Scalar> g = gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = divmod(num_, g).first;
            den_ = divmod(den_, g).first;
        }
        Scalar lead = den_.leading();
        if (lead != 1) {
            num_ = num_ / lead;
            den_ = den_ / lead;
        }
    }

    int degree_;
    Poly<Scalar> num_;
    Poly<Scalar> den_;
};

using VFrac = VFraction<Rational>;

/// Value at V = 0 paired with the power of W it multiplies.
struct WeightedValue {
    Rational value;
    int w_exponent = 0;
    friend bool operator==(const WeightedValue&, const WeightedValue&) = default;
};

template <class Scalar>
WeightedValue eval_at_v0(const VFraction<Scalar>& x)
{
    return {x.at_v0(), x.degree()};
}

}  // namespace qf2
