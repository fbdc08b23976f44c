#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace parabose {

/// Arbitrary-precision rational, kept in canonical form (coprime, positive
/// denominator, zero = 0/1) by the backend.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline std::string rational_str(const Rational &r)
{
    std::string s = numerator(r).str();
    s += "/";
    s += denominator(r).str();
    return s;
}

/// Parses "num/den" (or a bare integer) into a Rational.
inline Rational parse_rational(const std::string &text)
{
    auto slash = text.find('/');
    if (slash == std::string::npos)
        return Rational(BigInt(text));
    BigInt num(text.substr(0, slash));
    BigInt den(text.substr(slash + 1));
    if (den == 0)
        throw std::invalid_argument("rational with zero denominator: " + text);
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return Rational(num, den);
}

/**
 * Exact element of the field Q(i)[sqrt(2)]:
 *
 *     value = (re + im*i) + (re_s2 + im_s2*i) * sqrt(2)
 *
 * with all four components canonical rationals. This is the smallest field
 * closed under every coefficient the operator actions produce: i enters
 * through the mode combinations (b' +/- i b''), sqrt(2) through the spin
 * ladder action. Representation is unique, so equality is componentwise.
 */
class Scalar
{
public:
    Scalar() = default;
    Scalar(long long v) : re_(v) {}
    Scalar(const Rational &re) : re_(re) {}
    Scalar(Rational re, Rational im, Rational re_s2, Rational im_s2)
        : re_(std::move(re)), im_(std::move(im)), re_s2_(std::move(re_s2)), im_s2_(std::move(im_s2))
    {
    }

    static Scalar zero() { return Scalar(); }
    static Scalar one() { return Scalar(1); }
    static Scalar i() { return Scalar(0, 1, 0, 0); }
    static Scalar sqrt2() { return Scalar(0, 0, 1, 0); }
    static Scalar of_rational(const Rational &r) { return Scalar(r); }

    const Rational &re() const { return re_; }
    const Rational &im() const { return im_; }
    const Rational &re_s2() const { return re_s2_; }
    const Rational &im_s2() const { return im_s2_; }

    bool is_zero() const { return re_ == 0 && im_ == 0 && re_s2_ == 0 && im_s2_ == 0; }
    /// True when the value lies in Q (no imaginary and no sqrt(2) part).
    bool is_rational() const { return im_ == 0 && re_s2_ == 0 && im_s2_ == 0; }

    friend bool operator==(const Scalar &a, const Scalar &b)
    {
        return a.re_ == b.re_ && a.im_ == b.im_ && a.re_s2_ == b.re_s2_ && a.im_s2_ == b.im_s2_;
    }
    friend bool operator!=(const Scalar &a, const Scalar &b) { return !(a == b); }

    Scalar &operator+=(const Scalar &o)
    {
        re_ += o.re_;
        im_ += o.im_;
        re_s2_ += o.re_s2_;
        im_s2_ += o.im_s2_;
        return *this;
    }
    Scalar &operator-=(const Scalar &o)
    {
        re_ -= o.re_;
        im_ -= o.im_;
        re_s2_ -= o.re_s2_;
        im_s2_ -= o.im_s2_;
        return *this;
    }

    friend Scalar operator+(Scalar a, const Scalar &b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar &b) { return a -= b; }
    friend Scalar operator-(const Scalar &a)
    {
        return Scalar(-a.re_, -a.im_, -a.re_s2_, -a.im_s2_);
    }

    friend Scalar operator*(const Scalar &a, const Scalar &b)
    {
        // Fast paths: a factor proportional to one of the units 1, i, sqrt2,
        // i*sqrt2 permutes and scales components. Operator coefficients are
        // almost always of this shape.
        if (int u = a.single_unit(); u >= 0)
            return mul_unit(b, u, a.component(u));
        if (int u = b.single_unit(); u >= 0)
            return mul_unit(a, u, b.component(u));
        // (A + B*s)(C + D*s) = (AC + 2BD) + (AD + BC)*s with A..D Gaussian
        // rationals and s^2 = 2, i^2 = -1.
        Rational re = a.re_ * b.re_ - a.im_ * b.im_ + 2 * (a.re_s2_ * b.re_s2_ - a.im_s2_ * b.im_s2_);
        Rational im = a.re_ * b.im_ + a.im_ * b.re_ + 2 * (a.re_s2_ * b.im_s2_ + a.im_s2_ * b.re_s2_);
        Rational rs = a.re_ * b.re_s2_ - a.im_ * b.im_s2_ + a.re_s2_ * b.re_ - a.im_s2_ * b.im_;
        Rational is = a.re_ * b.im_s2_ + a.im_ * b.re_s2_ + a.re_s2_ * b.im_ + a.im_s2_ * b.re_;
        return Scalar(std::move(re), std::move(im), std::move(rs), std::move(is));
    }
    Scalar &operator*=(const Scalar &o) { return *this = *this * o; }

    /// Complex conjugation; sqrt(2) is fixed.
    Scalar conj() const { return Scalar(re_, -im_, re_s2_, -im_s2_); }

    /// Exact multiplicative inverse. Throws on zero.
    Scalar inv() const
    {
        if (is_zero())
            throw std::domain_error("Scalar: division by zero");
        // With z = A + B*sqrt(2) (A, B Gaussian rationals), z * (A - B*sqrt(2))
        // = A^2 - 2B^2 which is a Gaussian rational; it is nonzero because
        // sqrt(2) is not an element of Q(i).
        const Rational &ar = re_, &ai = im_, &br = re_s2_, &bi = im_s2_;
        Rational nr = ar * ar - ai * ai - 2 * (br * br - bi * bi);
        Rational ni = 2 * ar * ai - 4 * br * bi;
        // 1/(nr + ni*i) = (nr - ni*i)/(nr^2 + ni^2)
        Rational den = nr * nr + ni * ni;
        Rational ur = nr / den, ui = -ni / den;
        // inverse = (A - B*sqrt(2)) * (ur + ui*i)
        return Scalar(ar * ur - ai * ui, ar * ui + ai * ur, -(br * ur - bi * ui), -(br * ui + bi * ur));
    }

    friend Scalar operator/(const Scalar &a, const Scalar &b) { return a * b.inv(); }

    std::string str() const
    {
        if (is_zero())
            return "0";
        std::string out;
        auto append = [&out](const Rational &r, const char *tag) {
            if (r == 0)
                return;
            if (!out.empty() && r > 0)
                out += "+";
            if (denominator(r) == 1)
                out += numerator(r).str();
            else
                out += numerator(r).str() + "/" + denominator(r).str();
            out += tag;
        };
        append(re_, "");
        append(im_, "*i");
        append(re_s2_, "*r2");
        append(im_s2_, "*i*r2");
        return out;
    }

private:
    /// Index of the single nonzero component (0 re, 1 im, 2 re_s2, 3 im_s2),
    /// or -1 when the value is zero or mixed. Zero counts as unit 0.
    int single_unit() const
    {
        int unit = -1;
        if (re_ != 0)
            unit = 0;
        if (im_ != 0)
            unit = unit < 0 ? 1 : -2;
        if (re_s2_ != 0 && unit >= -1)
            unit = unit < 0 ? 2 : -2;
        if (im_s2_ != 0 && unit >= -1)
            unit = unit < 0 ? 3 : -2;
        return unit == -1 ? 0 : unit; // pure zero behaves like unit 0
    }

    const Rational &component(int u) const
    {
        switch (u) {
        case 0: return re_;
        case 1: return im_;
        case 2: return re_s2_;
        default: return im_s2_;
        }
    }

    /// b * (r * unit), where unit is 1, i, sqrt2 or i*sqrt2.
    static Scalar mul_unit(const Scalar &b, int unit, const Rational &r)
    {
        switch (unit) {
        case 0: return Scalar(r * b.re_, r * b.im_, r * b.re_s2_, r * b.im_s2_);
        case 1: return Scalar(-(r * b.im_), r * b.re_, -(r * b.im_s2_), r * b.re_s2_);
        case 2: return Scalar(2 * (r * b.re_s2_), 2 * (r * b.im_s2_), r * b.re_, r * b.im_);
        default:
            return Scalar(-2 * (r * b.im_s2_), 2 * (r * b.re_s2_), -(r * b.im_), r * b.re_);
        }
    }

    Rational re_, im_, re_s2_, im_s2_;
};

inline Scalar conj(const Scalar &a) { return a.conj(); }

} // namespace parabose
