#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>
#include <string_view>

namespace novikov {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "p" or "p/q" (optional leading sign). Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);

/// Element re + im*i of Q(i).
class GaussRational {
public:
    GaussRational() = default;
    GaussRational(long v) : re_(v) {}  // NOLINT(google-explicit-constructor)
    GaussRational(Rational re) : re_(std::move(re)) {}  // NOLINT(google-explicit-constructor)
    GaussRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    static GaussRational i() { return {Rational(0), Rational(1)}; }

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_one() const { return re_ == 1 && sgn(im_) == 0; }
    bool is_real() const { return sgn(im_) == 0; }

    GaussRational conj() const { return {re_, Rational(-im_)}; }
    Rational norm() const { return re_ * re_ + im_ * im_; }
    /// Throws std::domain_error on zero.
    GaussRational inverse() const;

    GaussRational operator-() const { return {Rational(-re_), Rational(-im_)}; }
    GaussRational& operator+=(const GaussRational& o);
    GaussRational& operator-=(const GaussRational& o);
    GaussRational& operator*=(const GaussRational& o);
    GaussRational& operator/=(const GaussRational& o);

    friend GaussRational operator+(GaussRational a, const GaussRational& b) { return a += b; }
    friend GaussRational operator-(GaussRational a, const GaussRational& b) { return a -= b; }
    friend GaussRational operator*(GaussRational a, const GaussRational& b) { return a *= b; }
    friend GaussRational operator/(GaussRational a, const GaussRational& b) { return a /= b; }
    friend bool operator==(const GaussRational& a, const GaussRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    /// Total order (re, then im); only used to make containers deterministic.
    friend std::strong_ordering operator<=>(const GaussRational& a, const GaussRational& b);

    GaussRational pow(long k) const;

    /// Text accepted by the expression grammar, e.g. "3/2", "i", "(1/2-2*i)".
    std::string to_string() const;

private:
    Rational re_{0};
    Rational im_{0};
};

}  // namespace novikov
