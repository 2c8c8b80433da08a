#pragma once

#include "novikov/rational.hpp"

#include <mpfr.h>

#include <string>

namespace novikov {

/// Bits of working precision for a decimal digit count (with a small guard).
mpfr_prec_t precision_for_digits(int digits);

/// RAII MPFR real with an explicit precision; results take the left operand's precision.
class BigFloat {
public:
    explicit BigFloat(mpfr_prec_t prec);
    BigFloat(mpfr_prec_t prec, const Rational& q);
    BigFloat(mpfr_prec_t prec, long v);
    BigFloat(const BigFloat& o);
    BigFloat(BigFloat&& o) noexcept;
    BigFloat& operator=(const BigFloat& o);
    BigFloat& operator=(BigFloat&& o) noexcept;
    ~BigFloat();

    mpfr_prec_t precision() const { return mpfr_get_prec(value_); }
    mpfr_srcptr get() const { return value_; }
    mpfr_ptr get() { return value_; }

    bool is_zero() const { return mpfr_zero_p(value_) != 0; }
    int sign() const { return mpfr_sgn(value_); }
    /// log10(|x|); -inf for zero.
    double log10_abs() const;

    BigFloat operator-() const;
    friend BigFloat operator+(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator-(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator*(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator/(const BigFloat& a, const BigFloat& b);
    friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_less_p(a.value_, b.value_) != 0; }

    /// Scientific notation with the given number of significant digits.
    std::string to_string(int digits = 20) const;

private:
    mpfr_t value_;
};

BigFloat sqrt(const BigFloat& x);
BigFloat abs(const BigFloat& x);
BigFloat atan2(const BigFloat& y, const BigFloat& x);
BigFloat cos(const BigFloat& x);
BigFloat sin(const BigFloat& x);
/// Real m-th root of a non-negative number.
BigFloat root(const BigFloat& x, unsigned long m);
/// 10^e at the given precision.
BigFloat power_of_ten(mpfr_prec_t prec, long e);

/// Complex number over BigFloat.
class BigComplex {
public:
    explicit BigComplex(mpfr_prec_t prec) : re_(prec), im_(prec) {}
    BigComplex(BigFloat re, BigFloat im) : re_(std::move(re)), im_(std::move(im)) {}
    BigComplex(mpfr_prec_t prec, const GaussRational& z) : re_(prec, z.re()), im_(prec, z.im()) {}

    const BigFloat& re() const { return re_; }
    const BigFloat& im() const { return im_; }
    mpfr_prec_t precision() const { return re_.precision(); }

    BigFloat abs() const;
    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }

    BigComplex operator-() const { return {-re_, -im_}; }
    friend BigComplex operator+(const BigComplex& a, const BigComplex& b);
    friend BigComplex operator-(const BigComplex& a, const BigComplex& b);
    friend BigComplex operator*(const BigComplex& a, const BigComplex& b);
    /// Throws std::domain_error on an exactly zero divisor.
    friend BigComplex operator/(const BigComplex& a, const BigComplex& b);

    BigComplex pow(long k) const;
    /// Principal m-th root: |z|^(1/m) * exp(i*arg(z)/m), arg in (-pi, pi].
    BigComplex principal_root(unsigned long m) const;

    std::string to_string(int digits = 20) const;

private:
    BigFloat re_;
    BigFloat im_;
};

}  // namespace novikov
