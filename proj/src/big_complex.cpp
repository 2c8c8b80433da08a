#include "novikov/big_complex.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace novikov {

mpfr_prec_t precision_for_digits(int digits) {
    return static_cast<mpfr_prec_t>(std::ceil(digits * 3.3219280948873623)) + 32;
}

BigFloat::BigFloat(mpfr_prec_t prec) {
    mpfr_init2(value_, prec);
    mpfr_set_zero(value_, 1);
}

BigFloat::BigFloat(mpfr_prec_t prec, const Rational& q) {
    mpfr_init2(value_, prec);
    mpfr_set_q(value_, q.get_mpq_t(), MPFR_RNDN);
}

BigFloat::BigFloat(mpfr_prec_t prec, long v) {
    mpfr_init2(value_, prec);
    mpfr_set_si(value_, v, MPFR_RNDN);
}

BigFloat::BigFloat(const BigFloat& o) {
    mpfr_init2(value_, o.precision());
    mpfr_set(value_, o.value_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& o) noexcept {
    mpfr_init2(value_, o.precision());
    mpfr_swap(value_, o.value_);
}

BigFloat& BigFloat::operator=(const BigFloat& o) {
    if (this != &o) {
        mpfr_set_prec(value_, o.precision());
        mpfr_set(value_, o.value_, MPFR_RNDN);
    }
    return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& o) noexcept {
    mpfr_swap(value_, o.value_);
    return *this;
}

BigFloat::~BigFloat() { mpfr_clear(value_); }

double BigFloat::log10_abs() const {
    if (is_zero()) return -std::numeric_limits<double>::infinity();
    long exp2 = 0;
    double mant = mpfr_get_d_2exp(&exp2, value_, MPFR_RNDN);
    return std::log10(std::fabs(mant)) + static_cast<double>(exp2) * std::log10(2.0);
}

BigFloat BigFloat::operator-() const {
    BigFloat r(precision());
    mpfr_neg(r.value_, value_, MPFR_RNDN);
    return r;
}

BigFloat operator+(const BigFloat& a, const BigFloat& b) {
    BigFloat r(a.precision());
    mpfr_add(r.value_, a.value_, b.value_, MPFR_RNDN);
    return r;
}

BigFloat operator-(const BigFloat& a, const BigFloat& b) {
    BigFloat r(a.precision());
    mpfr_sub(r.value_, a.value_, b.value_, MPFR_RNDN);
    return r;
}

BigFloat operator*(const BigFloat& a, const BigFloat& b) {
    BigFloat r(a.precision());
    mpfr_mul(r.value_, a.value_, b.value_, MPFR_RNDN);
    return r;
}

BigFloat operator/(const BigFloat& a, const BigFloat& b) {
    BigFloat r(a.precision());
    mpfr_div(r.value_, a.value_, b.value_, MPFR_RNDN);
    return r;
}

std::string BigFloat::to_string(int digits) const {
    if (is_zero()) return "0";
    char* buf = nullptr;
    mpfr_asprintf(&buf, "%.*Re", digits - 1, value_);
    std::string out(buf);
    mpfr_free_str(buf);
    return out;
}

BigFloat sqrt(const BigFloat& x) {
    BigFloat r(x.precision());
    mpfr_sqrt(r.get(), x.get(), MPFR_RNDN);
    return r;
}

BigFloat abs(const BigFloat& x) {
    BigFloat r(x.precision());
    mpfr_abs(r.get(), x.get(), MPFR_RNDN);
    return r;
}

BigFloat atan2(const BigFloat& y, const BigFloat& x) {
    BigFloat r(y.precision());
    mpfr_atan2(r.get(), y.get(), x.get(), MPFR_RNDN);
    return r;
}

BigFloat cos(const BigFloat& x) {
    BigFloat r(x.precision());
    mpfr_cos(r.get(), x.get(), MPFR_RNDN);
    return r;
}

BigFloat sin(const BigFloat& x) {
    BigFloat r(x.precision());
    mpfr_sin(r.get(), x.get(), MPFR_RNDN);
    return r;
}

BigFloat root(const BigFloat& x, unsigned long m) {
    BigFloat r(x.precision());
    mpfr_rootn_ui(r.get(), x.get(), m, MPFR_RNDN);
    return r;
}

BigFloat power_of_ten(mpfr_prec_t prec, long e) {
    BigFloat r(prec);
    BigFloat ten(prec, 10);
    mpfr_pow_si(r.get(), ten.get(), e, MPFR_RNDN);
    return r;
}

BigFloat BigComplex::abs() const {
    BigFloat r(precision());
    mpfr_hypot(r.get(), re_.get(), im_.get(), MPFR_RNDN);
    return r;
}

BigComplex operator+(const BigComplex& a, const BigComplex& b) { return {a.re_ + b.re_, a.im_ + b.im_}; }

BigComplex operator-(const BigComplex& a, const BigComplex& b) { return {a.re_ - b.re_, a.im_ - b.im_}; }

BigComplex operator*(const BigComplex& a, const BigComplex& b) {
    if (a.im_.is_zero() && b.im_.is_zero()) return {a.re_ * b.re_, BigFloat(a.precision())};
    return {a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_};
}

BigComplex operator/(const BigComplex& a, const BigComplex& b) {
    if (b.is_zero()) throw std::domain_error("division by zero");
    if (b.im_.is_zero()) return {a.re_ / b.re_, a.im_ / b.re_};
    BigFloat n = b.re_ * b.re_ + b.im_ * b.im_;
    return {(a.re_ * b.re_ + a.im_ * b.im_) / n, (a.im_ * b.re_ - a.re_ * b.im_) / n};
}

BigComplex BigComplex::pow(long k) const {
    if (k < 0) {
        BigComplex one(BigFloat(precision(), 1), BigFloat(precision()));
        return (one / *this).pow(-k);
    }
    BigComplex result(BigFloat(precision(), 1), BigFloat(precision()));
    BigComplex base = *this;
    while (k > 0) {
        if (k & 1) result = result * base;
        k >>= 1;
        if (k > 0) base = base * base;
    }
    return result;
}

BigComplex BigComplex::principal_root(unsigned long m) const {
    if (m == 0) throw std::invalid_argument("root index must be positive");
    if (is_zero()) return *this;
    if (im_.is_zero() && re_.sign() > 0) return {root(re_, m), BigFloat(precision())};
    BigFloat modulus = root(abs(), m);
    BigFloat angle = atan2(im_, re_) / BigFloat(precision(), static_cast<long>(m));
    return {modulus * cos(angle), modulus * sin(angle)};
}

std::string BigComplex::to_string(int digits) const {
    if (im_.is_zero()) return re_.to_string(digits);
    std::string im = im_.to_string(digits);
    if (im.front() != '-') im = "+" + im;
    return re_.to_string(digits) + im + "*i";
}

}  // namespace novikov
