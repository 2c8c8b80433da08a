#include "novikov/rational.hpp"

#include <stdexcept>

namespace novikov {

Rational parse_rational(std::string_view text) {
    std::string s(text);
    Rational q;
    if (s.empty() || q.set_str(s, 10) != 0) {
        throw std::invalid_argument("malformed rational '" + s + "'");
    }
    if (sgn(q.get_den()) == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

GaussRational GaussRational::inverse() const {
    if (is_zero()) throw std::domain_error("division by zero");
    Rational n = norm();
    return {Rational(re_ / n), Rational(-im_ / n)};
}

GaussRational& GaussRational::operator+=(const GaussRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

GaussRational& GaussRational::operator-=(const GaussRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

GaussRational& GaussRational::operator*=(const GaussRational& o) {
    if (sgn(im_) == 0 && sgn(o.im_) == 0) {
        re_ *= o.re_;
        return *this;
    }
    Rational r = re_ * o.re_ - im_ * o.im_;
    Rational i = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(i);
    return *this;
}

GaussRational& GaussRational::operator/=(const GaussRational& o) {
    if (sgn(im_) == 0 && sgn(o.im_) == 0) {
        if (sgn(o.re_) == 0) throw std::domain_error("division by zero");
        re_ /= o.re_;
        return *this;
    }
    return *this *= o.inverse();
}

std::strong_ordering operator<=>(const GaussRational& a, const GaussRational& b) {
    int c = cmp(a.re_, b.re_);
    if (c == 0) c = cmp(a.im_, b.im_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

GaussRational GaussRational::pow(long k) const {
    if (k < 0) return inverse().pow(-k);
    GaussRational result(1);
    GaussRational base = *this;
    while (k > 0) {
        if (k & 1) result *= base;
        base *= base;
        k >>= 1;
    }
    return result;
}

std::string GaussRational::to_string() const {
    if (sgn(im_) == 0) return re_.get_str();
    std::string im_part;
    if (im_ == 1) {
        im_part = "i";
    } else if (im_ == -1) {
        im_part = "-i";
    } else {
        im_part = im_.get_str() + "*i";
    }
    if (sgn(re_) == 0) return sgn(im_) > 0 ? im_part : "(" + im_part + ")";
    std::string out = "(" + re_.get_str();
    if (sgn(im_) > 0) out += "+";
    return out + im_part + ")";
}

}  // namespace novikov
