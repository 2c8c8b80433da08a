#pragma once

#include "novikov/polynomial.hpp"

#include <map>
#include <string>

namespace novikov {

/// Reduced quotient num/den over Q(i): gcd(num, den) = 1 and den monic, so equal
/// functions have identical representations.
class RationalFunction {
public:
    RationalFunction() : den_(1) {}
    RationalFunction(GaussRational c) : num_(std::move(c)), den_(1) {}  // NOLINT(google-explicit-constructor)
    RationalFunction(long c) : RationalFunction(GaussRational(c)) {}  // NOLINT(google-explicit-constructor)
    RationalFunction(Polynomial p) : num_(std::move(p)), den_(1) {}  // NOLINT(google-explicit-constructor)
    /// Throws std::domain_error("zero denominator") when den is zero.
    RationalFunction(Polynomial num, Polynomial den);

    static RationalFunction symbol(Symbol s) { return {Polynomial(s)}; }

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_ == den_; }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    bool is_polynomial() const { return den_.is_constant(); }
    /// Precondition: is_constant().
    GaussRational constant_value() const;
    std::set<Symbol> symbols() const;
    bool contains(Symbol s) const { return num_.contains(s) || den_.contains(s); }

    RationalFunction operator-() const;
    RationalFunction& operator+=(const RationalFunction& o);
    RationalFunction& operator-=(const RationalFunction& o);
    RationalFunction& operator*=(const RationalFunction& o);
    RationalFunction& operator/=(const RationalFunction& o);
    friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
    friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
    friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
    friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    RationalFunction inverse() const;
    RationalFunction pow(long k) const;

    RationalFunction substitute(const std::map<Symbol, RationalFunction>& values) const;

    /// Order of s at 0: low_degree(num) - low_degree(den). Meaningless for zero.
    int valuation(Symbol s) const;
    /// True when the function has no pole at s = 0 (generically in the other symbols).
    bool regular_at_zero(Symbol s) const;
    /// Value at s = 0. Precondition: regular_at_zero(s).
    RationalFunction value_at_zero(Symbol s) const;

    std::string to_string() const;

private:
    Polynomial num_;
    Polynomial den_;
};

}  // namespace novikov
