#pragma once

#include "novikov/scalar_expr.hpp"

#include <optional>
#include <string>
#include <vector>

namespace novikov {

/// Finite sum of t-free coefficients times rational powers of t.
class PuiseuxExpr {
public:
    struct Term {
        ScalarExpr coeff;
        Rational exponent;
        friend bool operator==(const Term& a, const Term& b) = default;
    };

    PuiseuxExpr() = default;
    static PuiseuxExpr monomial(ScalarExpr coeff, Rational exponent);

    /// Exponents strictly increasing, no zero coefficients.
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    /// Lowest exponent; nullopt for zero.
    std::optional<Rational> valuation() const;

    friend PuiseuxExpr operator+(const PuiseuxExpr& a, const PuiseuxExpr& b);
    friend PuiseuxExpr operator*(const PuiseuxExpr& a, const PuiseuxExpr& b);
    PuiseuxExpr operator-() const;
    friend bool operator==(const PuiseuxExpr& a, const PuiseuxExpr& b) = default;

    /// Adds coeff * t^exponent, merging equal exponents.
    void add_term(const ScalarExpr& coeff, const Rational& exponent);

    ScalarExpr to_expr() const;
    std::string to_string() const;

private:
    std::vector<Term> terms_;
};

/// Throws std::domain_error("not Puiseux-normalizable") when e is not a finite sum of
/// (t-free coefficient) * t^q.
PuiseuxExpr puiseux_normalize(const ScalarExpr& e);

}  // namespace novikov
