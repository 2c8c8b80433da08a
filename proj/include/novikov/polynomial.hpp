#pragma once

#include "novikov/rational.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace novikov {

/// Interned variable name. Copies are a pointer; ordering follows the name.
class Symbol {
public:
    explicit Symbol(std::string_view name);

    const std::string& name() const { return *name_; }

    friend bool operator==(Symbol a, Symbol b) { return a.name_ == b.name_; }
    friend bool operator<(Symbol a, Symbol b) { return a.name_ != b.name_ && *a.name_ < *b.name_; }

private:
    const std::string* name_;
};

/// The degeneration variable.
Symbol t_symbol();

/// Sparse power product, sorted by symbol, exponents > 0.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(Symbol s, int exp = 1);

    const std::vector<std::pair<Symbol, int>>& factors() const { return factors_; }
    bool is_one() const { return factors_.empty(); }
    int degree(Symbol s) const;
    int total_degree() const;
    /// Copy with symbol s removed.
    Monomial without(Symbol s) const;
    bool divides(const Monomial& other) const;
    /// Precondition: divides(other).
    Monomial quotient_of(const Monomial& other) const;

    friend Monomial operator*(const Monomial& a, const Monomial& b);
    friend bool operator==(const Monomial& a, const Monomial& b) = default;

    std::string to_string() const;

private:
    std::vector<std::pair<Symbol, int>> factors_;
};

/// Lexicographic order with alphabetically-first symbols most significant.
bool lex_greater(const Monomial& a, const Monomial& b);

struct LexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const { return lex_greater(a, b); }
};

/// Multivariate polynomial over Q(i), sparse, terms kept in descending lex order.
class Polynomial {
public:
    using Terms = std::map<Monomial, GaussRational, LexGreater>;

    Polynomial() = default;
    Polynomial(GaussRational c);  // NOLINT(google-explicit-constructor)
    Polynomial(long c) : Polynomial(GaussRational(c)) {}  // NOLINT(google-explicit-constructor)
    explicit Polynomial(Symbol s) : Polynomial(Monomial(s)) {}
    explicit Polynomial(const Monomial& m, GaussRational c = GaussRational(1));

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    bool is_monomial() const { return terms_.size() == 1; }
    /// Constant term coefficient (zero if absent).
    GaussRational constant_term() const;
    const Monomial& leading_monomial() const { return terms_.begin()->first; }
    const GaussRational& leading_coefficient() const { return terms_.begin()->second; }

    std::set<Symbol> symbols() const;
    bool contains(Symbol s) const;
    int degree(Symbol s) const;
    /// Smallest exponent of s over all terms (0 for the zero polynomial).
    int low_degree(Symbol s) const;
    int total_degree() const;
    /// Coefficient of s^k, as a polynomial free of s.
    Polynomial coefficient(Symbol s, int k) const;
    /// Coefficients indexed by power of s, from s^0 to s^degree.
    std::vector<Polynomial> coefficients(Symbol s) const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Polynomial& o);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }

    Polynomial scaled(const GaussRational& c) const;
    Polynomial times(const Monomial& m) const;
    Polynomial pow(unsigned k) const;

    /// Exact quotient, or nullopt when other does not divide *this.
    std::optional<Polynomial> divide_exact(const Polynomial& other) const;
    /// Scales so the leading coefficient is 1 (zero stays zero).
    Polynomial monic() const;

    Polynomial substitute(Symbol s, const Polynomial& value) const;
    /// Substitutes every symbol in the map; remaining symbols are kept.
    Polynomial substitute(const std::map<Symbol, Polynomial>& values) const;

    std::string to_string() const;

private:
    void add_term(const Monomial& m, const GaussRational& c);

    Terms terms_;
};

/// Monic greatest common divisor (gcd(0, 0) = 0).
Polynomial gcd(const Polynomial& a, const Polynomial& b);

/// Content with respect to s: gcd of the coefficients of the powers of s.
Polynomial content(const Polynomial& p, Symbol s);

}  // namespace novikov
