#pragma once

#include "novikov/big_complex.hpp"
#include "novikov/rational_function.hpp"

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace novikov {

/// Immutable coefficient expression. Root-free parts are folded into canonical
/// rational-function leaves as the tree is built; only radicals (and whatever
/// combines with them) remain as interior nodes.
class ScalarExpr {
public:
    enum class Kind { Leaf, Add, Mul, Div, Pow, Root };

    ScalarExpr();
    ScalarExpr(RationalFunction value);  // NOLINT(google-explicit-constructor)
    ScalarExpr(GaussRational value) : ScalarExpr(RationalFunction(std::move(value))) {}  // NOLINT
    ScalarExpr(long value) : ScalarExpr(RationalFunction(value)) {}  // NOLINT(google-explicit-constructor)

    static ScalarExpr symbol(std::string_view name);
    static ScalarExpr symbol(Symbol s);
    static ScalarExpr t() { return symbol(t_symbol()); }
    static ScalarExpr i() { return ScalarExpr(GaussRational::i()); }

    Kind kind() const;
    bool is_leaf() const { return kind() == Kind::Leaf; }
    /// Precondition: is_leaf().
    const RationalFunction& leaf() const;
    const std::vector<ScalarExpr>& args() const;
    /// Power for Pow nodes, root index for Root nodes.
    long index() const;

    bool has_roots() const;
    bool contains(Symbol s) const;
    std::set<Symbol> symbols() const;
    /// The expression as a rational function, when it is root-free.
    std::optional<RationalFunction> as_rational_function() const;
    bool is_literal_zero() const { return is_leaf() && leaf().is_zero(); }

    ScalarExpr operator-() const;
    friend ScalarExpr operator+(const ScalarExpr& a, const ScalarExpr& b);
    friend ScalarExpr operator-(const ScalarExpr& a, const ScalarExpr& b);
    friend ScalarExpr operator*(const ScalarExpr& a, const ScalarExpr& b);
    /// Throws std::domain_error("zero denominator") for a zero rational-function divisor.
    friend ScalarExpr operator/(const ScalarExpr& a, const ScalarExpr& b);
    ScalarExpr& operator+=(const ScalarExpr& o) { return *this = *this + o; }
    ScalarExpr& operator-=(const ScalarExpr& o) { return *this = *this - o; }
    ScalarExpr& operator*=(const ScalarExpr& o) { return *this = *this * o; }

    ScalarExpr pow(long k) const;
    /// Structural equality; canonical for root-free expressions.
    friend bool operator==(const ScalarExpr& a, const ScalarExpr& b);

    /// Text in the expression grammar; parse(to_string()) rebuilds an equal expression.
    std::string to_string() const;

private:
    struct Node;
    explicit ScalarExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    static ScalarExpr make(Kind kind, std::vector<ScalarExpr> args, long index = 0);
    friend ScalarExpr root(long m, const ScalarExpr& radicand);

    std::shared_ptr<const Node> node_;
};

/// Formal m-th root (principal branch on evaluation).
ScalarExpr root(long m, const ScalarExpr& radicand);

/// Parses the expression grammar. Throws std::invalid_argument on malformed text.
ScalarExpr parse_expr(std::string_view text);

/// Canonical form: rational-function parts reduced, like radical terms merged,
/// root(m, e)^m rewritten to e. Throws std::domain_error("zero denominator").
ScalarExpr simplify(const ScalarExpr& e);

ScalarExpr substitute(const ScalarExpr& e, const std::map<Symbol, ScalarExpr>& values);

class ZeroMode {
public:
    static ZeroMode exact() { return ZeroMode(0); }
    static ZeroMode numeric(int digits) { return ZeroMode(digits); }
    bool is_exact() const { return digits_ == 0; }
    int digits() const { return digits_; }

private:
    explicit ZeroMode(int digits) : digits_(digits) {}
    int digits_;
};

using Assignment = std::map<Symbol, GaussRational>;

/// Exact mode requires a root-free expression (std::domain_error otherwise:
/// "exact zero-test unsupported for radicals"). Numeric mode evaluates at the
/// assignment and reports |value| <= 10^(-digits/2); that verdict is heuristic.
bool is_zero(const ScalarExpr& e, ZeroMode mode, const Assignment& at = {});

/// Evaluation with relative error <= 10^(-digits+4). Throws std::domain_error for an
/// unassigned symbol or a divisor with modulus below 10^(-digits).
BigComplex eval(const ScalarExpr& e, const Assignment& at, int digits);
BigComplex eval(const ScalarExpr& e, const std::map<Symbol, BigComplex>& at, int digits);

/// Order of vanishing in s as s -> 0+, ignoring cancellation between terms.
/// Used only to size guard precision; nullopt for the zero expression.
std::optional<Rational> estimated_valuation(const ScalarExpr& e, Symbol s);

}  // namespace novikov
