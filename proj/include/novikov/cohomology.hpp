#pragma once

#include "novikov/algebra.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace novikov {

/// Bilinear form sum c_ij Delta_ij, stored as an n x n matrix (zero-based).
class Cocycle {
public:
    Cocycle() = default;
    explicit Cocycle(int n) : n_(n), m_(static_cast<std::size_t>(n) * n) {}
    static Cocycle delta(int n, int i, int j);
    static Cocycle from_vector(int n, const RFVector& v);

    int dim() const { return n_; }
    const ScalarExpr& operator()(int i, int j) const { return m_[i * n_ + j]; }
    void set(int i, int j, const ScalarExpr& v) { m_.at(i * n_ + j) = simplify(v); }
    bool is_zero() const;
    std::set<Symbol> symbols() const;

    /// Row-major n^2 coordinates; throws std::domain_error on radicals.
    RFVector to_vector(const std::optional<Assignment>& at = std::nullopt) const;
    Cocycle substitute(const std::map<Symbol, ScalarExpr>& values) const;

    friend Cocycle operator+(const Cocycle& a, const Cocycle& b);
    friend Cocycle operator*(const ScalarExpr& s, const Cocycle& a);

    /// "D12 + alpha*D33"; "0" for the zero form.
    std::string to_string() const;
    nlohmann::json to_json() const;

private:
    int n_ = 0;
    std::vector<ScalarExpr> m_;
};

/// Parses a linear combination of D<i><j> (or D_<i>_<j>) symbols with coefficients in
/// the expression grammar, one-based. Throws std::invalid_argument.
Cocycle parse_cocycle(int n, std::string_view text);
/// Entries array [{"i","j","c"}], one-based.
Cocycle cocycle_from_json(int n, const nlohmann::json& entries);

bool is_cocycle(const Algebra& a, const Cocycle& theta, const std::optional<Assignment>& at = std::nullopt);

struct CocycleSpace {
    int dim = 0;
    RFMatrix z2;
    RFMatrix b2;
    RFMatrix h2;
};

CocycleSpace cocycle_space(const Algebra& a, const std::optional<Assignment>& at = std::nullopt);

/// Slice matrices C^(k)_ij = c_ij^k as n^2-vectors, the spanning set of B^2.
RFMatrix coboundary_slices(const Algebra& a, const std::optional<Assignment>& at = std::nullopt);

RFMatrix cocycle_annihilator(const Algebra& a, const std::vector<Cocycle>& thetas,
                             const std::optional<Assignment>& at = std::nullopt);

bool has_trivial_intersection(const Algebra& a, const std::vector<Cocycle>& thetas,
                              const std::optional<Assignment>& at = std::nullopt);

struct Extension {
    Algebra base;
    std::vector<Cocycle> cocycles;
    Algebra result;
};

/// A_theta = A + V with products xy + sum theta_m(x, y) e_{n+m}. Throws
/// std::invalid_argument("not a cocycle").
Extension central_extension(const Algebra& a, const std::vector<Cocycle>& thetas);

struct Split {
    RFMatrix basis;        // rows: complement basis first, then W
    Algebra relabeled;     // A in that basis
    Algebra quotient;
    std::vector<Cocycle> cocycles;
};

/// Split along W, a subspace of Ann(A). Throws std::invalid_argument if W is
/// not inside Ann(A) or not independent.
Split split_central_extension(const Algebra& a, const RFMatrix& w);

using ExprMatrix = std::vector<std::vector<ScalarExpr>>;

ExprMatrix parse_matrix(const nlohmann::json& rows);

/// phi(e_i) is column i of phi. Throws std::domain_error("singular matrix").
bool is_automorphism(const Algebra& a, const ExprMatrix& phi, const std::optional<Assignment>& at = std::nullopt);

/// phi^T theta phi. Throws std::invalid_argument("not an automorphism").
Cocycle act_on_cocycle(const Algebra& a, const ExprMatrix& phi, const Cocycle& theta,
                       const std::optional<Assignment>& at = std::nullopt);

/// Printed orbit formulas for one base algebra: alpha_k^* as expressions in the
/// template entries and alpha_1..alpha_m, read as coordinates in the basis nabla + B^2.
/// Optional raw entries give formulas for individual (i, j) entries of phi^T theta phi.
struct ActionFormulaCase {
    std::string id;
    std::string reading;
    Algebra algebra;
    ExprMatrix phi;
    std::vector<Symbol> vars;
    std::vector<Cocycle> nabla;
    std::vector<Symbol> coords;
    std::vector<ScalarExpr> formulas;   // empty: coordinates not checked
    struct Entry {
        int i;
        int j;
        ScalarExpr value;
    };
    std::vector<Entry> entries;
    bool expected_pass = true;
};

struct ActionReport {
    std::string id;
    std::string reading;
    bool pass = false;
    int samples = 0;
    std::string detail;
};

ActionReport verify_action_formulas(const ActionFormulaCase& c, std::uint64_t seed, int samples = 24);

}  // namespace novikov
