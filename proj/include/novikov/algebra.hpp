#pragma once

#include "novikov/linear_algebra.hpp"
#include "novikov/scalar_expr.hpp"

#include <json.hpp>

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace novikov {

using Vector = std::vector<ScalarExpr>;

/// Structure constants c_ij^k with zero-based indices.
class Algebra {
public:
    Algebra() = default;
    Algebra(std::string name, int dim, std::vector<Symbol> params = {});

    const std::string& name() const { return name_; }
    void set_name(std::string name) { name_ = std::move(name); }
    int dim() const { return dim_; }
    const std::vector<Symbol>& params() const { return params_; }
    const std::vector<ScalarExpr>& constraints() const { return constraints_; }
    void add_constraint(ScalarExpr nonzero) { constraints_.push_back(std::move(nonzero)); }

    using Key = std::array<int, 3>;
    const std::map<Key, ScalarExpr>& constants() const { return constants_; }
    ScalarExpr constant(int i, int j, int k) const;
    /// Zero values erase the entry.
    void set_constant(int i, int j, int k, const ScalarExpr& value);
    void add_product(int i, int j, int k, const ScalarExpr& value);

    /// Replaces parameters; substituted parameters leave the parameter list.
    Algebra substitute(const std::map<Symbol, ScalarExpr>& values) const;
    /// Exact specialization. Throws std::domain_error("constraint violated").
    Algebra instantiate(const Assignment& at) const;
    /// Throws std::domain_error("constraint violated") if a constraint vanishes at `at`.
    void check_constraints(const Assignment& at) const;

    bool has_roots() const;
    bool same_constants(const Algebra& other) const;
    std::string products_string() const;

private:
    std::string name_;
    int dim_ = 0;
    std::vector<Symbol> params_;
    std::vector<ScalarExpr> constraints_;
    std::map<Key, ScalarExpr> constants_;
};

/// Dense n*n*n tensor of root-free constants, index (i*n + j)*n + k.
class Tensor {
public:
    explicit Tensor(const Algebra& a, const std::optional<Assignment>& at = std::nullopt);
    int dim() const { return n_; }
    const RationalFunction& operator()(int i, int j, int k) const { return c_[(i * n_ + j) * n_ + k]; }
    RFVector multiply(const RFVector& x, const RFVector& y) const;

private:
    int n_;
    std::vector<RationalFunction> c_;
};

Vector multiply(const Algebra& a, const Vector& x, const Vector& y);
Vector basis_vector(int n, int i);

struct IdentityFlags {
    bool right_commutative = false;
    bool left_symmetric = false;
    bool novikov = false;
    bool two_step = false;
};

IdentityFlags check_identities(const Algebra& a, const std::optional<Assignment>& at = std::nullopt);

RFMatrix annihilator_basis(const Algebra& a, const std::optional<Assignment>& at = std::nullopt);

struct DerivedSeries {
    std::vector<int> dims;                 // dim A, dim A^2, ...
    std::optional<int> nilpotency_index;   // smallest m with A^m = 0
};

DerivedSeries derived_powers(const Algebra& a, const std::optional<Assignment>& at = std::nullopt);

int derivation_dim(const Algebra& a, const std::optional<Assignment>& at = std::nullopt);

struct InvariantProfile {
    int dim_ann = 0;
    std::vector<int> dims_derived;
    int dim_der = 0;
    IdentityFlags flags;
    std::optional<int> nilpotency_index;

    friend bool operator==(const InvariantProfile& a, const InvariantProfile& b);
    std::string to_string() const;
    nlohmann::json to_json() const;
};

InvariantProfile invariant_profile(const Algebra& a, const std::optional<Assignment>& at = std::nullopt);

/// Constants in the basis E_i = sum_j rows[i][j] e_j. Root-free input only.
Algebra change_basis(const Algebra& a, const RFMatrix& rows);

Algebra algebra_from_json(const nlohmann::json& j);
nlohmann::json algebra_to_json(const Algebra& a);

}  // namespace novikov
