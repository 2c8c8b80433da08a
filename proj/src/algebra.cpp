#include "novikov/algebra.hpp"

#include <sstream>
#include <stdexcept>

namespace novikov {

Algebra::Algebra(std::string name, int dim, std::vector<Symbol> params)
    : name_(std::move(name)), dim_(dim), params_(std::move(params)) {
    if (dim < 0) throw std::invalid_argument("negative dimension");
}

ScalarExpr Algebra::constant(int i, int j, int k) const {
    auto it = constants_.find({i, j, k});
    return it == constants_.end() ? ScalarExpr() : it->second;
}

void Algebra::set_constant(int i, int j, int k, const ScalarExpr& value) {
    if (i < 0 || j < 0 || k < 0 || i >= dim_ || j >= dim_ || k >= dim_) {
        throw std::out_of_range("structure constant index out of range");
    }
    ScalarExpr v = simplify(value);
    if (v.is_literal_zero()) {
        constants_.erase({i, j, k});
    } else {
        constants_[{i, j, k}] = v;
    }
}

void Algebra::add_product(int i, int j, int k, const ScalarExpr& value) {
    set_constant(i, j, k, constant(i, j, k) + value);
}

Algebra Algebra::substitute(const std::map<Symbol, ScalarExpr>& values) const {
    std::vector<Symbol> remaining;
    for (Symbol p : params_) {
        if (values.find(p) == values.end()) remaining.push_back(p);
    }
    Algebra out(name_, dim_, remaining);
    for (const auto& c : constraints_) {
        ScalarExpr s = simplify(novikov::substitute(c, values));
        if (s.is_leaf() && s.leaf().is_constant()) {
            if (s.is_literal_zero()) throw std::domain_error("constraint violated");
            continue;
        }
        out.constraints_.push_back(s);
    }
    for (const auto& [key, v] : constants_) out.set_constant(key[0], key[1], key[2], novikov::substitute(v, values));
    return out;
}

void Algebra::check_constraints(const Assignment& at) const {
    std::map<Symbol, ScalarExpr> values;
    for (const auto& [s, v] : at) values.emplace(s, ScalarExpr(v));
    for (const auto& c : constraints_) {
        if (simplify(novikov::substitute(c, values)).is_literal_zero()) {
            throw std::domain_error("constraint violated: " + c.to_string() + " must be nonzero");
        }
    }
}

Algebra Algebra::instantiate(const Assignment& at) const {
    check_constraints(at);
    std::map<Symbol, ScalarExpr> values;
    for (const auto& [s, v] : at) values.emplace(s, ScalarExpr(v));
    return substitute(values);
}

bool Algebra::has_roots() const {
    for (const auto& [key, v] : constants_) {
        if (v.has_roots()) return true;
    }
    return false;
}

bool Algebra::same_constants(const Algebra& other) const {
    if (dim_ != other.dim_) return false;
    for (int i = 0; i < dim_; ++i) {
        for (int j = 0; j < dim_; ++j) {
            for (int k = 0; k < dim_; ++k) {
                if (!simplify(constant(i, j, k) - other.constant(i, j, k)).is_literal_zero()) return false;
            }
        }
    }
    return true;
}

std::string Algebra::products_string() const {
    std::map<std::pair<int, int>, std::string> lines;
    for (const auto& [key, v] : constants_) {
        std::string basis = "e" + std::to_string(key[2] + 1);
        std::string term;
        if (v == ScalarExpr(1L)) {
            term = basis;
        } else if (v == ScalarExpr(-1L)) {
            term = "-" + basis;
        } else {
            std::string s = v.to_string();
            bool plain = v.is_leaf() && v.leaf().is_polynomial() && v.leaf().num().is_monomial() &&
                         v.leaf().num().leading_coefficient().is_real();
            term = (plain ? s : "(" + s + ")") + "*" + basis;
        }
        std::string& line = lines[{key[0], key[1]}];
        if (line.empty()) {
            line = term;
        } else if (term.front() == '-') {
            line += " - " + term.substr(1);
        } else {
            line += " + " + term;
        }
    }
    std::string out;
    for (const auto& [ij, rhs] : lines) {
        if (!out.empty()) out += ", ";
        out += "e" + std::to_string(ij.first + 1) + "e" + std::to_string(ij.second + 1) + " = " + rhs;
    }
    return out.empty() ? "(zero product)" : out;
}

// ---------------------------------------------------------------------------

Tensor::Tensor(const Algebra& a, const std::optional<Assignment>& at) : n_(a.dim()) {
    c_.assign(static_cast<std::size_t>(n_) * n_ * n_, RationalFunction());
    std::map<Symbol, ScalarExpr> values;
    if (at) {
        a.check_constraints(*at);
        for (const auto& [s, v] : *at) values.emplace(s, ScalarExpr(v));
    }
    for (const auto& [key, v] : a.constants()) {
        ScalarExpr e = values.empty() ? v : simplify(substitute(v, values));
        auto f = e.as_rational_function();
        if (!f) throw std::domain_error("structure constants contain radicals");
        c_[(key[0] * n_ + key[1]) * n_ + key[2]] = *f;
    }
}

RFVector Tensor::multiply(const RFVector& x, const RFVector& y) const {
    RFVector out(n_);
    for (int i = 0; i < n_; ++i) {
        if (x[i].is_zero()) continue;
        for (int j = 0; j < n_; ++j) {
            if (y[j].is_zero()) continue;
            RationalFunction xy = x[i] * y[j];
            for (int k = 0; k < n_; ++k) {
                const auto& c = (*this)(i, j, k);
                if (!c.is_zero()) out[k] += xy * c;
            }
        }
    }
    return out;
}

Vector multiply(const Algebra& a, const Vector& x, const Vector& y) {
    int n = a.dim();
    if (static_cast<int>(x.size()) != n || static_cast<int>(y.size()) != n) {
        throw std::invalid_argument("dimension mismatch");
    }
    Vector out(n);
    for (const auto& [key, c] : a.constants()) {
        const auto& xi = x[key[0]];
        const auto& yj = y[key[1]];
        if (xi.is_literal_zero() || yj.is_literal_zero()) continue;
        out[key[2]] += xi * yj * c;
    }
    for (auto& v : out) v = simplify(v);
    return out;
}

Vector basis_vector(int n, int i) {
    Vector v(n);
    v.at(i) = ScalarExpr(1L);
    return v;
}

namespace {

bool is_zero_vector(const RFVector& v) {
    for (const auto& x : v) {
        if (!x.is_zero()) return false;
    }
    return true;
}

RFVector unit(int n, int i) {
    RFVector v(n);
    v[i] = RationalFunction(1);
    return v;
}

}  // namespace

IdentityFlags check_identities(const Algebra& a, const std::optional<Assignment>& at) {
    Tensor c(a, at);
    int n = a.dim();
    std::vector<RFVector> prod(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) prod[i * n + j] = c.multiply(unit(n, i), unit(n, j));
    }
    auto left = [&](int i, int j, int k) { return c.multiply(prod[i * n + j], unit(n, k)); };
    auto right = [&](int i, int j, int k) { return c.multiply(unit(n, i), prod[j * n + k]); };

    IdentityFlags f{true, true, false, true};
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            for (int k = 0; k < n; ++k) {
                RFVector l = left(i, j, k);
                RFVector r = right(i, j, k);
                if (f.right_commutative && l != left(i, k, j)) f.right_commutative = false;
                if (f.left_symmetric) {
                    RFVector l2 = left(j, i, k);
                    RFVector r2 = right(j, i, k);
                    for (int m = 0; m < n; ++m) {
                        if (l[m] - r[m] != l2[m] - r2[m]) {
                            f.left_symmetric = false;
                            break;
                        }
                    }
                }
                if (f.two_step && (!is_zero_vector(l) || !is_zero_vector(r))) f.two_step = false;
            }
        }
    }
    f.novikov = f.right_commutative && f.left_symmetric;
    return f;
}

RFMatrix annihilator_basis(const Algebra& a, const std::optional<Assignment>& at) {
    Tensor c(a, at);
    int n = a.dim();
    RFMatrix rows;
    for (int j = 0; j < n; ++j) {
        for (int k = 0; k < n; ++k) {
            RFVector xe(n), ex(n);
            for (int i = 0; i < n; ++i) {
                xe[i] = c(i, j, k);
                ex[i] = c(j, i, k);
            }
            rows.push_back(std::move(xe));
            rows.push_back(std::move(ex));
        }
    }
    return nullspace(rows, n);
}

DerivedSeries derived_powers(const Algebra& a, const std::optional<Assignment>& at) {
    Tensor c(a, at);
    int n = a.dim();
    DerivedSeries out;
    std::vector<RFMatrix> powers(2);
    for (int i = 0; i < n; ++i) powers[1].push_back(unit(n, i));
    out.dims.push_back(n);
    if (n == 0) {
        out.nilpotency_index = 1;
        return out;
    }
    // The powers are nested. Once A^j = ... = A^(2j-1) every later power equals A^j.
    int run_start = 1;
    for (int k = 2;; ++k) {
        RFMatrix gens;
        for (int p = 1; p < k; ++p) {
            for (const auto& u : powers[p]) {
                for (const auto& v : powers[k - p]) {
                    RFVector w = c.multiply(u, v);
                    if (!is_zero_vector(w)) gens.push_back(std::move(w));
                }
            }
        }
        powers.push_back(row_reduce(gens, n).rows);
        int d = static_cast<int>(powers.back().size());
        out.dims.push_back(d);
        if (d == 0) {
            out.nilpotency_index = k;
            return out;
        }
        if (d != out.dims[out.dims.size() - 2]) run_start = k;
        if (k >= 2 * run_start - 1) break;
    }
    while (out.dims.size() > 2 && out.dims[out.dims.size() - 2] == out.dims.back()) out.dims.pop_back();
    return out;
}

int derivation_dim(const Algebra& a, const std::optional<Assignment>& at) {
    Tensor c(a, at);
    int n = a.dim();
    std::size_t vars = static_cast<std::size_t>(n) * n;
    RFMatrix rows;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            for (int k = 0; k < n; ++k) {
                RFVector row(vars);
                for (int l = 0; l < n; ++l) row[l * n + k] += c(i, j, l);
                for (int p = 0; p < n; ++p) {
                    row[i * n + p] -= c(p, j, k);
                    row[j * n + p] -= c(i, p, k);
                }
                if (!is_zero_vector(row)) rows.push_back(std::move(row));
            }
        }
    }
    return static_cast<int>(vars - rank(rows, vars));
}

bool operator==(const InvariantProfile& a, const InvariantProfile& b) {
    return a.dim_ann == b.dim_ann && a.dims_derived == b.dims_derived && a.dim_der == b.dim_der &&
           a.flags.right_commutative == b.flags.right_commutative &&
           a.flags.left_symmetric == b.flags.left_symmetric && a.flags.two_step == b.flags.two_step &&
           a.nilpotency_index == b.nilpotency_index;
}

std::string InvariantProfile::to_string() const {
    std::ostringstream os;
    os << "dim_ann=" << dim_ann << " derived=[";
    for (std::size_t k = 0; k < dims_derived.size(); ++k) os << (k ? "," : "") << dims_derived[k];
    os << "] dim_der=" << dim_der << " right_commutative=" << flags.right_commutative
       << " left_symmetric=" << flags.left_symmetric << " novikov=" << flags.novikov
       << " two_step=" << flags.two_step << " nilpotency_index=";
    if (nilpotency_index) {
        os << *nilpotency_index;
    } else {
        os << "not nilpotent";
    }
    return os.str();
}

nlohmann::json InvariantProfile::to_json() const {
    nlohmann::json j;
    j["dim_ann"] = dim_ann;
    j["dims_derived"] = dims_derived;
    j["dim_der"] = dim_der;
    j["right_commutative"] = flags.right_commutative;
    j["left_symmetric"] = flags.left_symmetric;
    j["novikov"] = flags.novikov;
    j["two_step"] = flags.two_step;
    if (nilpotency_index) {
        j["nilpotency_index"] = *nilpotency_index;
    } else {
        j["nilpotency_index"] = "not nilpotent";
    }
    return j;
}

InvariantProfile invariant_profile(const Algebra& a, const std::optional<Assignment>& at) {
    InvariantProfile p;
    p.dim_ann = static_cast<int>(annihilator_basis(a, at).size());
    DerivedSeries d = derived_powers(a, at);
    p.dims_derived = d.dims;
    p.nilpotency_index = d.nilpotency_index;
    p.dim_der = derivation_dim(a, at);
    p.flags = check_identities(a, at);
    return p;
}

Algebra change_basis(const Algebra& a, const RFMatrix& rows) {
    Tensor c(a);
    int n = a.dim();
    RFMatrix inv = inverse(rows);
    Algebra out(a.name(), n, a.params());
    for (const auto& cons : a.constraints()) out.add_constraint(cons);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            RFVector v = c.multiply(rows[i], rows[j]);
            for (int k = 0; k < n; ++k) {
                RationalFunction x;
                for (int m = 0; m < n; ++m) {
                    if (!v[m].is_zero() && !inv[m][k].is_zero()) x += v[m] * inv[m][k];
                }
                if (!x.is_zero()) out.set_constant(i, j, k, ScalarExpr(x));
            }
        }
    }
    return out;
}

Algebra algebra_from_json(const nlohmann::json& j) {
    try {
        std::vector<Symbol> params;
        for (const auto& p : j.value("params", nlohmann::json::array())) {
            std::string name = p.get<std::string>();
            if (name == "t" || name == "i") throw std::invalid_argument("reserved parameter name '" + name + "'");
            params.emplace_back(name);
        }
        Algebra a(j.at("name").get<std::string>(), j.at("dim").get<int>(), params);
        std::set<Symbol> allowed(params.begin(), params.end());
        auto parse_checked = [&](const std::string& text) {
            ScalarExpr e = parse_expr(text);
            for (Symbol s : e.symbols()) {
                if (allowed.count(s) == 0) {
                    throw std::invalid_argument("algebra " + a.name() + ": undeclared symbol '" + s.name() + "'");
                }
            }
            return e;
        };
        for (const auto& c : j.value("constraints_nonzero", nlohmann::json::array())) {
            a.add_constraint(parse_checked(c.get<std::string>()));
        }
        for (const auto& p : j.value("products", nlohmann::json::array())) {
            int i = p.at("i").get<int>() - 1;
            int jj = p.at("j").get<int>() - 1;
            int k = p.at("k").get<int>() - 1;
            ScalarExpr c = p.at("c").is_number_integer() ? ScalarExpr(p.at("c").get<long>())
                                                         : parse_checked(p.at("c").get<std::string>());
            a.add_product(i, jj, k, c);
        }
        return a;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("malformed algebra JSON: ") + e.what());
    } catch (const std::out_of_range& e) {
        throw std::invalid_argument(std::string("malformed algebra JSON: ") + e.what());
    }
}

nlohmann::json algebra_to_json(const Algebra& a) {
    nlohmann::json j;
    j["name"] = a.name();
    j["dim"] = a.dim();
    j["params"] = nlohmann::json::array();
    for (Symbol p : a.params()) j["params"].push_back(p.name());
    j["constraints_nonzero"] = nlohmann::json::array();
    for (const auto& c : a.constraints()) j["constraints_nonzero"].push_back(c.to_string());
    j["products"] = nlohmann::json::array();
    for (const auto& [key, v] : a.constants()) {
        j["products"].push_back({{"i", key[0] + 1}, {"j", key[1] + 1}, {"k", key[2] + 1}, {"c", v.to_string()}});
    }
    return j;
}

}  // namespace novikov
