#include "novikov/cohomology.hpp"

#include "novikov/sampling.hpp"

#include <regex>
#include <sstream>
#include <stdexcept>

namespace novikov {

Cocycle Cocycle::delta(int n, int i, int j) {
    Cocycle c(n);
    c.set(i, j, ScalarExpr(1L));
    return c;
}

Cocycle Cocycle::from_vector(int n, const RFVector& v) {
    Cocycle c(n);
    for (int k = 0; k < n * n; ++k) c.m_[k] = ScalarExpr(v.at(k));
    return c;
}

bool Cocycle::is_zero() const {
    for (const auto& x : m_) {
        if (!x.is_literal_zero()) return false;
    }
    return true;
}

std::set<Symbol> Cocycle::symbols() const {
    std::set<Symbol> out;
    for (const auto& x : m_) {
        auto s = x.symbols();
        out.insert(s.begin(), s.end());
    }
    return out;
}

RFVector Cocycle::to_vector(const std::optional<Assignment>& at) const {
    std::map<Symbol, ScalarExpr> values;
    if (at) {
        for (const auto& [s, v] : *at) values.emplace(s, ScalarExpr(v));
    }
    RFVector out;
    out.reserve(m_.size());
    for (const auto& x : m_) {
        auto f = (values.empty() ? x : simplify(novikov::substitute(x, values))).as_rational_function();
        if (!f) throw std::domain_error("cocycle entries contain radicals");
        out.push_back(*f);
    }
    return out;
}

Cocycle Cocycle::substitute(const std::map<Symbol, ScalarExpr>& values) const {
    Cocycle c(n_);
    for (std::size_t k = 0; k < m_.size(); ++k) c.m_[k] = simplify(novikov::substitute(m_[k], values));
    return c;
}

Cocycle operator+(const Cocycle& a, const Cocycle& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("dimension mismatch");
    Cocycle c(a.n_);
    for (std::size_t k = 0; k < a.m_.size(); ++k) c.m_[k] = simplify(a.m_[k] + b.m_[k]);
    return c;
}

Cocycle operator*(const ScalarExpr& s, const Cocycle& a) {
    Cocycle c(a.n_);
    for (std::size_t k = 0; k < a.m_.size(); ++k) c.m_[k] = simplify(s * a.m_[k]);
    return c;
}

std::string Cocycle::to_string() const {
    std::string out;
    for (int i = 0; i < n_; ++i) {
        for (int j = 0; j < n_; ++j) {
            const ScalarExpr& v = (*this)(i, j);
            if (v.is_literal_zero()) continue;
            std::string d = "D" + std::to_string(i + 1) + std::to_string(j + 1);
            std::string term;
            if (v == ScalarExpr(1L)) {
                term = d;
            } else if (v == ScalarExpr(-1L)) {
                term = "-" + d;
            } else {
                bool plain = v.is_leaf() && v.leaf().is_polynomial() && v.leaf().num().is_monomial() &&
                             v.leaf().num().leading_coefficient().is_real();
                term = (plain ? v.to_string() : "(" + v.to_string() + ")") + "*" + d;
            }
            if (out.empty()) {
                out = term;
            } else if (term.front() == '-') {
                out += " - " + term.substr(1);
            } else {
                out += " + " + term;
            }
        }
    }
    return out.empty() ? "0" : out;
}

nlohmann::json Cocycle::to_json() const {
    nlohmann::json entries = nlohmann::json::array();
    for (int i = 0; i < n_; ++i) {
        for (int j = 0; j < n_; ++j) {
            if (!(*this)(i, j).is_literal_zero()) {
                entries.push_back({{"i", i + 1}, {"j", j + 1}, {"c", (*this)(i, j).to_string()}});
            }
        }
    }
    return entries;
}

Cocycle parse_cocycle(int n, std::string_view text) {
    static const std::regex short_form("D([0-9])([0-9])");
    static const std::regex long_form("D_([0-9]+)_([0-9]+)");
    ScalarExpr e = parse_expr(text);
    auto f = e.as_rational_function();
    if (!f) throw std::invalid_argument("cocycle coefficients must be root-free");
    std::map<Symbol, std::pair<int, int>> deltas;
    for (Symbol s : f->symbols()) {
        std::smatch m;
        const std::string& name = s.name();
        if (std::regex_match(name, m, short_form) || std::regex_match(name, m, long_form)) {
            int i = std::stoi(m[1]) - 1;
            int j = std::stoi(m[2]) - 1;
            if (i < 0 || j < 0 || i >= n || j >= n) throw std::invalid_argument("index out of range in " + name);
            deltas.emplace(s, std::make_pair(i, j));
        }
    }
    for (const auto& [s, ij] : deltas) {
        if (f->den().contains(s)) throw std::invalid_argument("cocycle expression is not linear in the D symbols");
    }
    std::map<Symbol, RationalFunction> zero;
    for (const auto& [s, ij] : deltas) zero.emplace(s, RationalFunction());
    if (!f->substitute(zero).is_zero()) throw std::invalid_argument("cocycle expression has a constant term");
    Cocycle c(n);
    Polynomial rest;
    for (const auto& [s, ij] : deltas) {
        Polynomial coeff = f->num().coefficient(s, 1);
        for (const auto& [s2, ij2] : deltas) {
            if (coeff.contains(s2)) throw std::invalid_argument("cocycle expression is not linear in the D symbols");
        }
        if (f->num().degree(s) > 1) throw std::invalid_argument("cocycle expression is not linear in the D symbols");
        c.set(ij.first, ij.second, ScalarExpr(RationalFunction(coeff) / RationalFunction(f->den())));
    }
    return c;
}

Cocycle cocycle_from_json(int n, const nlohmann::json& entries) {
    Cocycle c(n);
    for (const auto& e : entries) {
        int i = e.at("i").get<int>() - 1;
        int j = e.at("j").get<int>() - 1;
        if (i < 0 || j < 0 || i >= n || j >= n) throw std::invalid_argument("cocycle index out of range");
        ScalarExpr v = e.at("c").is_number_integer() ? ScalarExpr(e.at("c").get<long>())
                                                     : parse_expr(e.at("c").get<std::string>());
        c.set(i, j, c(i, j) + v);
    }
    return c;
}

namespace {

RFMatrix cocycle_conditions(const Tensor& c) {
    int n = c.dim();
    std::size_t vars = static_cast<std::size_t>(n) * n;
    auto var = [n](int a, int b) { return static_cast<std::size_t>(a * n + b); };
    RFMatrix rows;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            for (int k = 0; k < n; ++k) {
                RFVector rc(vars), ls(vars);
                for (int l = 0; l < n; ++l) {
                    rc[var(l, k)] += c(i, j, l);
                    rc[var(l, j)] -= c(i, k, l);
                    ls[var(l, k)] += c(i, j, l);
                    ls[var(i, l)] -= c(j, k, l);
                    ls[var(l, k)] -= c(j, i, l);
                    ls[var(j, l)] += c(i, k, l);
                }
                for (auto* row : {&rc, &ls}) {
                    bool nonzero = false;
                    for (const auto& x : *row) nonzero = nonzero || !x.is_zero();
                    if (nonzero) rows.push_back(std::move(*row));
                }
            }
        }
    }
    return rows;
}

RationalFunction dot(const RFVector& a, const RFVector& b) {
    RationalFunction s;
    for (std::size_t k = 0; k < a.size(); ++k) {
        if (!a[k].is_zero() && !b[k].is_zero()) s += a[k] * b[k];
    }
    return s;
}

}  // namespace

bool is_cocycle(const Algebra& a, const Cocycle& theta, const std::optional<Assignment>& at) {
    if (theta.dim() != a.dim()) throw std::invalid_argument("dimension mismatch");
    Tensor c(a, at);
    RFVector v = theta.to_vector(at);
    for (const auto& row : cocycle_conditions(c)) {
        if (!dot(row, v).is_zero()) return false;
    }
    return true;
}

RFMatrix coboundary_slices(const Algebra& a, const std::optional<Assignment>& at) {
    Tensor c(a, at);
    int n = a.dim();
    RFMatrix out;
    for (int k = 0; k < n; ++k) {
        RFVector v(static_cast<std::size_t>(n) * n);
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) v[i * n + j] = c(i, j, k);
        }
        out.push_back(std::move(v));
    }
    return out;
}

CocycleSpace cocycle_space(const Algebra& a, const std::optional<Assignment>& at) {
    Tensor c(a, at);
    int n = a.dim();
    std::size_t vars = static_cast<std::size_t>(n) * n;
    CocycleSpace s;
    s.dim = n;
    s.z2 = nullspace(cocycle_conditions(c), vars);
    s.b2 = extend_basis({}, coboundary_slices(a, at), vars);
    s.h2 = extend_basis(s.b2, s.z2, vars);
    return s;
}

RFMatrix cocycle_annihilator(const Algebra& a, const std::vector<Cocycle>& thetas,
                             const std::optional<Assignment>& at) {
    int n = a.dim();
    RFMatrix rows;
    for (const auto& theta : thetas) {
        if (theta.dim() != n) throw std::invalid_argument("dimension mismatch");
        RFVector v = theta.to_vector(at);
        for (int j = 0; j < n; ++j) {
            RFVector row(n), col(n);
            for (int i = 0; i < n; ++i) {
                row[i] = v[i * n + j];
                col[i] = v[j * n + i];
            }
            rows.push_back(std::move(row));
            rows.push_back(std::move(col));
        }
    }
    return nullspace(rows, n);
}

bool has_trivial_intersection(const Algebra& a, const std::vector<Cocycle>& thetas,
                              const std::optional<Assignment>& at) {
    return intersection(cocycle_annihilator(a, thetas, at), annihilator_basis(a, at), a.dim()).empty();
}

Extension central_extension(const Algebra& a, const std::vector<Cocycle>& thetas) {
    int n = a.dim();
    int s = static_cast<int>(thetas.size());
    std::vector<Symbol> params = a.params();
    for (const auto& theta : thetas) {
        if (theta.dim() != n) throw std::invalid_argument("dimension mismatch");
        if (!is_cocycle(a, theta)) throw std::invalid_argument("not a cocycle");
        for (Symbol sym : theta.symbols()) {
            if (std::find(params.begin(), params.end(), sym) == params.end()) params.push_back(sym);
        }
    }
    Algebra result(a.name() + "_ext", n + s, params);
    for (const auto& c : a.constraints()) result.add_constraint(c);
    for (const auto& [key, v] : a.constants()) result.set_constant(key[0], key[1], key[2], v);
    for (int m = 0; m < s; ++m) {
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                if (!thetas[m](i, j).is_literal_zero()) result.set_constant(i, j, n + m, thetas[m](i, j));
            }
        }
    }
    return Extension{a, thetas, result};
}

Split split_central_extension(const Algebra& a, const RFMatrix& w) {
    int n = a.dim();
    int s = static_cast<int>(w.size());
    if (s == 0) throw std::invalid_argument("empty subspace");
    if (static_cast<int>(rank(w, n)) != s) throw std::invalid_argument("subspace vectors are not independent");
    RFMatrix ann = annihilator_basis(a);
    for (const auto& v : w) {
        if (static_cast<int>(v.size()) != n) throw std::invalid_argument("dimension mismatch");
        if (!in_span(ann, v)) throw std::invalid_argument("subspace is not contained in Ann(A)");
    }
    RFMatrix standard;
    for (int i = 0; i < n; ++i) {
        RFVector e(n);
        e[i] = RationalFunction(1);
        standard.push_back(std::move(e));
    }
    Split out;
    out.basis = extend_basis(w, standard, n);
    out.basis.insert(out.basis.end(), w.begin(), w.end());
    out.relabeled = change_basis(a, out.basis);
    int q = n - s;
    out.quotient = Algebra(a.name() + "/W", q, a.params());
    for (const auto& c : a.constraints()) out.quotient.add_constraint(c);
    out.cocycles.assign(s, Cocycle(q));
    for (const auto& [key, v] : out.relabeled.constants()) {
        if (key[0] >= q || key[1] >= q) throw std::logic_error("annihilator vector with nonzero products");
        if (key[2] < q) {
            out.quotient.set_constant(key[0], key[1], key[2], v);
        } else {
            out.cocycles[key[2] - q].set(key[0], key[1], v);
        }
    }
    return out;
}

ExprMatrix parse_matrix(const nlohmann::json& rows) {
    ExprMatrix m;
    for (const auto& row : rows) {
        std::vector<ScalarExpr> r;
        for (const auto& x : row) r.push_back(x.is_number_integer() ? ScalarExpr(x.get<long>()) : parse_expr(x.get<std::string>()));
        m.push_back(std::move(r));
    }
    for (const auto& r : m) {
        if (r.size() != m.size()) throw std::invalid_argument("matrix must be square");
    }
    return m;
}

namespace {

RFMatrix to_rf(const ExprMatrix& m, const std::optional<Assignment>& at) {
    std::map<Symbol, ScalarExpr> values;
    if (at) {
        for (const auto& [s, v] : *at) values.emplace(s, ScalarExpr(v));
    }
    RFMatrix out;
    for (const auto& row : m) {
        RFVector r;
        for (const auto& x : row) {
            auto f = simplify(substitute(x, values)).as_rational_function();
            if (!f) throw std::domain_error("matrix entries contain radicals");
            r.push_back(*f);
        }
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace

bool is_automorphism(const Algebra& a, const ExprMatrix& phi, const std::optional<Assignment>& at) {
    int n = a.dim();
    if (static_cast<int>(phi.size()) != n) throw std::invalid_argument("dimension mismatch");
    RFMatrix f = to_rf(phi, at);
    if (determinant(f).is_zero()) throw std::domain_error("singular matrix");
    Tensor c(a, at);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            for (int r = 0; r < n; ++r) {
                RationalFunction lhs, rhs;
                for (int p = 0; p < n; ++p) {
                    if (f[p][i].is_zero()) continue;
                    for (int q = 0; q < n; ++q) {
                        if (!f[q][j].is_zero() && !c(p, q, r).is_zero()) lhs += f[p][i] * f[q][j] * c(p, q, r);
                    }
                }
                for (int l = 0; l < n; ++l) {
                    if (!c(i, j, l).is_zero()) rhs += c(i, j, l) * f[r][l];
                }
                if (lhs != rhs) return false;
            }
        }
    }
    return true;
}

Cocycle act_on_cocycle(const Algebra& a, const ExprMatrix& phi, const Cocycle& theta,
                       const std::optional<Assignment>& at) {
    if (!is_automorphism(a, phi, at)) throw std::invalid_argument("not an automorphism");
    int n = a.dim();
    RFMatrix f = to_rf(phi, at);
    RFVector th = theta.to_vector(at);
    RFVector out(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            RationalFunction s;
            for (int p = 0; p < n; ++p) {
                if (f[p][i].is_zero()) continue;
                for (int q = 0; q < n; ++q) {
                    if (!th[p * n + q].is_zero() && !f[q][j].is_zero()) s += f[p][i] * th[p * n + q] * f[q][j];
                }
            }
            out[i * n + j] = s;
        }
    }
    return Cocycle::from_vector(n, out);
}

ActionReport verify_action_formulas(const ActionFormulaCase& c, std::uint64_t seed, int samples) {
    ActionReport rep{c.id, c.reading, true, 0, ""};
    std::mt19937_64 rng(seed);
    int n = c.algebra.dim();
    std::size_t vars = static_cast<std::size_t>(n) * n;
    std::vector<Symbol> symbols = c.algebra.params();
    symbols.insert(symbols.end(), c.vars.begin(), c.vars.end());
    symbols.insert(symbols.end(), c.coords.begin(), c.coords.end());
    std::vector<ScalarExpr> nonzero = c.algebra.constraints();
    auto describe = [](const Assignment& at) {
        std::string s;
        for (const auto& [sym, v] : at) s += (s.empty() ? "" : ", ") + sym.name() + "=" + v.to_string();
        return s;
    };
    for (int k = 0; k < samples; ++k) {
        Assignment at = sample_assignment(symbols, nonzero, rng);
        if (determinant(to_rf(c.phi, at)).is_zero()) {
            --k;
            continue;
        }
        ++rep.samples;
        std::map<Symbol, ScalarExpr> values;
        for (const auto& [s, v] : at) values.emplace(s, ScalarExpr(v));
        if (!is_automorphism(c.algebra, c.phi, at)) {
            rep.pass = false;
            rep.detail = "template is not an automorphism at " + describe(at);
            return rep;
        }
        Cocycle theta(n);
        for (std::size_t m = 0; m < c.nabla.size(); ++m) theta = theta + ScalarExpr::symbol(c.coords[m]) * c.nabla[m];
        Cocycle image = act_on_cocycle(c.algebra, c.phi, theta, at);
        RFVector iv = image.to_vector();
        for (const auto& e : c.entries) {
            RationalFunction expected = *simplify(substitute(e.value, values)).as_rational_function();
            if (iv[e.i * n + e.j] != expected) {
                rep.pass = false;
                rep.detail = "entry (" + std::to_string(e.i + 1) + "," + std::to_string(e.j + 1) + ") is " +
                             iv[e.i * n + e.j].to_string() + ", formula gives " + expected.to_string() + " at " +
                             describe(at);
                return rep;
            }
        }
        if (c.formulas.empty()) continue;
        // Coordinates of the image in the basis nabla_1..nabla_m, B^2.
        RFMatrix basis;
        for (const auto& nb : c.nabla) basis.push_back(nb.to_vector(at));
        RFMatrix b2 = extend_basis({}, coboundary_slices(c.algebra, at), vars);
        basis.insert(basis.end(), b2.begin(), b2.end());
        std::size_t m = basis.size();
        if (rank(basis, vars) != m) throw std::logic_error("nabla and B^2 are not independent");
        RFMatrix sys(vars, RFVector(m + 1));
        for (std::size_t r = 0; r < vars; ++r) {
            for (std::size_t col = 0; col < m; ++col) sys[r][col] = basis[col][r];
            sys[r][m] = iv[r];
        }
        Echelon e = row_reduce(sys, m + 1);
        if (!e.pivots.empty() && e.pivots.back() == m) {
            rep.pass = false;
            rep.detail = "image leaves span(nabla) + B^2 at " + describe(at);
            return rep;
        }
        for (std::size_t f = 0; f < c.formulas.size(); ++f) {
            RationalFunction coord;
            for (std::size_t r = 0; r < e.rows.size(); ++r) {
                if (e.pivots[r] == f) coord = e.rows[r][m];
            }
            RationalFunction expected = *simplify(substitute(c.formulas[f], values)).as_rational_function();
            if (coord != expected) {
                rep.pass = false;
                rep.detail = c.coords[f].name() + "* is " + coord.to_string() + ", formula gives " +
                             expected.to_string() + " at " + describe(at);
                return rep;
            }
        }
    }
    rep.detail = "agrees at " + std::to_string(rep.samples) + " sampled automorphisms";
    return rep;
}

}  // namespace novikov
