#include "novikov/linear_algebra.hpp"

#include <stdexcept>

namespace novikov {

namespace {

using PolyMatrix = std::vector<std::vector<Polynomial>>;

Polynomial lcm(const Polynomial& a, const Polynomial& b) {
    if (a.is_constant()) return b;
    if (b.is_constant()) return a;
    return *(a * b).divide_exact(gcd(a, b));
}

PolyMatrix clear_denominators(const RFMatrix& rows, std::size_t ncols) {
    PolyMatrix out;
    out.reserve(rows.size());
    for (const auto& row : rows) {
        if (row.size() != ncols) throw std::invalid_argument("row length mismatch");
        Polynomial l(1);
        for (const auto& x : row) l = lcm(l, x.den());
        std::vector<Polynomial> prow;
        prow.reserve(ncols);
        bool nonzero = false;
        for (const auto& x : row) {
            Polynomial p = x.num() * *l.divide_exact(x.den());
            nonzero = nonzero || !p.is_zero();
            prow.push_back(std::move(p));
        }
        if (nonzero) out.push_back(std::move(prow));
    }
    return out;
}

}  // namespace

Echelon row_reduce(const RFMatrix& rows, std::size_t ncols) {
    PolyMatrix a = clear_denominators(rows, ncols);
    std::vector<std::size_t> pivots;
    Polynomial prev(1);
    std::size_t r = 0;
    for (std::size_t c = 0; c < ncols && r < a.size(); ++c) {
        std::size_t p = r;
        while (p < a.size() && a[p][c].is_zero()) ++p;
        if (p == a.size()) continue;
        std::swap(a[p], a[r]);
        for (std::size_t i = r + 1; i < a.size(); ++i) {
            for (std::size_t j = c + 1; j < ncols; ++j) {
                Polynomial v = a[i][c].is_zero() ? a[r][c] * a[i][j] : a[r][c] * a[i][j] - a[i][c] * a[r][j];
                auto q = v.divide_exact(prev);
                a[i][j] = q ? *q : v;
            }
            a[i][c] = Polynomial();
        }
        prev = a[r][c];
        pivots.push_back(c);
        ++r;
    }
    a.resize(r);

    Echelon out;
    out.pivots = pivots;
    out.rows.assign(r, RFVector(ncols));
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < ncols; ++j) out.rows[i][j] = RationalFunction(a[i][j]);
    }
    for (std::size_t i = r; i-- > 0;) {
        RationalFunction inv = out.rows[i][pivots[i]].inverse();
        for (std::size_t j = pivots[i]; j < ncols; ++j) {
            if (!out.rows[i][j].is_zero()) out.rows[i][j] *= inv;
        }
        for (std::size_t k = 0; k < i; ++k) {
            RationalFunction f = out.rows[k][pivots[i]];
            if (f.is_zero()) continue;
            for (std::size_t j = pivots[i]; j < ncols; ++j) {
                if (!out.rows[i][j].is_zero()) out.rows[k][j] -= f * out.rows[i][j];
            }
        }
    }
    return out;
}

std::size_t rank(const RFMatrix& rows, std::size_t ncols) { return row_reduce(rows, ncols).pivots.size(); }

RFMatrix nullspace(const RFMatrix& rows, std::size_t ncols) {
    Echelon e = row_reduce(rows, ncols);
    std::vector<bool> is_pivot(ncols, false);
    for (auto p : e.pivots) is_pivot[p] = true;
    RFMatrix out;
    for (std::size_t f = 0; f < ncols; ++f) {
        if (is_pivot[f]) continue;
        RFVector v(ncols);
        v[f] = RationalFunction(1);
        for (std::size_t i = 0; i < e.rows.size(); ++i) v[e.pivots[i]] = -e.rows[i][f];
        out.push_back(std::move(v));
    }
    return out;
}

bool in_span(const RFMatrix& basis, const RFVector& v) {
    RFMatrix all = basis;
    all.push_back(v);
    return rank(all, v.size()) == rank(basis, v.size());
}

bool same_span(const RFMatrix& a, const RFMatrix& b, std::size_t ncols) {
    RFMatrix all = a;
    all.insert(all.end(), b.begin(), b.end());
    std::size_t r = rank(all, ncols);
    return r == rank(a, ncols) && r == rank(b, ncols);
}

RFMatrix intersection(const RFMatrix& a, const RFMatrix& b, std::size_t ncols) {
    if (a.empty() || b.empty()) return {};
    // Columns of [a^T | -b^T]; a kernel vector (x, y) gives x·a = y·b.
    std::size_t m = a.size() + b.size();
    RFMatrix sys(ncols, RFVector(m));
    for (std::size_t k = 0; k < ncols; ++k) {
        for (std::size_t i = 0; i < a.size(); ++i) sys[k][i] = a[i][k];
        for (std::size_t j = 0; j < b.size(); ++j) sys[k][a.size() + j] = -b[j][k];
    }
    RFMatrix out;
    for (const auto& kv : nullspace(sys, m)) {
        RFVector v(ncols);
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (kv[i].is_zero()) continue;
            for (std::size_t k = 0; k < ncols; ++k) v[k] += kv[i] * a[i][k];
        }
        out.push_back(std::move(v));
    }
    return row_reduce(out, ncols).rows;
}

RFMatrix extend_basis(const RFMatrix& base, const RFMatrix& candidates, std::size_t ncols) {
    RFMatrix current = base;
    std::size_t r = rank(current, ncols);
    RFMatrix added;
    for (const auto& c : candidates) {
        current.push_back(c);
        std::size_t r2 = rank(current, ncols);
        if (r2 > r) {
            added.push_back(c);
            r = r2;
        } else {
            current.pop_back();
        }
    }
    return added;
}

RationalFunction determinant(const RFMatrix& m) {
    RFMatrix a = m;
    std::size_t n = a.size();
    RationalFunction det(1);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a[p][c].is_zero()) ++p;
        if (p == n) return RationalFunction();
        if (p != c) {
            std::swap(a[p], a[c]);
            det = -det;
        }
        det *= a[c][c];
        RationalFunction inv = a[c][c].inverse();
        for (std::size_t i = c + 1; i < n; ++i) {
            if (a[i][c].is_zero()) continue;
            RationalFunction f = a[i][c] * inv;
            for (std::size_t j = c; j < n; ++j) a[i][j] -= f * a[c][j];
        }
    }
    return det;
}

RFMatrix inverse(const RFMatrix& m) {
    std::size_t n = m.size();
    RFMatrix aug(n, RFVector(2 * n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug[i][j] = m[i][j];
        aug[i][n + i] = RationalFunction(1);
    }
    Echelon e = row_reduce(aug, 2 * n);
    if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) throw std::domain_error("singular matrix");
    RFMatrix out(n, RFVector(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) out[i][j] = e.rows[i][n + j];
    }
    return out;
}

ComplexMatrix inverse(const ComplexMatrix& m, const BigFloat& tolerance) {
    std::size_t n = m.size();
    mpfr_prec_t prec = tolerance.precision();
    ComplexMatrix a = m;
    ComplexMatrix inv(n, std::vector<BigComplex>(n, BigComplex(prec)));
    for (std::size_t i = 0; i < n; ++i) inv[i][i] = BigComplex(prec, GaussRational(1));
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t best = c;
        BigFloat best_abs = a[c][c].abs();
        for (std::size_t i = c + 1; i < n; ++i) {
            BigFloat v = a[i][c].abs();
            if (best_abs < v) {
                best = i;
                best_abs = v;
            }
        }
        if (best_abs < tolerance) throw std::domain_error("numerically singular matrix");
        std::swap(a[best], a[c]);
        std::swap(inv[best], inv[c]);
        BigComplex piv = a[c][c];
        for (std::size_t j = 0; j < n; ++j) {
            a[c][j] = a[c][j] / piv;
            inv[c][j] = inv[c][j] / piv;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || a[i][c].is_zero()) continue;
            BigComplex f = a[i][c];
            for (std::size_t j = 0; j < n; ++j) {
                a[i][j] = a[i][j] - f * a[c][j];
                inv[i][j] = inv[i][j] - f * inv[c][j];
            }
        }
    }
    return inv;
}

}  // namespace novikov
