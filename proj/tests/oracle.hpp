#pragma once

// Brute-force dense arithmetic over Q for instantiated algebras. Shares nothing with
// the library beyond reading structure constants.

#include "novikov/algebra.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <random>
#include <stdexcept>
#include <vector>

namespace oracle {

using Q = mpq_class;
using Mat = std::vector<std::vector<Q>>;

struct Dense {
    int n = 0;
    std::vector<Q> c;   // (i*n + j)*n + k

    Q& at(int i, int j, int k) { return c[(i * n + j) * n + k]; }
    const Q& at(int i, int j, int k) const { return c[(i * n + j) * n + k]; }

    std::vector<Q> mul(const std::vector<Q>& x, const std::vector<Q>& y) const {
        std::vector<Q> out(n);
        for (int i = 0; i < n; ++i) {
            if (x[i] == 0) continue;
            for (int j = 0; j < n; ++j) {
                if (y[j] == 0) continue;
                for (int k = 0; k < n; ++k) out[k] += x[i] * y[j] * at(i, j, k);
            }
        }
        return out;
    }
};

inline Dense zero(int n) { return Dense{n, std::vector<Q>(static_cast<std::size_t>(n) * n * n)}; }

// Rational constants only; throws for anything symbolic or complex.
inline Dense from(const novikov::Algebra& a) {
    Dense d = zero(a.dim());
    for (const auto& [key, v] : a.constants()) {
        auto f = v.as_rational_function();
        if (!f || !f->is_constant()) throw std::invalid_argument("oracle needs constant coefficients");
        auto g = f->constant_value();
        if (!g.is_real()) throw std::invalid_argument("oracle needs rational coefficients");
        d.at(key[0], key[1], key[2]) = g.re();
    }
    return d;
}

inline int rank(Mat m) {
    int r = 0;
    int rows = static_cast<int>(m.size());
    int cols = rows ? static_cast<int>(m[0].size()) : 0;
    for (int col = 0; col < cols && r < rows; ++col) {
        int piv = -1;
        for (int i = r; i < rows; ++i) {
            if (m[i][col] != 0) {
                piv = i;
                break;
            }
        }
        if (piv < 0) continue;
        std::swap(m[r], m[piv]);
        for (int i = 0; i < rows; ++i) {
            if (i == r || m[i][col] == 0) continue;
            Q f = m[i][col] / m[r][col];
            for (int j = col; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        ++r;
    }
    return r;
}

inline std::vector<Q> unit(int n, int i) {
    std::vector<Q> v(n);
    v[i] = 1;
    return v;
}

inline bool is_novikov(const Dense& a) {
    int n = a.n;
    for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) {
            for (int z = 0; z < n; ++z) {
                auto ex = unit(n, x), ey = unit(n, y), ez = unit(n, z);
                auto xy_z = a.mul(a.mul(ex, ey), ez);
                auto xz_y = a.mul(a.mul(ex, ez), ey);
                if (xy_z != xz_y) return false;
                auto x_yz = a.mul(ex, a.mul(ey, ez));
                auto yx_z = a.mul(a.mul(ey, ex), ez);
                auto y_xz = a.mul(ey, a.mul(ex, ez));
                for (int k = 0; k < n; ++k) {
                    if (xy_z[k] - x_yz[k] != yx_z[k] - y_xz[k]) return false;
                }
            }
        }
    }
    return true;
}

// n^2 unknowns d[a][i] with D(e_i) = sum_a d[a][i] e_a.
inline int der_dim(const Dense& a) {
    int n = a.n;
    Mat eqs;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            for (int k = 0; k < n; ++k) {
                std::vector<Q> row(static_cast<std::size_t>(n) * n);
                for (int r = 0; r < n; ++r) row[k * n + r] += a.at(i, j, r);
                for (int s = 0; s < n; ++s) {
                    row[s * n + i] -= a.at(s, j, k);
                    row[s * n + j] -= a.at(i, s, k);
                }
                eqs.push_back(std::move(row));
            }
        }
    }
    return n * n - rank(eqs);
}

inline int ann_dim(const Dense& a) {
    int n = a.n;
    Mat eqs;
    for (int j = 0; j < n; ++j) {
        for (int k = 0; k < n; ++k) {
            std::vector<Q> left(n), right(n);
            for (int x = 0; x < n; ++x) {
                left[x] = a.at(x, j, k);
                right[x] = a.at(j, x, k);
            }
            eqs.push_back(left);
            eqs.push_back(right);
        }
    }
    return n - rank(eqs);
}

inline Mat reduce(Mat m) {
    Mat out;
    int cols = m.empty() ? 0 : static_cast<int>(m[0].size());
    for (int col = 0; col < cols; ++col) {
        auto it = std::find_if(m.begin(), m.end(), [col](const std::vector<Q>& r) { return r[col] != 0; });
        if (it == m.end()) continue;
        std::vector<Q> piv = *it;
        m.erase(it);
        for (auto& r : m) {
            if (r[col] == 0) continue;
            Q f = r[col] / piv[col];
            for (int j = 0; j < cols; ++j) r[j] -= f * piv[j];
        }
        out.push_back(piv);
    }
    return out;
}

// Smallest m with A^m = 0, where A^1 = A and A^(m+1) = sum_{p+q=m+1} A^p A^q; -1 if
// still nonzero after 2^n + 2 steps, beyond any possible index in dimension n.
inline int nilpotency_index(const Dense& a) {
    int n = a.n;
    std::vector<Mat> powers;
    Mat id;
    for (int i = 0; i < n; ++i) id.push_back(unit(n, i));
    powers.push_back(id);
    for (int m = 2; m <= (1 << n) + 2; ++m) {
        Mat span;
        for (int p = 1; p < m; ++p) {
            for (const auto& x : powers[p - 1]) {
                for (const auto& y : powers[m - p - 1]) span.push_back(a.mul(x, y));
            }
        }
        Mat basis = reduce(span);
        if (basis.empty()) return m;
        powers.push_back(basis);
    }
    return -1;
}

// Unknowns theta_ij at index i*n + j; conditions making A + C a Novikov algebra.
inline Mat cocycle_conditions(const Dense& a) {
    int n = a.n;
    Mat eqs;
    auto idx = [n](int i, int j) { return i * n + j; };
    for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) {
            for (int z = 0; z < n; ++z) {
                std::vector<Q> rc(static_cast<std::size_t>(n) * n), ls(static_cast<std::size_t>(n) * n);
                for (int k = 0; k < n; ++k) {
                    // theta(xy, z) - theta(xz, y)
                    rc[idx(k, z)] += a.at(x, y, k);
                    rc[idx(k, y)] -= a.at(x, z, k);
                    // theta(xy, z) - theta(x, yz) - theta(yx, z) + theta(y, xz)
                    ls[idx(k, z)] += a.at(x, y, k);
                    ls[idx(x, k)] -= a.at(y, z, k);
                    ls[idx(k, z)] -= a.at(y, x, k);
                    ls[idx(y, k)] += a.at(x, z, k);
                }
                eqs.push_back(rc);
                eqs.push_back(ls);
            }
        }
    }
    return eqs;
}

inline int z2_dim(const Dense& a) { return a.n * a.n - rank(cocycle_conditions(a)); }

inline int b2_dim(const Dense& a) {
    Mat slices;
    for (int k = 0; k < a.n; ++k) {
        std::vector<Q> s(static_cast<std::size_t>(a.n) * a.n);
        for (int i = 0; i < a.n; ++i) {
            for (int j = 0; j < a.n; ++j) s[i * a.n + j] = a.at(i, j, k);
        }
        slices.push_back(s);
    }
    return rank(slices);
}

inline bool satisfies(const Mat& eqs, const std::vector<Q>& v) {
    for (const auto& row : eqs) {
        Q s = 0;
        for (std::size_t i = 0; i < v.size(); ++i) s += row[i] * v[i];
        if (s != 0) return false;
    }
    return true;
}

// Constants of E_i = sum_j b[i][j] e_j, solving by Gauss-Jordan.
inline Dense conjugate(const Dense& a, const Mat& b) {
    int n = a.n;
    Mat aug = b;
    for (int i = 0; i < n; ++i) {
        aug[i].resize(2 * n);
        aug[i][n + i] = 1;
    }
    for (int col = 0; col < n; ++col) {
        int piv = col;
        while (piv < n && aug[piv][col] == 0) ++piv;
        if (piv == n) throw std::domain_error("singular");
        std::swap(aug[col], aug[piv]);
        Q p = aug[col][col];
        for (auto& x : aug[col]) x /= p;
        for (int i = 0; i < n; ++i) {
            if (i == col || aug[i][col] == 0) continue;
            Q f = aug[i][col];
            for (int j = 0; j < 2 * n; ++j) aug[i][j] -= f * aug[col][j];
        }
    }
    Dense out = zero(n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            auto prod = a.mul(b[i], b[j]);
            for (int k = 0; k < n; ++k) {
                Q s = 0;
                for (int r = 0; r < n; ++r) s += prod[r] * aug[r][n + k];
                out.at(i, j, k) = s;
            }
        }
    }
    return out;
}

inline Q small_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-5, 5), den(1, 4);
    Q q(num(rng));
    q /= den(rng);
    return q;
}

}  // namespace oracle
