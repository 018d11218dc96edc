#include "metakit/intlinalg.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

namespace metakit {

IntMat identity_matrix(int n) {
    IntMat m(static_cast<std::size_t>(n), IntVec(static_cast<std::size_t>(n), 0));
    for (int i = 0; i < n; ++i) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
    return m;
}

IntMat mat_mul(const IntMat& a, const IntMat& b) {
    std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
    IntMat c(n, IntVec(m, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t l = 0; l < k; ++l) {
            if (a[i][l] == 0) continue;
            for (std::size_t j = 0; j < m; ++j) c[i][j] += a[i][l] * b[l][j];
        }
    return c;
}

IntVec mat_vec(const IntMat& a, const IntVec& x) {
    IntVec y(a.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < x.size(); ++j) y[i] += a[i][j] * x[j];
    return y;
}

std::int64_t mat_det(IntMat a) {
    // Bareiss fraction-free elimination.
    int n = static_cast<int>(a.size());
    if (n == 0) return 1;
    std::int64_t prev = 1;
    std::int64_t sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (a[k][k] == 0) {
            int p = -1;
            for (int i = k + 1; i < n; ++i)
                if (a[i][k] != 0) {
                    p = i;
                    break;
                }
            if (p < 0) return 0;
            std::swap(a[k], a[p]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

IntMat unimodular_inverse(const IntMat& a) {
    int n = static_cast<int>(a.size());
    std::int64_t d = mat_det(a);
    if (d != 1 && d != -1) throw Error("unimodular_inverse: determinant not +-1");
    // Adjugate via cofactors (n <= 4 in practice).
    IntMat inv(static_cast<std::size_t>(n), IntVec(static_cast<std::size_t>(n), 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            IntMat minor;
            for (int r = 0; r < n; ++r) {
                if (r == i) continue;
                IntVec row;
                for (int c = 0; c < n; ++c)
                    if (c != j) row.push_back(a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]);
                minor.push_back(std::move(row));
            }
            std::int64_t cof = mat_det(minor);
            if ((i + j) % 2 != 0) cof = -cof;
            inv[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = cof * d;  // d = 1/d here
        }
    return inv;
}

SmithResult smith_normal_form(const IntMat& a) {
    int rows = static_cast<int>(a.size());
    int cols = rows == 0 ? 0 : static_cast<int>(a[0].size());
    SmithResult r{identity_matrix(rows), a, identity_matrix(cols)};
    IntMat& s = r.s;

    auto row_op = [&](int i, int j, std::int64_t c) {  // row_i += c*row_j
        for (int k = 0; k < cols; ++k) s[i][k] += c * s[j][k];
        for (int k = 0; k < rows; ++k) r.u[i][k] += c * r.u[j][k];
    };
    auto col_op = [&](int i, int j, std::int64_t c) {  // col_i += c*col_j
        for (int k = 0; k < rows; ++k) s[k][i] += c * s[k][j];
        for (int k = 0; k < cols; ++k) r.v[k][i] += c * r.v[k][j];
    };
    auto row_swap = [&](int i, int j) {
        std::swap(s[i], s[j]);
        std::swap(r.u[i], r.u[j]);
    };
    auto col_swap = [&](int i, int j) {
        for (int k = 0; k < rows; ++k) std::swap(s[k][i], s[k][j]);
        for (int k = 0; k < cols; ++k) std::swap(r.v[k][i], r.v[k][j]);
    };
    auto row_negate = [&](int i) {
        for (int k = 0; k < cols; ++k) s[i][k] = -s[i][k];
        for (int k = 0; k < rows; ++k) r.u[i][k] = -r.u[i][k];
    };

    int t = 0;
    while (t < rows && t < cols) {
        // Find a pivot.
        int pi = -1, pj = -1;
        std::int64_t best = 0;
        for (int i = t; i < rows; ++i)
            for (int j = t; j < cols; ++j)
                if (s[i][j] != 0 && (best == 0 || std::llabs(s[i][j]) < best)) {
                    best = std::llabs(s[i][j]);
                    pi = i;
                    pj = j;
                }
        if (pi < 0) break;
        row_swap(t, pi);
        col_swap(t, pj);
        bool clean = false;
        while (!clean) {
            clean = true;
            for (int i = t + 1; i < rows; ++i)
                if (s[i][t] != 0) {
                    row_op(i, t, -(s[i][t] / s[t][t]));
                    if (s[i][t] != 0) {
                        row_swap(t, i);
                        clean = false;
                    }
                }
            for (int j = t + 1; j < cols; ++j)
                if (s[t][j] != 0) {
                    col_op(j, t, -(s[t][j] / s[t][t]));
                    if (s[t][j] != 0) {
                        col_swap(t, j);
                        clean = false;
                    }
                }
        }
        if (s[t][t] < 0) row_negate(t);
        ++t;
    }
    // Enforce divisibility chain.
    for (int i = 0; i + 1 < t; ++i) {
        for (int j = i + 1; j < t; ++j) {
            if (s[j][j] % s[i][i] == 0) continue;
            // Fold s[j][j] into position i and redo the local reduction.
            col_op(i, j, 1);
            bool clean = false;
            while (!clean) {
                clean = true;
                if (s[j][i] != 0) {
                    // Euclidean dance between rows i and j on column i.
                    while (s[j][i] != 0) {
                        row_op(i, j, -(s[i][i] / s[j][i]));
                        row_swap(i, j);
                    }
                    clean = false;
                }
                if (s[i][j] != 0) {
                    col_op(j, i, -(s[i][j] / s[i][i]));
                    if (s[i][j] != 0) clean = false;
                }
                if (s[j][j] != 0 && s[i][i] != 0 && s[j][i] == 0 && s[i][j] == 0) break;
            }
            if (s[i][i] < 0) row_negate(i);
            if (s[j][j] < 0) row_negate(j);
        }
    }
    return r;
}

std::vector<IntVec> hnf_column_basis(int dim, std::vector<IntVec> gens) {
    // Work on a matrix whose columns are the generators; reduce with column
    // operations only.
    std::vector<IntVec>& cols = gens;
    std::vector<IntVec> basis;
    int col_start = 0;
    for (int row = 0; row < dim; ++row) {
        // Euclidean reduction of entries in this row across columns >= col_start.
        while (true) {
            int p = -1;
            std::int64_t best = 0;
            for (int j = col_start; j < static_cast<int>(cols.size()); ++j)
                if (cols[static_cast<std::size_t>(j)][static_cast<std::size_t>(row)] != 0 &&
                    (best == 0 ||
                     std::llabs(cols[static_cast<std::size_t>(j)][static_cast<std::size_t>(row)]) < best)) {
                    best = std::llabs(cols[static_cast<std::size_t>(j)][static_cast<std::size_t>(row)]);
                    p = j;
                }
            if (p < 0) break;
            std::swap(cols[static_cast<std::size_t>(p)], cols[static_cast<std::size_t>(col_start)]);
            bool reduced = true;
            for (int j = col_start + 1; j < static_cast<int>(cols.size()); ++j) {
                std::int64_t e = cols[static_cast<std::size_t>(j)][static_cast<std::size_t>(row)];
                if (e == 0) continue;
                std::int64_t c = e / cols[static_cast<std::size_t>(col_start)][static_cast<std::size_t>(row)];
                for (int k = 0; k < dim; ++k)
                    cols[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)] -=
                        c * cols[static_cast<std::size_t>(col_start)][static_cast<std::size_t>(k)];
                if (cols[static_cast<std::size_t>(j)][static_cast<std::size_t>(row)] != 0) reduced = false;
            }
            if (reduced) break;
        }
        if (col_start < static_cast<int>(cols.size()) &&
            cols[static_cast<std::size_t>(col_start)][static_cast<std::size_t>(row)] != 0) {
            if (cols[static_cast<std::size_t>(col_start)][static_cast<std::size_t>(row)] < 0)
                for (int k = 0; k < dim; ++k)
                    cols[static_cast<std::size_t>(col_start)][static_cast<std::size_t>(k)] =
                        -cols[static_cast<std::size_t>(col_start)][static_cast<std::size_t>(k)];
            ++col_start;
        }
    }
    cols.resize(static_cast<std::size_t>(col_start));
    // Reduce entries above each pivot (canonical form).
    // Pivot row of column j is the first nonzero row.
    for (int j = static_cast<int>(cols.size()) - 1; j >= 0; --j) {
        int prow = 0;
        while (prow < dim && cols[static_cast<std::size_t>(j)][static_cast<std::size_t>(prow)] == 0) ++prow;
        std::int64_t piv = cols[static_cast<std::size_t>(j)][static_cast<std::size_t>(prow)];
        for (int i = 0; i < j; ++i) {
            std::int64_t e = cols[static_cast<std::size_t>(i)][static_cast<std::size_t>(prow)];
            std::int64_t c = e / piv;
            if (e % piv < 0) c -= 1;  // keep residue in [0, piv)
            if (c == 0) continue;
            for (int k = 0; k < dim; ++k)
                cols[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] -=
                    c * cols[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)];
        }
    }
    return cols;
}

bool in_lattice(const std::vector<IntVec>& basis, const IntVec& v) {
    if (basis.empty()) {
        for (auto x : v)
            if (x != 0) return false;
        return true;
    }
    int dim = static_cast<int>(basis[0].size());
    IntVec rem = v;
    // Columns are in echelon shape: peel off pivots top-down.
    std::size_t j = 0;
    for (int row = 0; row < dim; ++row) {
        std::int64_t piv = j < basis.size() ? basis[j][static_cast<std::size_t>(row)] : 0;
        if (piv != 0) {
            if (rem[static_cast<std::size_t>(row)] % piv != 0) return false;
            std::int64_t c = rem[static_cast<std::size_t>(row)] / piv;
            for (int k = 0; k < dim; ++k) rem[static_cast<std::size_t>(k)] -= c * basis[j][static_cast<std::size_t>(k)];
            ++j;
        } else if (rem[static_cast<std::size_t>(row)] != 0) {
            return false;
        }
    }
    for (auto x : rem)
        if (x != 0) return false;
    return true;
}

std::optional<std::vector<Rational>> solve_rational(const std::vector<IntVec>& cols,
                                                    const IntVec& target) {
    int m = static_cast<int>(target.size());
    int n = static_cast<int>(cols.size());
    // Augmented matrix [cols | target] over Q, row-reduced.
    std::vector<std::vector<Rational>> a(static_cast<std::size_t>(m),
                                         std::vector<Rational>(static_cast<std::size_t>(n + 1)));
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < n; ++j) a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = Rational(cols[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)]);
        a[static_cast<std::size_t>(i)][static_cast<std::size_t>(n)] = Rational(target[static_cast<std::size_t>(i)]);
    }
    std::vector<int> pivot_col(static_cast<std::size_t>(m), -1);
    int rank = 0;
    for (int j = 0; j < n && rank < m; ++j) {
        int p = -1;
        for (int i = rank; i < m; ++i)
            if (!a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].is_zero()) {
                p = i;
                break;
            }
        if (p < 0) continue;
        std::swap(a[static_cast<std::size_t>(p)], a[static_cast<std::size_t>(rank)]);
        Rational inv = Rational(1) / a[static_cast<std::size_t>(rank)][static_cast<std::size_t>(j)];
        for (int k = j; k <= n; ++k) a[static_cast<std::size_t>(rank)][static_cast<std::size_t>(k)] *= inv;
        for (int i = 0; i < m; ++i) {
            if (i == rank) continue;
            Rational f = a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            if (f.is_zero()) continue;
            for (int k = j; k <= n; ++k)
                a[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] -= f * a[static_cast<std::size_t>(rank)][static_cast<std::size_t>(k)];
        }
        pivot_col[static_cast<std::size_t>(rank)] = j;
        ++rank;
    }
    // Inconsistent?
    for (int i = rank; i < m; ++i)
        if (!a[static_cast<std::size_t>(i)][static_cast<std::size_t>(n)].is_zero()) return std::nullopt;
    std::vector<Rational> x(static_cast<std::size_t>(n), Rational(0));
    for (int i = 0; i < rank; ++i)
        x[static_cast<std::size_t>(pivot_col[static_cast<std::size_t>(i)])] = a[static_cast<std::size_t>(i)][static_cast<std::size_t>(n)];
    return x;
}

}  // namespace metakit
