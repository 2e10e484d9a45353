#include "visev/matrix.hpp"

#include <algorithm>

namespace visev {

Polynomial det_bareiss(const PolyMatrix& m) {
    if (m.rows != m.cols) throw Error("determinant of non-square matrix");
    int n = m.rows;
    if (n == 0) return Polynomial::constant(m.ring, Rat(1));
    std::vector<Polynomial> w = m.a;
    auto at = [&](int i, int j) -> Polynomial& { return w[i * n + j]; };
    Polynomial prev = Polynomial::constant(m.ring, Rat(1));
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        // pivot: shortest nonzero entry in column k at/below row k
        int piv = -1;
        size_t best = 0;
        for (int i = k; i < n; ++i) {
            if (at(i, k).is_zero()) continue;
            if (piv < 0 || at(i, k).nterms() < best) {
                piv = i;
                best = at(i, k).nterms();
            }
        }
        if (piv < 0) return Polynomial::zero(m.ring);
        if (piv != k) {
            for (int j = 0; j < n; ++j) std::swap(at(piv, j), at(k, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                Polynomial num = at(i, j) * at(k, k) - at(i, k) * at(k, j);
                auto q = num.exact_divide(prev);
                if (!q) throw Error("Bareiss division failed");
                at(i, j) = std::move(*q);
            }
            at(i, k) = Polynomial::zero(m.ring);
        }
        prev = at(k, k);
    }
    Polynomial d = at(n - 1, n - 1);
    return sign < 0 ? -d : d;
}

PolyMatrix submatrix(const PolyMatrix& m, const std::vector<int>& rows, const std::vector<int>& cols) {
    PolyMatrix s(static_cast<int>(rows.size()), static_cast<int>(cols.size()), m.ring);
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < cols.size(); ++j) s.at(i, j) = m.at(rows[i], cols[j]);
    return s;
}

namespace {
void combinations(int n, int k, const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    for (;;) {
        fn(idx);
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i) --i;
        if (i < 0) return;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}
}  // namespace

std::vector<Polynomial> all_minors(const PolyMatrix& m, int k) {
    if (k <= 0 || k > m.rows || k > m.cols) throw Error("minor size out of range");
    std::vector<Polynomial> out;
    combinations(m.rows, k, [&](const std::vector<int>& ri) {
        combinations(m.cols, k, [&](const std::vector<int>& ci) {
            out.push_back(det_bareiss(submatrix(m, ri, ci)));
        });
    });
    return out;
}

namespace {
// Row echelon in place; returns (rank, det-sign-accumulated pivoted product if square).
int echelon(QMatrix& m) {
    int r = 0;
    for (int c = 0; c < m.cols && r < m.rows; ++c) {
        int piv = -1;
        for (int i = r; i < m.rows; ++i)
            if (sgn(m.at(i, c)) != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        if (piv != r)
            for (int j = 0; j < m.cols; ++j) std::swap(m.at(piv, j), m.at(r, j));
        for (int i = r + 1; i < m.rows; ++i) {
            if (sgn(m.at(i, c)) == 0) continue;
            Rat f = m.at(i, c) / m.at(r, c);
            for (int j = c; j < m.cols; ++j) m.at(i, j) -= f * m.at(r, j);
        }
        ++r;
    }
    return r;
}
}  // namespace

int QMatrix::rank() const {
    QMatrix w = *this;
    return echelon(w);
}

Rat QMatrix::det() const {
    if (rows != cols) throw Error("determinant of non-square matrix");
    QMatrix w = *this;
    Rat d(1);
    int r = 0;
    for (int c = 0; c < cols; ++c) {
        int piv = -1;
        for (int i = r; i < rows; ++i)
            if (sgn(w.at(i, c)) != 0) {
                piv = i;
                break;
            }
        if (piv < 0) return Rat(0);
        if (piv != r) {
            for (int j = 0; j < cols; ++j) std::swap(w.at(piv, j), w.at(r, j));
            d = -d;
        }
        d *= w.at(r, c);
        for (int i = r + 1; i < rows; ++i) {
            if (sgn(w.at(i, c)) == 0) continue;
            Rat f = w.at(i, c) / w.at(r, c);
            for (int j = c; j < cols; ++j) w.at(i, j) -= f * w.at(r, j);
        }
        ++r;
    }
    return d;
}

std::optional<std::vector<Rat>> QMatrix::solve(const std::vector<Rat>& b) const {
    if (static_cast<int>(b.size()) != rows) throw Error("rhs size mismatch");
    QMatrix aug(rows, cols + 1);
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < cols; ++j) aug.at(i, j) = at(i, j);
        aug.at(i, cols) = b[i];
    }
    echelon(aug);
    // back-substitution; detect inconsistency and rank deficiency
    std::vector<int> pivot_col(rows, -1);
    int r = 0;
    for (int i = 0; i < rows; ++i) {
        int c = 0;
        while (c <= cols && (c == cols || sgn(aug.at(i, c)) == 0)) {
            if (c == cols) break;
            ++c;
        }
        if (c == cols) {
            if (sgn(aug.at(i, cols)) != 0) return std::nullopt;  // 0 = nonzero
            continue;
        }
        pivot_col[r++] = c;
    }
    std::vector<Rat> x(cols, Rat(0));
    for (int i = r - 1; i >= 0; --i) {
        int c = pivot_col[i];
        Rat v = aug.at(i, cols);
        for (int j = c + 1; j < cols; ++j) v -= aug.at(i, j) * x[j];
        x[c] = v / aug.at(i, c);
    }
    return x;
}

std::optional<QMatrix> QMatrix::inverse() const {
    if (rows != cols) throw Error("inverse of non-square matrix");
    int n = rows;
    QMatrix aug(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug.at(i, j) = at(i, j);
        aug.at(i, n + i) = Rat(1);
    }
    // Gauss-Jordan
    int r = 0;
    for (int c = 0; c < n; ++c) {
        int piv = -1;
        for (int i = r; i < n; ++i)
            if (sgn(aug.at(i, c)) != 0) {
                piv = i;
                break;
            }
        if (piv < 0) return std::nullopt;
        if (piv != r)
            for (int j = 0; j < 2 * n; ++j) std::swap(aug.at(piv, j), aug.at(r, j));
        Rat p = aug.at(r, c);
        for (int j = 0; j < 2 * n; ++j) aug.at(r, j) /= p;
        for (int i = 0; i < n; ++i) {
            if (i == r || sgn(aug.at(i, c)) == 0) continue;
            Rat f = aug.at(i, c);
            for (int j = 0; j < 2 * n; ++j) aug.at(i, j) -= f * aug.at(r, j);
        }
        ++r;
    }
    QMatrix inv(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
    return inv;
}

std::vector<std::vector<Rat>> QMatrix::kernel() const {
    QMatrix w = *this;
    echelon(w);
    std::vector<int> pivot_of_col(cols, -1);
    int r = 0;
    for (int i = 0; i < rows; ++i) {
        int c = -1;
        for (int j = 0; j < cols; ++j)
            if (sgn(w.at(i, j)) != 0) {
                c = j;
                break;
            }
        if (c < 0) break;
        pivot_of_col[c] = i;
        ++r;
    }
    std::vector<std::vector<Rat>> basis;
    for (int fc = 0; fc < cols; ++fc) {
        if (pivot_of_col[fc] >= 0) continue;
        std::vector<Rat> v(cols, Rat(0));
        v[fc] = Rat(1);
        for (int c = cols - 1; c >= 0; --c) {
            int i = pivot_of_col[c];
            if (i < 0) continue;
            Rat s(0);
            for (int j = c + 1; j < cols; ++j) s += w.at(i, j) * v[j];
            v[c] = -s / w.at(i, c);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace visev
