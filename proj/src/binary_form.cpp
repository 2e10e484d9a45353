#include "visev/binary_form.hpp"

#include "visev/matrix.hpp"

namespace visev {

BinaryForm BinaryForm::zero(int d, RingPtr ring) {
    BinaryForm b;
    b.degree = d;
    b.coeff_ring = ring;
    b.c.assign(d + 1, Polynomial::zero(ring));
    return b;
}

BinaryForm BinaryForm::from_polynomial(const Polynomial& f, const std::string& var,
                                       int formal_degree) {
    int idx = f.ring()->index_of(var);
    if (idx < 0) throw Error("unknown variable: " + var);
    int d = std::max(f.degree_in(idx), 0);
    if (formal_degree >= 0) {
        if (formal_degree < d) throw Error("formal degree below actual degree");
        d = formal_degree;
    }
    BinaryForm b = zero(d, f.ring());
    for (const auto& t : f.terms()) {
        int k = t.m.e[idx];
        Monomial m = t.m;
        m.deg -= m.e[idx];
        m.e[idx] = 0;
        b.c[d - k] = b.c[d - k] + Polynomial::from_terms(f.ring(), {{m, t.c}});
    }
    return b;
}

bool BinaryForm::is_zero() const {
    for (const auto& p : c)
        if (!p.is_zero()) return false;
    return true;
}

int BinaryForm::effective_degree() const {
    for (int i = 0; i <= degree; ++i)
        if (!c[i].is_zero()) return degree - i;
    return -1;
}

BinaryForm BinaryForm::derivative() const {
    if (degree == 0) return zero(0, coeff_ring);
    BinaryForm d = zero(degree - 1, coeff_ring);
    for (int k = 1; k <= degree; ++k)
        d.c[(degree - 1) - (k - 1)] = coeff_of_power(k).scaled(Rat(k));
    return d;
}

BinaryForm BinaryForm::reversed() const {
    BinaryForm r = zero(degree, coeff_ring);
    for (int i = 0; i <= degree; ++i) r.c[i] = c[degree - i];
    return r;
}

Polynomial BinaryForm::to_polynomial(const RingPtr& ring_with_var, const std::string& var) const {
    int idx = ring_with_var->index_of(var);
    if (idx < 0) throw Error("unknown variable: " + var);
    Polynomial acc = Polynomial::zero(ring_with_var);
    for (int k = 0; k <= degree; ++k) {
        if (coeff_of_power(k).is_zero()) continue;
        Polynomial ck = map_poly(coeff_of_power(k), ring_with_var);
        acc = acc + ck * Polynomial::variable(ring_with_var, idx, static_cast<uint16_t>(k));
    }
    return acc;
}

std::vector<Rat> BinaryForm::constant_coeffs() const {
    std::vector<Rat> out;
    out.reserve(c.size());
    for (const auto& p : c) {
        if (!p.is_constant()) throw Error("binary form has non-constant coefficients");
        out.push_back(p.constant_value());
    }
    return out;
}

PolyMatrix sylvester_matrix(const BinaryForm& h1, const BinaryForm& h2) {
    if (!same_ring(h1.coeff_ring, h2.coeff_ring)) throw Error("ring mismatch");
    int m = h1.degree, n = h2.degree;
    PolyMatrix s(m + n, m + n, h1.coeff_ring);
    for (int r = 0; r < n; ++r)
        for (int k = 0; k <= m; ++k) s.at(r, r + k) = h1.c[k];
    for (int r = 0; r < m; ++r)
        for (int k = 0; k <= n; ++k) s.at(n + r, r + k) = h2.c[k];
    return s;
}

BinaryForm subresultant(const BinaryForm& h1, const BinaryForm& h2, int i) {
    if (!same_ring(h1.coeff_ring, h2.coeff_ring)) throw Error("ring mismatch");
    int m = h1.degree, n = h2.degree;
    if (m < 1 || n < 1) throw Error("subresultant needs positive degrees");
    int mn = std::min(m, n);
    if (i < 0 || i > mn) throw Error("subresultant order out of range");
    if (i == mn) return m <= n ? h1 : h2;

    // rows: t^(n-1-i) h1 .. h1, then t^(m-1-i) h2 .. h2; columns are the
    // coefficients of t^(m+n-1-i) .. t^0.
    int rows = (n - i) + (m - i);
    int cols = m + n - i;
    PolyMatrix big(rows, cols, h1.coeff_ring);
    for (int r = 0; r < n - i; ++r) {
        // t^(n-1-i-r) * h1: coefficient of t^(m+n-1-i - (c)) at column c
        int shift = n - 1 - i - r;
        for (int k = 0; k <= m; ++k) {
            int power = (m - k) + shift;  // t-power of this coefficient
            int col = (m + n - 1 - i) - power;
            big.at(r, col) = h1.c[k];
        }
    }
    for (int r = 0; r < m - i; ++r) {
        int shift = m - 1 - i - r;
        for (int k = 0; k <= n; ++k) {
            int power = (n - k) + shift;
            int col = (m + n - 1 - i) - power;
            big.at(n - i + r, col) = h2.c[k];
        }
    }

    BinaryForm out = BinaryForm::zero(i, h1.coeff_ring);
    // square block: first rows-1 columns, plus the column representing t^j
    std::vector<int> base_cols;
    for (int c0 = 0; c0 < rows - 1; ++c0) base_cols.push_back(c0);
    std::vector<int> all_rows;
    for (int r = 0; r < rows; ++r) all_rows.push_back(r);
    for (int j = 0; j <= i; ++j) {
        std::vector<int> cols_j = base_cols;
        cols_j.push_back((m + n - 1 - i) - j);
        out.c[i - j] = det_bareiss(submatrix(big, all_rows, cols_j));
    }
    return out;
}

Polynomial resultant(const BinaryForm& h1, const BinaryForm& h2) {
    return det_bareiss(sylvester_matrix(h1, h2));
}

BezoutMatrix bezout_matrix(int d) {
    if (d < 2) throw Error("bezout matrix needs degree >= 2");
    std::vector<std::string> vars;
    for (int a = 1; a <= d + 1; ++a)
        for (int b = a + 1; b <= d + 1; ++b)
            vars.push_back("r" + std::to_string(a) + std::to_string(b));
    RingPtr ring = make_ring(vars);
    BezoutMatrix B{d, ring, PolyMatrix(d, d, ring)};
    for (int i = 1; i <= d; ++i) {
        for (int j = 1; j <= d; ++j) {
            Polynomial e = Polynomial::zero(ring);
            for (int a = 1; a <= std::min(i, j); ++a) {
                int b = i + j + 1 - a;
                if (b <= a || b > d + 1) continue;
                e = e + Polynomial::variable(ring, "r" + std::to_string(a) + std::to_string(b));
            }
            B.mat.at(i - 1, j - 1) = e;
        }
    }
    return B;
}

PolyMatrix bezout_specialize(const BezoutMatrix& B, const std::vector<Polynomial>& u,
                             const std::vector<Polynomial>& v) {
    if (static_cast<int>(u.size()) != B.d + 1 || static_cast<int>(v.size()) != B.d + 1)
        throw Error("coefficient vector length mismatch");
    RingPtr tgt = u[0].ring();
    PolyMatrix out(B.d, B.d, tgt);
    auto bracket = [&](int a, int b) { return u[a - 1] * v[b - 1] - u[b - 1] * v[a - 1]; };
    for (int i = 0; i < B.d; ++i)
        for (int j = 0; j < B.d; ++j) {
            Polynomial e = Polynomial::zero(tgt);
            for (int a = 1; a <= std::min(i + 1, j + 1); ++a) {
                int b = i + j + 3 - a;
                if (b <= a || b > B.d + 1) continue;
                e = e + bracket(a, b);
            }
            out.at(i, j) = e;
        }
    return out;
}

Ideal corank_minors_ideal(const PolyMatrix& M, int corank) {
    if (M.rows != M.cols) throw Error("corank minors need a square matrix");
    if (corank < 1 || corank >= M.rows) throw Error("corank out of range");
    int k = M.rows - corank + 1;
    return Ideal(M.ring, all_minors(M, k));
}

}  // namespace visev
