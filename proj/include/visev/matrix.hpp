#pragma once

#include <vector>

#include "visev/polynomial.hpp"

namespace visev {

// Dense matrix of polynomials sharing one ring.
struct PolyMatrix {
    int rows = 0, cols = 0;
    RingPtr ring;
    std::vector<Polynomial> a;

    PolyMatrix() = default;
    PolyMatrix(int r, int c, RingPtr rg)
        : rows(r), cols(c), ring(std::move(rg)), a(r * c, Polynomial::zero(ring)) {
        for (auto& p : a) p = Polynomial::zero(ring);
    }
    Polynomial& at(int i, int j) { return a[i * cols + j]; }
    const Polynomial& at(int i, int j) const { return a[i * cols + j]; }
};

// Fraction-free determinant; exact in any polynomial ring over Q.
Polynomial det_bareiss(const PolyMatrix& m);

PolyMatrix submatrix(const PolyMatrix& m, const std::vector<int>& rows, const std::vector<int>& cols);

// All k x k minors (no deduplication).
std::vector<Polynomial> all_minors(const PolyMatrix& m, int k);

// Dense rational matrix, row-reduction based helpers.
struct QMatrix {
    int rows = 0, cols = 0;
    std::vector<Rat> a;

    QMatrix() = default;
    QMatrix(int r, int c) : rows(r), cols(c), a(r * c, Rat(0)) {}
    Rat& at(int i, int j) { return a[i * cols + j]; }
    const Rat& at(int i, int j) const { return a[i * cols + j]; }

    int rank() const;
    Rat det() const;
    // Solves M x = b; empty optional if inconsistent (least-norm not attempted;
    // requires full column rank for uniqueness).
    std::optional<std::vector<Rat>> solve(const std::vector<Rat>& b) const;
    std::optional<QMatrix> inverse() const;
    // Basis of the right kernel, one column per basis vector.
    std::vector<std::vector<Rat>> kernel() const;
};

}  // namespace visev
