#pragma once

#include "visev/groebner.hpp"
#include "visev/matrix.hpp"

namespace visev {

// Degree-d form c0*t^d + c1*t^(d-1) + ... + cd whose coefficients live in a
// coefficient ring. The formal degree is kept even when c0 vanishes on a
// specialization; effective_degree() reports the drop.
struct BinaryForm {
    int degree = 0;
    RingPtr coeff_ring;
    std::vector<Polynomial> c;  // size degree+1, c[0] = leading

    static BinaryForm zero(int d, RingPtr ring);
    // Read coefficients of `var` out of f; remaining variables become
    // coefficient entries (must not involve `var`).
    static BinaryForm from_polynomial(const Polynomial& f, const std::string& var, int formal_degree = -1);

    const Polynomial& coeff_of_power(int k) const { return c[degree - k]; }  // t^k coefficient
    bool is_zero() const;
    int effective_degree() const;  // -1 if zero
    BinaryForm derivative() const;
    BinaryForm reversed() const;  // t^d * f(1/t)
    Polynomial to_polynomial(const RingPtr& ring_with_var, const std::string& var) const;

    // All coefficients must be constants.
    std::vector<Rat> constant_coeffs() const;
};

// Sylvester matrix of two univariate polynomials presented as binary forms
// (in their formal degrees), entries in the coefficient ring.
PolyMatrix sylvester_matrix(const BinaryForm& h1, const BinaryForm& h2);

// Order-i subresultant polynomial S_i(h1,h2), degree <= i in t, coefficients
// in the shared ring. For i = min(deg h1, deg h2) returns the lower-degree
// input itself (the gcd candidate when all lower subresultants vanish).
BinaryForm subresultant(const BinaryForm& h1, const BinaryForm& h2, int i);

Polynomial resultant(const BinaryForm& h1, const BinaryForm& h2);

// Symbolic Bezout matrix B(r) for degree-d binary forms, entries linear in
// bracket variables r_ab (1 <= a < b <= d+1); det B(r) is the resultant under
// r_ab = u_a v_b - u_b v_a.
struct BezoutMatrix {
    int d;
    RingPtr r_ring;  // variables named "r{a}{b}"
    PolyMatrix mat;
};
BezoutMatrix bezout_matrix(int d);

// Specialize B(r) at two concrete coefficient vectors u, v (Polynomials in a
// common ring); returns the d x d matrix over that ring.
PolyMatrix bezout_specialize(const BezoutMatrix& B, const std::vector<Polynomial>& u,
                             const std::vector<Polynomial>& v);

// Ideal of all (size-k+1) x (size-k+1) minors (corank >= k locus).
Ideal corank_minors_ideal(const PolyMatrix& M, int corank);

}  // namespace visev
