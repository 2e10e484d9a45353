#pragma once

#include <vector>

#include "visev/numeric.hpp"

namespace visev {

// Dense univariate polynomials over Z, index = power of t. Primitive-PRS gcd
// keeps coefficient growth polynomial. Used by real-root isolation and the
// restriction pipelines (degrees stay modest, coefficients do not).
struct UniPoly {
    std::vector<Int> a;  // a[k] = coefficient of t^k; no trailing zeros

    static UniPoly zero() { return {}; }
    static UniPoly from_coeffs(std::vector<Int> coeffs);
    static UniPoly from_rationals(const std::vector<Rat>& coeffs);  // clears denominators

    bool is_zero() const { return a.empty(); }
    int degree() const { return static_cast<int>(a.size()) - 1; }
    const Int& lc() const { return a.back(); }

    UniPoly operator+(const UniPoly& o) const;
    UniPoly operator-(const UniPoly& o) const;
    UniPoly operator*(const UniPoly& o) const;
    UniPoly scaled(const Int& k) const;
    UniPoly derivative() const;
    UniPoly primitive() const;  // content 1, positive lead

    Rat evaluate(const Rat& x) const;
    int sign_at(const Rat& x) const;

    std::string to_string(const std::string& var = "t") const;
};

// Pseudo-remainder of a by b (b nonzero), lc(b)^(da-db+1) * a mod b.
UniPoly prem(const UniPoly& a, const UniPoly& b);
UniPoly uni_gcd(const UniPoly& a, const UniPoly& b);  // primitive gcd
UniPoly uni_divexact(const UniPoly& a, const UniPoly& b);
UniPoly squarefree_part(const UniPoly& f);

// Yun decomposition: result[i] = product of factors of multiplicity i+1.
std::vector<UniPoly> squarefree_decomposition(const UniPoly& f);

UniPoly uni_lcm(const UniPoly& a, const UniPoly& b);

}  // namespace visev
