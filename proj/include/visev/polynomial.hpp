#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "visev/ring.hpp"

namespace visev {

struct Term {
    Monomial m;
    Rat c;
};

// Sparse multivariate polynomial over Q. Terms are strictly descending in the
// ring's order and never carry zero coefficients; values are immutable after
// construction and safe to share across threads.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

    static Polynomial zero(RingPtr ring) { return Polynomial(std::move(ring)); }
    static Polynomial constant(RingPtr ring, const Rat& c);
    static Polynomial variable(RingPtr ring, int idx, uint16_t pow = 1);
    static Polynomial variable(RingPtr ring, const std::string& name, uint16_t pow = 1);
    // Takes unsorted/duplicated terms and canonicalizes.
    static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);

    const RingPtr& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    size_t nterms() const { return t_.size(); }

    const Term& lead() const;
    const Monomial& lead_monomial() const { return lead().m; }
    const Rat& lead_coeff() const { return lead().c; }

    int total_degree() const;      // -1 for zero
    int degree_in(int var) const;  // -1 for zero
    bool is_homogeneous() const;
    bool is_constant() const { return t_.empty() || (t_.size() == 1 && t_[0].m.is_one()); }
    Rat constant_value() const;  // requires is_constant()
    bool uses_var(int var) const;

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial scaled(const Rat& c) const;
    Polynomial mul_term(const Monomial& m, const Rat& c) const;
    Polynomial pow(unsigned long e) const;

    bool operator==(const Polynomial& o) const;
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    Polynomial differentiate(int var) const;
    Polynomial differentiate(const std::string& var) const;

    // Every variable occurring in *this must be assigned. Images live in
    // `target` (all images of one call share it).
    Polynomial substitute(const std::map<int, Polynomial>& images, RingPtr target) const;
    Polynomial substitute_named(const std::map<std::string, Polynomial>& images, RingPtr target) const;

    // Variable renaming into another ring: var i maps to target var index_map[i],
    // or -1 meaning "must not occur".
    Polynomial map_vars(RingPtr target, const std::vector<int>& index_map) const;

    // Resort terms under a ring with the same variables but another order.
    Polynomial with_ring(RingPtr target) const;

    Rat evaluate(const std::vector<Rat>& point) const;

    // Coefficient of var^k, with var's exponent removed (stays in this ring).
    Polynomial coeff_of(int var, int k) const;
    std::vector<Polynomial> coeffs_in(int var) const;  // index = exponent, size = deg+1

    // Integer content (gcd of numerators / lcm of denominators scaling); for
    // the zero polynomial returns 0.
    Rat content() const;
    // content 1, positive leading coefficient
    Polynomial normalized() const;
    Polynomial monic() const;

    std::optional<Polynomial> exact_divide(const Polynomial& g) const;

    std::string to_string() const;

private:
    RingPtr ring_;
    std::vector<Term> t_;

    void canonicalize();
    friend Polynomial add_scaled(const Polynomial& a, const Polynomial& b, const Rat& bscale,
                                 const Monomial& bshift);
};

// a + bscale * x^bshift * b, single pass merge
Polynomial add_scaled(const Polynomial& a, const Polynomial& b, const Rat& bscale,
                      const Monomial& bshift);

std::string monomial_to_string(const Monomial& m, const PolynomialRing& ring);

}  // namespace visev
