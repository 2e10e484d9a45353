#pragma once

#include "visev/univariate.hpp"

namespace visev {

struct IsolatingInterval {
    Rat lower;
    Rat upper;            // root lies in (lower, upper]; lower == upper marks an exact root
    int multiplicity = 1; // of the original (non-squarefree) input
    bool exact() const { return lower == upper; }
};

// Complete, disjoint isolation of all real roots. The squarefree part is taken
// internally; reported multiplicities come from the squarefree decomposition.
std::vector<IsolatingInterval> isolate_real_roots(const UniPoly& h);

// Bisection refinement within an isolating interval of the squarefree part;
// |result - root| < tol certified by sign conditions.
Rat refine_root(const UniPoly& h, const IsolatingInterval& iv, const Rat& tol);

// Convenience: isolate then refine everything, sorted ascending.
std::vector<Rat> real_roots_approx(const UniPoly& h, const Rat& tol);

// Rounded decimal rendering with `digits` significant digits.
std::string rat_to_decimal(const Rat& v, int digits);

}  // namespace visev
