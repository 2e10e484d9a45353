#pragma once

#include <functional>
#include <optional>
#include <string>

#include "visev/ideal.hpp"

namespace visev {

// Resource budget shared by all engine entry points. Defaults are generous;
// exceeding any limit raises BudgetExceeded (a typed outcome, not a math error).
struct Budget {
    uint64_t max_pair_reductions = UINT64_MAX;
    size_t max_basis = 1u << 20;
    size_t max_terms = 1u << 26;  // per-polynomial term cap during reduction
    double deadline = 0;          // absolute steady-clock seconds; 0 = unlimited

    static Budget unlimited() { return Budget{}; }
    // Whole-pipeline wall budget: every nested engine call shares the deadline.
    static Budget deadline_in(double seconds_from_now);
};

struct EngineOpts {
    Budget budget;
};

// Reduced, canonical basis: generators have integer content 1 and positive
// leading coefficient, no leading term divides another, tails fully reduced,
// sorted ascending in the order. Unique for (ideal, order).
std::vector<Polynomial> groebner_basis(const Ideal& I, const MonomialOrder& ord,
                                       const EngineOpts& opts = {});
inline std::vector<Polynomial> groebner_basis(const Ideal& I, const EngineOpts& opts = {}) {
    return groebner_basis(I, I.ring()->order, opts);
}

Polynomial normal_form(const Polynomial& f, const Ideal& I, const EngineOpts& opts = {});
bool ideal_contains(const Ideal& I, const Polynomial& f, const EngineOpts& opts = {});
bool ideal_equal(const Ideal& a, const Ideal& b, const EngineOpts& opts = {});

// g in rad(I), via the Rabinowitsch trick.
bool in_radical(const Ideal& I, const Polynomial& g, const EngineOpts& opts = {});

// I cap Q[keep]; result lives in a fresh grevlex ring on the kept variables
// (original declaration order preserved).
Ideal eliminate(const Ideal& I, const std::vector<std::string>& drop, const EngineOpts& opts = {});

Ideal intersect(const Ideal& a, const Ideal& b, const EngineOpts& opts = {});

// I : g and I : J (finite intersection of single quotients).
Ideal quotient(const Ideal& I, const Polynomial& g, const EngineOpts& opts = {});
Ideal quotient(const Ideal& I, const Ideal& J, const EngineOpts& opts = {});

enum class SatStrategy { Auto, Rabinowitsch, GrevlexVariable, IteratedColon };

// I : g^infty
Ideal saturate(const Ideal& I, const Polynomial& g, SatStrategy strat = SatStrategy::Auto,
               const EngineOpts& opts = {});
// I : J^infty = intersection over generators of J of the single saturations.
Ideal saturate(const Ideal& I, const Ideal& J, SatStrategy strat = SatStrategy::Auto,
               const EngineOpts& opts = {});
// Spec reference route: iterated ideal quotient until stabilization.
Ideal saturate_colon_iterated(const Ideal& I, const Ideal& J, const EngineOpts& opts = {});

// Kernel of phi (optionally modulo an ideal in the target ring), via the graph
// construction: adjoin source variables minus images, eliminate target variables.
Ideal kernel_of_morphism(const RingMorphism& phi, const std::optional<Ideal>& modulo = std::nullopt,
                         const EngineOpts& opts = {});

// Dehomogenize `var` to 1 (the affine chart) and eliminate `drop` (which must
// contain all remaining variables of the projective block). Exact equality
// chart-by-chart: intersecting the six charts equals saturate-then-eliminate
// for ideals homogeneous in the block.
Ideal chart_eliminate(const Ideal& I, const std::string& chart_var,
                      const std::vector<std::string>& drop, const EngineOpts& opts = {});

// Helpers shared by the geometry modules.
Ideal ideal_in(const RingPtr& ring, std::vector<Polynomial> gens);
Ideal ideal_union(const Ideal& a, const std::vector<Polynomial>& more);
Ideal map_ideal(const Ideal& I, const RingPtr& target);  // by variable names
Polynomial map_poly(const Polynomial& f, const RingPtr& target);

struct GBStats {
    uint64_t pair_reductions = 0;
    size_t basis_size = 0;
};
const GBStats& last_gb_stats();

}  // namespace visev
