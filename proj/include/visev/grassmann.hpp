#pragma once

#include <array>

#include "visev/binary_form.hpp"
#include "visev/hilbert.hpp"
#include "visev/matrix.hpp"

namespace visev {

// Coordinate conventions, used across every pipeline:
//   points (x1:x2:x3:x4), planes (y1:y2:y3:y4),
//   primal Pluecker (p12,p13,p14,p23,p24,p34), dual (q12,...,q34).
inline const std::array<std::pair<int, int>, 6> kPairIndex = {
    std::make_pair(1, 2), {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}};

std::vector<std::string> plucker_var_names(const std::string& prefix);
RingPtr xyz_ring(const std::string& prefix, int n = 4, MonomialOrder ord = MonomialOrder::grevlex());
RingPtr plucker_ring(const std::string& prefix, MonomialOrder ord = MonomialOrder::grevlex());

// q_ij = sign * p_kl pairing: returns (partner index in kPairIndex, sign).
std::pair<int, int> dual_pairing(int pair_idx);

// p12*p34 - p13*p24 + p14*p23 in a ring containing the six prefixed variables.
Polynomial plucker_relation(const RingPtr& ring, const std::string& prefix);

// The skew-symmetric incidence matrix: primal uses p-entries directly, dual
// substitutes the signed partners.
PolyMatrix plucker_skew_matrix(const RingPtr& ring, const std::string& prefix, bool dual_coords);

// The four bilinear incidence forms A(p) * x in a ring holding both groups.
std::vector<Polynomial> incidence_forms(const RingPtr& ring, const std::string& coord_prefix,
                                        bool dual_coords, const std::string& point_prefix);

// Affine chart parameterizations z(t) of the line, linear in the coordinates
// and in t, valid where the pivot coordinate is nonzero. chart in [0,6).
std::vector<Polynomial> chart_line_param(const RingPtr& ring, const std::string& prefix,
                                         bool dual_coords, int chart, const std::string& tvar);

enum class ChartPolicy { FirstChart, AllCharts };

struct PlueckerLine {
    std::array<Rat, 6> primal{};
    std::array<Rat, 6> dual{};

    static PlueckerLine from_points(const std::array<Rat, 4>& a, const std::array<Rat, 4>& b);
    static PlueckerLine from_planes(const std::array<Rat, 4>& u, const std::array<Rat, 4>& v);
    static PlueckerLine from_primal(const std::array<Rat, 6>& p);
    static PlueckerLine from_dual(const std::array<Rat, 6>& q);

    Rat plucker_value() const;  // exact Pluecker relation at the primal vector
    // Two spanning points, from the chart where the pivot is nonzero.
    std::pair<std::array<Rat, 4>, std::array<Rat, 4>> spanning_points() const;
};

struct ParametricLine {
    std::array<Rat, 4> a{}, b{};  // x = s*a + t*b
    PlueckerLine line() const { return PlueckerLine::from_points(a, b); }
};

struct ParametricPlane {
    std::array<Rat, 4> a{}, b{}, c{};  // x = s*a + t*b + u*c
};

// One of three interchangeable encodings of a ruled surface.
struct RuledSurfaceEncoding {
    std::optional<Polynomial> surface;     // defining polynomial in x-ring
    std::optional<Ideal> ruling_curve;     // ideal in Pluecker coordinates
    bool ruling_dual_coords = false;       // q (dual) vs p (primal) names
    std::optional<Ideal> dual_curve;       // ideal in the plane coordinates
    std::optional<int> claimed_degree;
    int multiplicity = 1;                  // e.g. the doubled quadric trisecant
    bool developable = false;
    bool empty = false;                    // degree-0 locus
    std::string note;
};

struct GrassOpts {
    EngineOpts engine;
    ChartPolicy charts = ChartPolicy::AllCharts;
};

// Union of the lines of C: principal ideal generator in the x-ring.
Polynomial ruled_surface_from_curve(const Ideal& ruling_curve, bool dual_coords,
                                    const RingPtr& x_out, const GrassOpts& opts = {});

// Lines lying on {f = 0}, as an ideal in the prefixed Pluecker ring (primal).
Ideal fano_scheme(const Polynomial& f, const RingPtr& p_out, const GrassOpts& opts = {});

// Dual variety via the conormal construction. Output in `dual_out` (4 vars).
Ideal dual_variety(const Ideal& I, const RingPtr& dual_out, const GrassOpts& opts = {});

// Tangent developable of a space curve given by its ideal (output in x_out).
Polynomial tangent_developable(const Ideal& curve, const RingPtr& x_out, const GrassOpts& opts = {});

struct DevelopabilityResult {
    bool developable = false;
    bool is_cone = false;
    std::optional<Ideal> edge;  // edge of regression; the vertex ideal for cones
};
DevelopabilityResult developability_and_edge(const RuledSurfaceEncoding& enc,
                                             const GrassOpts& opts = {});

enum class RestrictStrategy { Ruling, Dual };

// Restriction of the (possibly never expanded) surface to a line or plane, up
// to a nonzero rational scalar. Lines give a binary form in (s,t); planes a
// ternary form in (s,t,u).
Polynomial restrict_to_line(const RuledSurfaceEncoding& enc, const ParametricLine& window,
                            RestrictStrategy strategy, const GrassOpts& opts = {});
Polynomial restrict_to_plane(const RuledSurfaceEncoding& enc, const ParametricPlane& window,
                             RestrictStrategy strategy, const GrassOpts& opts = {});

// Same restriction machinery for an affine path z(t) (entries in Q[t]);
// returns the univariate restriction, normalized integer-content-free.
Polynomial restrict_to_path(const RuledSurfaceEncoding& enc, const std::vector<Polynomial>& zt,
                            RestrictStrategy strategy, const GrassOpts& opts = {});

// lcm combiner for principal per-chart outputs (binary/ternary forms).
Polynomial principal_lcm(const std::vector<Polynomial>& gens, const EngineOpts& opts = {});

// Saturate by the irrelevant ideal of the 6-coordinate block and eliminate it,
// decomposed chart by chart; `big` holds the Pluecker block plus kept variables.
Ideal eliminate_plucker_block(const Ideal& big, const std::string& prefix, bool dual,
                              ChartPolicy policy, const EngineOpts& opts = {});

// Intersection of the per-variable saturations = saturation by <vars...>.
Ideal saturate_by_all_vars(const Ideal& I, const std::vector<std::string>& vars,
                           const EngineOpts& opts = {});

}  // namespace visev
