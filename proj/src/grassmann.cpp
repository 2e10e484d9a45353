#include "visev/grassmann.hpp"

#include <algorithm>

namespace visev {

std::vector<std::string> plucker_var_names(const std::string& prefix) {
    std::vector<std::string> v;
    for (const auto& [a, b] : kPairIndex)
        v.push_back(prefix + std::to_string(a) + std::to_string(b));
    return v;
}

RingPtr xyz_ring(const std::string& prefix, int n, MonomialOrder ord) {
    std::vector<std::string> v;
    for (int i = 1; i <= n; ++i) v.push_back(prefix + std::to_string(i));
    return make_ring(std::move(v), ord);
}

RingPtr plucker_ring(const std::string& prefix, MonomialOrder ord) {
    return make_ring(plucker_var_names(prefix), ord);
}

std::pair<int, int> dual_pairing(int pair_idx) {
    static const int partner[6] = {5, 4, 3, 2, 1, 0};
    static const int sign[6] = {1, -1, 1, 1, -1, 1};
    return {partner[pair_idx], sign[pair_idx]};
}

Polynomial plucker_relation(const RingPtr& ring, const std::string& prefix) {
    auto v = [&](int i) {
        auto [a, b] = kPairIndex[i];
        return Polynomial::variable(ring, prefix + std::to_string(a) + std::to_string(b));
    };
    return v(0) * v(5) - v(1) * v(4) + v(2) * v(3);
}

PolyMatrix plucker_skew_matrix(const RingPtr& ring, const std::string& prefix, bool dual_coords) {
    PolyMatrix A(4, 4, ring);
    for (int idx = 0; idx < 6; ++idx) {
        auto [a, b] = kPairIndex[idx];
        Polynomial e = Polynomial::zero(ring);
        if (!dual_coords) {
            e = Polynomial::variable(ring, prefix + std::to_string(a) + std::to_string(b));
        } else {
            auto [pi, sg] = dual_pairing(idx);
            auto [c, d] = kPairIndex[pi];
            e = Polynomial::variable(ring, prefix + std::to_string(c) + std::to_string(d))
                    .scaled(Rat(sg));
        }
        A.at(a - 1, b - 1) = e;
        A.at(b - 1, a - 1) = -e;
    }
    return A;
}

std::vector<Polynomial> incidence_forms(const RingPtr& ring, const std::string& coord_prefix,
                                        bool dual_coords, const std::string& point_prefix) {
    PolyMatrix A = plucker_skew_matrix(ring, coord_prefix, dual_coords);
    std::vector<Polynomial> forms;
    for (int i = 0; i < 4; ++i) {
        Polynomial f = Polynomial::zero(ring);
        for (int j = 0; j < 4; ++j) {
            if (A.at(i, j).is_zero()) continue;
            f = f + A.at(i, j) * Polynomial::variable(ring, point_prefix + std::to_string(j + 1));
        }
        forms.push_back(f);
    }
    return forms;
}

namespace {

// Rows of the adjugate-type matrix C with A(p) * C = Pf(p) * Id; on the
// Pluecker quadric its columns span the line's points.
PolyMatrix point_span_matrix(const RingPtr& ring, const std::string& prefix, bool dual_coords) {
    auto var = [&](int idx) -> Polynomial {
        if (!dual_coords) {
            auto [a, b] = kPairIndex[idx];
            return Polynomial::variable(ring, prefix + std::to_string(a) + std::to_string(b));
        }
        auto [pi, sg] = dual_pairing(idx);
        auto [c, d] = kPairIndex[pi];
        return Polynomial::variable(ring, prefix + std::to_string(c) + std::to_string(d))
            .scaled(Rat(sg));
    };
    // indices into kPairIndex: p12=0 p13=1 p14=2 p23=3 p24=4 p34=5
    PolyMatrix C(4, 4, ring);
    Polynomial z = Polynomial::zero(ring);
    Polynomial p12 = var(0), p13 = var(1), p14 = var(2), p23 = var(3), p24 = var(4), p34 = var(5);
    const Polynomial row[4][4] = {{z, p34, -p24, p23},
                                  {-p34, z, p14, -p13},
                                  {p24, -p14, z, p12},
                                  {-p23, p13, -p12, z}};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) C.at(i, j) = row[i][j];
    return C;
}

std::array<int, 2> complement_pair(int chart) {
    auto [a, b] = kPairIndex[chart];
    std::array<int, 2> out{};
    int w = 0;
    for (int i = 1; i <= 4; ++i)
        if (i != a && i != b) out[w++] = i;
    return out;
}

}  // namespace

std::vector<Polynomial> chart_line_param(const RingPtr& ring, const std::string& prefix,
                                         bool dual_coords, int chart, const std::string& tvar) {
    PolyMatrix C = point_span_matrix(ring, prefix, dual_coords);
    Polynomial t = Polynomial::variable(ring, tvar);
    int rk, rl;
    if (!dual_coords) {
        auto comp = complement_pair(chart);
        rk = comp[0] - 1;
        rl = comp[1] - 1;
    } else {
        auto [a, b] = kPairIndex[chart];
        rk = a - 1;
        rl = b - 1;
    }
    std::vector<Polynomial> z;
    for (int j = 0; j < 4; ++j) {
        Polynomial base = dual_coords ? -C.at(rl, j) : C.at(rl, j);
        z.push_back(base + t * C.at(rk, j));
    }
    return z;
}

PlueckerLine PlueckerLine::from_points(const std::array<Rat, 4>& a, const std::array<Rat, 4>& b) {
    std::array<Rat, 6> q{};
    bool all_zero = true;
    for (int i = 0; i < 6; ++i) {
        auto [u, v] = kPairIndex[i];
        q[i] = a[u - 1] * b[v - 1] - a[v - 1] * b[u - 1];
        if (sgn(q[i]) != 0) all_zero = false;
    }
    if (all_zero) throw Error("degenerate input: points do not span a line");
    return from_dual(q);
}

PlueckerLine PlueckerLine::from_planes(const std::array<Rat, 4>& u, const std::array<Rat, 4>& v) {
    std::array<Rat, 6> p{};
    bool all_zero = true;
    for (int i = 0; i < 6; ++i) {
        auto [a, b] = kPairIndex[i];
        p[i] = u[a - 1] * v[b - 1] - u[b - 1] * v[a - 1];
        if (sgn(p[i]) != 0) all_zero = false;
    }
    if (all_zero) throw Error("degenerate input: planes do not intersect in a line");
    return from_primal(p);
}

PlueckerLine PlueckerLine::from_primal(const std::array<Rat, 6>& p) {
    PlueckerLine L;
    L.primal = p;
    bool all_zero = true;
    for (int i = 0; i < 6; ++i) {
        auto [pi, sg] = dual_pairing(i);
        L.dual[i] = p[pi] * Rat(sg);
        if (sgn(p[i]) != 0) all_zero = false;
    }
    if (all_zero) throw Error("all six Pluecker coordinates are zero");
    if (sgn(L.plucker_value()) != 0) throw Error("coordinates violate the Pluecker relation");
    return L;
}

PlueckerLine PlueckerLine::from_dual(const std::array<Rat, 6>& q) {
    std::array<Rat, 6> p{};
    for (int i = 0; i < 6; ++i) {
        auto [pi, sg] = dual_pairing(i);
        p[i] = q[pi] * Rat(sg);
    }
    return from_primal(p);
}

Rat PlueckerLine::plucker_value() const {
    return primal[0] * primal[5] - primal[1] * primal[4] + primal[2] * primal[3];
}

std::pair<std::array<Rat, 4>, std::array<Rat, 4>> PlueckerLine::spanning_points() const {
    int chart = -1;
    for (int i = 0; i < 6; ++i)
        if (sgn(primal[i]) != 0) {
            chart = i;
            break;
        }
    if (chart < 0) throw Error("all six Pluecker coordinates are zero");
    const Rat& p12 = primal[0];
    const Rat& p13 = primal[1];
    const Rat& p14 = primal[2];
    const Rat& p23 = primal[3];
    const Rat& p24 = primal[4];
    const Rat& p34 = primal[5];
    Rat z(0);
    std::array<std::array<Rat, 4>, 4> C = {{{z, p34, -p24, p23},
                                            {-p34, z, p14, -p13},
                                            {p24, -p14, z, p12},
                                            {-p23, p13, -p12, z}}};
    auto comp = complement_pair(chart);
    return {C[comp[1] - 1], C[comp[0] - 1]};
}

namespace {

std::vector<int> chart_sequence(bool dual_coords, ChartPolicy policy) {
    int def = dual_coords ? 0 : 5;
    std::vector<int> seq{def};
    if (policy == ChartPolicy::AllCharts)
        for (int i = 0; i < 6; ++i)
            if (i != def) seq.push_back(i);
    return seq;
}

}  // namespace

Polynomial principal_lcm(const std::vector<Polynomial>& gens, const EngineOpts& opts) {
    std::vector<Polynomial> uniq;
    for (const auto& g : gens) {
        Polynomial n = g.normalized();
        bool dup = false;
        for (const auto& h : uniq)
            if (h == n) dup = true;
        if (!dup && !n.is_zero()) uniq.push_back(n);
    }
    if (uniq.empty()) return gens.empty() ? Polynomial() : Polynomial::zero(gens[0].ring());
    Ideal acc(uniq[0].ring(), {uniq[0]});
    for (size_t i = 1; i < uniq.size(); ++i)
        acc = intersect(acc, Ideal(uniq[0].ring(), {uniq[i]}), opts);
    auto gb = groebner_basis(acc, acc.ring()->order, opts);
    if (gb.size() != 1) throw Error("expected a principal ideal");
    return map_poly(gb[0], uniq[0].ring()).normalized();
}

Ideal eliminate_plucker_block(const Ideal& big, const std::string& prefix, bool dual,
                              ChartPolicy policy, const EngineOpts& opts) {
    auto coords = plucker_var_names(prefix);
    std::optional<Ideal> acc;
    for (int chart : chart_sequence(dual, policy)) {
        Ideal part = chart_eliminate(big, coords[chart], coords, opts);
        acc = acc ? intersect(*acc, part, opts) : part;
    }
    return *acc;
}

Ideal saturate_by_all_vars(const Ideal& I, const std::vector<std::string>& vars,
                           const EngineOpts& opts) {
    std::optional<Ideal> acc;
    for (const auto& v : vars) {
        Ideal s = saturate(I, Polynomial::variable(I.ring(), v), SatStrategy::Auto, opts);
        acc = acc ? intersect(*acc, s, opts) : s;
    }
    return *acc;
}

Polynomial ruled_surface_from_curve(const Ideal& ruling_curve, bool dual_coords,
                                    const RingPtr& x_out, const GrassOpts& opts) {
    const std::string prefix = ruling_curve.ring()->vars[0].substr(0, 1);
    std::vector<std::string> vars = ruling_curve.ring()->vars;
    for (const auto& v : x_out->vars) vars.push_back(v);
    RingPtr big = make_ring(vars, MonomialOrder::block(6));

    std::vector<Polynomial> gens;
    for (const auto& g : ruling_curve.gens()) gens.push_back(map_poly(g, big));
    gens.push_back(map_poly(plucker_relation(ruling_curve.ring(), prefix), big));
    for (auto& f : incidence_forms(big, prefix, dual_coords, x_out->vars[0].substr(0, 1)))
        gens.push_back(f);

    Ideal sys(big, std::move(gens));
    auto coords = plucker_var_names(prefix);
    std::vector<Polynomial> parts;
    for (int chart : chart_sequence(dual_coords, opts.charts)) {
        Ideal part = chart_eliminate(sys, coords[chart], coords, opts.engine);
        auto gb = groebner_basis(part, part.ring()->order, opts.engine);
        if (gb.size() > 1) throw Error("ruled-surface elimination is not principal");
        if (gb.empty()) continue;  // this chart saw no constraint
        parts.push_back(map_poly(gb[0], x_out));
    }
    if (parts.empty()) throw Error("ruling curve has no incident surface (empty elimination)");
    return principal_lcm(parts, opts.engine).normalized();
}

Ideal fano_scheme(const Polynomial& f, const RingPtr& p_out, const GrassOpts& opts) {
    if (!f.is_homogeneous()) throw Error("fano_scheme requires a homogeneous polynomial");
    const std::string prefix = p_out->vars[0].substr(0, 1);
    std::vector<std::string> vars = p_out->vars;
    vars.push_back("_t");
    RingPtr pt = make_ring(vars, MonomialOrder::grevlex());

    std::optional<Ideal> acc;
    for (int chart : chart_sequence(false, opts.charts)) {
        auto z = chart_line_param(pt, prefix, false, chart, "_t");
        std::map<std::string, Polynomial> images;
        for (int i = 0; i < 4; ++i) images[f.ring()->vars[i]] = z[i];
        Polynomial sub = f.substitute_named(images, pt);
        std::vector<Polynomial> gens;
        int tvar = pt->index_of("_t");
        for (auto& c : sub.coeffs_in(tvar))
            if (!c.is_zero()) gens.push_back(map_poly(c, p_out));
        gens.push_back(plucker_relation(p_out, prefix));
        Ideal I(p_out, std::move(gens));
        auto [a, b] = kPairIndex[chart];
        Polynomial pivot =
            Polynomial::variable(p_out, prefix + std::to_string(a) + std::to_string(b));
        Ideal satd = saturate(I, pivot, SatStrategy::Auto, opts.engine);
        acc = acc ? intersect(*acc, satd, opts.engine) : satd;
        if (opts.charts == ChartPolicy::FirstChart) break;
    }
    return *acc;
}

Ideal dual_variety(const Ideal& I, const RingPtr& dual_out, const GrassOpts& opts) {
    HilbertData h = hilbert_data(I, opts.engine);
    if (h.dimension < 1) throw Error("dual_variety requires a curve or surface");
    if (h.dimension > 2) throw Error("dual_variety input has dimension > 2");
    int r = 3 - h.dimension;  // codimension in P^3

    std::vector<std::string> vvars = {"_v1", "_v2", "_v3", "_v4"};
    std::vector<std::string> vars = vvars;
    for (const auto& v : dual_out->vars) vars.push_back(v);
    RingPtr big = make_ring(vars, MonomialOrder::block(4));
    std::vector<int> imap = {0, 1, 2, 3};

    int k = static_cast<int>(I.gens().size());
    PolyMatrix stacked(k + 1, 4, big);
    PolyMatrix J(k, 4, big);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < 4; ++j) {
            Polynomial d = I.gens()[i].differentiate(j).map_vars(big, imap);
            J.at(i, j) = d;
            stacked.at(i, j) = d;
        }
    for (int j = 0; j < 4; ++j)
        stacked.at(k, j) = Polynomial::variable(big, dual_out->vars[j]);

    std::vector<Polynomial> gens;
    for (const auto& g : I.gens()) gens.push_back(g.map_vars(big, imap));
    for (auto& m : all_minors(stacked, r + 1))
        if (!m.is_zero()) gens.push_back(std::move(m));
    Ideal sys(big, std::move(gens));

    // saturation targets: rank-r witnesses of the Jacobian
    std::vector<Polynomial> targets;
    for (auto& m : all_minors(J, r)) {
        if (m.is_zero()) continue;
        Polynomial n = m.normalized();
        bool dup = false;
        for (const auto& t : targets)
            if (t == n) dup = true;
        if (!dup) targets.push_back(std::move(n));
    }
    if (targets.empty()) throw Error("degenerate input: Jacobian vanishes identically");

    std::optional<Ideal> acc;
    for (const auto& m : targets) {
        Ideal satd = saturate(sys, m, SatStrategy::Rabinowitsch, opts.engine);
        Ideal part = eliminate(satd, vvars, opts.engine);
        part = map_ideal(part, dual_out);
        acc = acc ? intersect(*acc, part, opts.engine) : part;
    }
    return *acc;
}

Polynomial tangent_developable(const Ideal& curve, const RingPtr& x_out, const GrassOpts& opts) {
    // moving point gets fresh names so the output ring may reuse the curve's
    std::vector<std::string> vvars = {"_v1", "_v2", "_v3", "_v4"};
    std::vector<std::string> vars = vvars;
    for (const auto& v : x_out->vars) vars.push_back(v);
    RingPtr big = make_ring(vars, MonomialOrder::block(4));
    std::vector<int> imap = {0, 1, 2, 3};

    std::vector<Polynomial> gens;
    for (const auto& g : curve.gens()) gens.push_back(g.map_vars(big, imap));
    for (const auto& g : curve.gens()) {
        Polynomial row = Polynomial::zero(big);
        for (int j = 0; j < 4; ++j)
            row = row + g.differentiate(j).map_vars(big, imap) *
                            Polynomial::variable(big, x_out->vars[j]);
        gens.push_back(row);
    }
    Ideal sys(big, std::move(gens));

    std::vector<Polynomial> parts;
    for (int c = 0; c < 4; ++c) {
        Ideal part = chart_eliminate(sys, vvars[c], vvars, opts.engine);
        auto gb = groebner_basis(part, part.ring()->order, opts.engine);
        if (gb.size() > 1) throw Error("tangent developable elimination is not principal");
        if (gb.empty()) continue;
        parts.push_back(map_poly(gb[0], x_out));
        if (opts.charts == ChartPolicy::FirstChart) break;
    }
    if (parts.empty()) throw Error("tangent developable came out empty");
    return principal_lcm(parts, opts.engine).normalized();
}

namespace {

// x-coefficients of the normal forms of the incidence forms mod I_C: their
// common zero locus is the set of points lying on every line of C.
Ideal common_point_ideal(const Ideal& ruling_curve, bool dual_coords, const RingPtr& x_out,
                         const EngineOpts& opts) {
    const std::string prefix = ruling_curve.ring()->vars[0].substr(0, 1);
    std::vector<std::string> vars = ruling_curve.ring()->vars;
    for (const auto& v : x_out->vars) vars.push_back(v);
    RingPtr big = make_ring(vars, MonomialOrder::block(6));
    std::vector<Polynomial> cgens;
    for (const auto& g : ruling_curve.gens()) cgens.push_back(map_poly(g, big));
    Ideal IC(big, std::move(cgens));
    std::vector<Polynomial> coeffs;
    for (const auto& form :
         incidence_forms(big, prefix, dual_coords, x_out->vars[0].substr(0, 1))) {
        Polynomial nf = normal_form(form, IC, opts);
        // group by monomials in the Pluecker block
        std::map<std::string, Polynomial> buckets;
        for (const auto& t : nf.terms()) {
            Monomial pm = t.m, xm = t.m;
            for (int i = 6; i < big->nvars(); ++i) {
                pm.deg -= pm.e[i];
                pm.e[i] = 0;
            }
            for (int i = 0; i < 6; ++i) {
                xm.deg -= xm.e[i];
                xm.e[i] = 0;
            }
            std::string key = monomial_to_string(pm, *big);
            auto it = buckets.find(key);
            Polynomial piece = Polynomial::from_terms(big, {{xm, t.c}});
            if (it == buckets.end())
                buckets.emplace(key, piece);
            else
                it->second = it->second + piece;
        }
        for (auto& [k, v] : buckets) coeffs.push_back(map_poly(v, x_out));
    }
    return Ideal(x_out, std::move(coeffs));
}

}  // namespace

DevelopabilityResult developability_and_edge(const RuledSurfaceEncoding& enc, const GrassOpts& opts) {
    DevelopabilityResult res;
    std::optional<Ideal> dual_curve = enc.dual_curve;
    if (!enc.ruling_curve && !dual_curve)
        throw Error("developability needs a ruling curve or dual curve encoding");

    RingPtr x_out = xyz_ring("x");
    RingPtr y_out = xyz_ring("y");

    if (enc.ruling_curve) {
        const Ideal& IC = *enc.ruling_curve;
        const std::string prefix = IC.ring()->vars[0].substr(0, 1);
        if (!in_radical(IC, plucker_relation(IC.ring(), prefix), opts.engine))
            throw Error("ruling curve does not lie in the Pluecker quadric");

        // tangent lines of C inside the quadric: polar form and Q(u) vanish on
        // the tangent variety
        std::vector<std::string> vars = IC.ring()->vars;
        auto uvars = plucker_var_names("u");
        for (const auto& v : uvars) vars.push_back(v);
        RingPtr big = make_ring(vars, MonomialOrder::grevlex());
        std::vector<Polynomial> gens;
        for (const auto& g : IC.gens()) gens.push_back(map_poly(g, big));
        for (const auto& g : IC.gens()) {
            Polynomial row = Polynomial::zero(big);
            for (int j = 0; j < 6; ++j)
                row = row + map_poly(g.differentiate(j), big) * Polynomial::variable(big, uvars[j]);
            gens.push_back(row);
        }
        Ideal T(big, std::move(gens));
        auto pv = [&](int i) { return Polynomial::variable(big, IC.ring()->vars[i]); };
        auto uv = [&](int i) { return Polynomial::variable(big, uvars[i]); };
        Polynomial polar = pv(0) * uv(5) + pv(5) * uv(0) - pv(1) * uv(4) - pv(4) * uv(1) +
                           pv(2) * uv(3) + pv(3) * uv(2);
        Polynomial qu = uv(0) * uv(5) - uv(1) * uv(4) + uv(2) * uv(3);

        // the test reads the generic tangent line: cut away the fibers over
        // singular points of C by a Jacobian minor that survives on C
        int k = static_cast<int>(IC.gens().size());
        std::optional<Polynomial> witness;
        if (k >= 4) {
            PolyMatrix J(k, 6, IC.ring());
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < 6; ++j) J.at(i, j) = IC.gens()[i].differentiate(j);
            for (auto& m : all_minors(J, 4)) {
                if (m.is_zero()) continue;
                if (!ideal_contains(IC, m, opts.engine)) {
                    witness = map_poly(m, big);
                    break;
                }
            }
        }

        // chart-by-chart radical membership: the irrelevant cone point p = 0
        // must not count against the test
        auto set_one = [&](const Polynomial& f, int var) {
            std::vector<Term> terms;
            for (const auto& t : f.terms()) {
                Monomial m = t.m;
                m.deg -= m.e[var];
                m.e[var] = 0;
                terms.push_back({m, t.c});
            }
            return Polynomial::from_terms(big, std::move(terms));
        };
        res.developable = true;
        for (int j = 0; j < 6 && res.developable; ++j) {
            int var = big->index_of(IC.ring()->vars[j]);
            std::vector<Polynomial> cgens;
            for (const auto& g : T.gens()) cgens.push_back(set_one(g, var));
            Ideal Tc(big, std::move(cgens));
            if (witness) Tc = saturate(Tc, set_one(*witness, var), SatStrategy::Rabinowitsch,
                                       opts.engine);
            if (!in_radical(Tc, set_one(polar, var), opts.engine) ||
                !in_radical(Tc, qu, opts.engine))
                res.developable = false;
        }
        if (!res.developable) return res;

        // cone test: a point lying on every ruling line
        Ideal vertex = common_point_ideal(*enc.ruling_curve, enc.ruling_dual_coords, x_out,
                                          opts.engine);
        HilbertData vh = hilbert_data(vertex, opts.engine);
        if (vh.dimension >= 0) {
            res.is_cone = true;
            res.edge = vertex;
            return res;
        }
        if (!dual_curve) {
            Polynomial f = ruled_surface_from_curve(*enc.ruling_curve, enc.ruling_dual_coords,
                                                    x_out, opts);
            dual_curve = dual_variety(Ideal(x_out, {f}), y_out, opts);
        }
    } else {
        // dual-curve-only encoding: developable by definition when the dual is
        // a curve; cone iff the dual curve is planar (a linear form in its ideal)
        HilbertData dh = hilbert_data(*dual_curve, opts.engine);
        res.developable = (dh.dimension == 1);
        if (!res.developable) return res;
        auto gb = groebner_basis(*dual_curve, dual_curve->ring()->order, opts.engine);
        std::optional<Polynomial> plane;
        for (const auto& g : gb)
            if (g.total_degree() == 1) plane = g;
        if (plane) {
            // the coefficient vector of the containing plane is the vertex
            res.is_cone = true;
            std::array<Rat, 4> v{};
            for (int i = 0; i < 4; ++i) {
                Polynomial c = plane->coeff_of(i, 1);
                v[i] = c.is_zero() ? Rat(0) : c.constant_value();
            }
            std::vector<Polynomial> vgens;
            for (int i = 0; i < 4; ++i)
                for (int j = i + 1; j < 4; ++j)
                    vgens.push_back(Polynomial::variable(x_out, i).scaled(v[j]) -
                                    Polynomial::variable(x_out, j).scaled(v[i]));
            res.edge = Ideal(x_out, std::move(vgens));
            return res;
        }
    }

    // edge of regression: planes that meet the dual curve with multiplicity
    // three = dual of the tangent developable of the dual curve
    Polynomial tdev = tangent_developable(*dual_curve, y_out, opts);
    res.edge = dual_variety(Ideal(y_out, {tdev}), x_out, opts);
    return res;
}

namespace {

Polynomial restrict_ruling(const Ideal& IC, bool dual_coords,
                           const std::vector<Polynomial>& window_x, const RingPtr& out_ring,
                           const GrassOpts& opts) {
    // ring: [6 Pluecker coords, window parameters]
    const std::string prefix = IC.ring()->vars[0].substr(0, 1);
    std::vector<std::string> vars = IC.ring()->vars;
    for (const auto& v : out_ring->vars) vars.push_back(v);
    RingPtr big = make_ring(vars, MonomialOrder::block(6));

    std::vector<Polynomial> gens;
    for (const auto& g : IC.gens()) gens.push_back(map_poly(g, big));
    gens.push_back(map_poly(plucker_relation(IC.ring(), prefix), big));
    PolyMatrix A = plucker_skew_matrix(big, prefix, dual_coords);
    for (int i = 0; i < 4; ++i) {
        Polynomial f = Polynomial::zero(big);
        for (int j = 0; j < 4; ++j) {
            if (A.at(i, j).is_zero()) continue;
            f = f + A.at(i, j) * map_poly(window_x[j], big);
        }
        gens.push_back(f);
    }
    Ideal sys(big, std::move(gens));
    auto coords = plucker_var_names(prefix);
    std::vector<Polynomial> parts;
    for (int chart : chart_sequence(dual_coords, opts.charts)) {
        Ideal part = chart_eliminate(sys, coords[chart], coords, opts.engine);
        auto gb = groebner_basis(part, part.ring()->order, opts.engine);
        if (gb.size() > 1) throw Error("restriction elimination is not principal");
        if (!gb.empty()) parts.push_back(map_poly(gb[0], out_ring));
    }
    if (parts.empty()) return Polynomial::zero(out_ring);
    return principal_lcm(parts, opts.engine);
}

Polynomial restrict_dual(const Ideal& dual_curve, const std::vector<Polynomial>& window_x,
                         const RingPtr& out_ring, const GrassOpts& opts) {
    const RingPtr& yring = dual_curve.ring();
    std::vector<std::string> vars = yring->vars;
    for (const auto& v : out_ring->vars) vars.push_back(v);
    RingPtr big = make_ring(vars, MonomialOrder::block(4));

    int k = static_cast<int>(dual_curve.gens().size());
    PolyMatrix J(k, 4, big);
    PolyMatrix Jx(k + 1, 4, big);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < 4; ++j) {
            Polynomial d = map_poly(dual_curve.gens()[i].differentiate(j), big);
            J.at(i, j) = d;
            Jx.at(i, j) = d;
        }
    for (int j = 0; j < 4; ++j) Jx.at(k, j) = map_poly(window_x[j], big);

    std::vector<Polynomial> gens;
    for (const auto& g : dual_curve.gens()) gens.push_back(map_poly(g, big));
    for (auto& m : all_minors(Jx, 3))
        if (!m.is_zero()) gens.push_back(std::move(m));
    Ideal sys(big, std::move(gens));

    std::vector<Polynomial> targets;
    for (auto& m : all_minors(J, 2)) {
        if (m.is_zero()) continue;
        Polynomial n = m.normalized();
        bool dup = false;
        for (const auto& t : targets)
            if (t == n) dup = true;
        if (!dup) targets.push_back(std::move(n));
    }
    if (targets.empty()) throw Error("dual curve Jacobian vanishes identically");

    std::vector<Polynomial> parts;
    for (const auto& m : targets) {
        Ideal satd = saturate(sys, m, SatStrategy::Rabinowitsch, opts.engine);
        Ideal part = eliminate(satd, yring->vars, opts.engine);
        auto gb = groebner_basis(part, part.ring()->order, opts.engine);
        if (gb.size() > 1) throw Error("dual restriction is not principal");
        if (!gb.empty()) parts.push_back(map_poly(gb[0], out_ring));
    }
    if (parts.empty()) return Polynomial::zero(out_ring);
    return principal_lcm(parts, opts.engine);
}

std::vector<Polynomial> window_combination(const RingPtr& out_ring, const ParametricLine& L) {
    Polynomial s = Polynomial::variable(out_ring, "s");
    Polynomial t = Polynomial::variable(out_ring, "t");
    std::vector<Polynomial> w;
    for (int i = 0; i < 4; ++i)
        w.push_back(s.scaled(L.a[i]) + t.scaled(L.b[i]));
    return w;
}

Polynomial dispatch_restrict(const RuledSurfaceEncoding& enc,
                             const std::vector<Polynomial>& window,
                             const RingPtr& out_ring, RestrictStrategy strategy,
                             const GrassOpts& opts) {
    if (strategy == RestrictStrategy::Ruling) {
        if (enc.ruling_curve)
            return restrict_ruling(*enc.ruling_curve, enc.ruling_dual_coords, window, out_ring,
                                   opts);
        if (enc.surface) {
            std::map<std::string, Polynomial> images;
            for (int i = 0; i < 4; ++i) images[enc.surface->ring()->vars[i]] = window[i];
            return enc.surface->substitute_named(images, out_ring);
        }
        throw Error("restriction: encoding has no ruling curve or surface polynomial");
    }
    if (!enc.dual_curve) throw Error("dual-strategy restriction needs a dual curve encoding");
    return restrict_dual(*enc.dual_curve, window, out_ring, opts);
}

}  // namespace

Polynomial restrict_to_line(const RuledSurfaceEncoding& enc, const ParametricLine& window,
                            RestrictStrategy strategy, const GrassOpts& opts) {
    RingPtr st = make_ring({"s", "t"});
    Polynomial r = dispatch_restrict(enc, window_combination(st, window), st, strategy, opts);
    if (r.is_zero()) throw Error("window lies inside the surface (zero restriction)");
    int mult = std::max(enc.multiplicity, 1);
    return (mult == 1 ? r : r.pow(mult)).normalized();
}

Polynomial restrict_to_plane(const RuledSurfaceEncoding& enc, const ParametricPlane& window,
                             RestrictStrategy strategy, const GrassOpts& opts) {
    RingPtr stu = make_ring({"s", "t", "u"});
    Polynomial s = Polynomial::variable(stu, "s");
    Polynomial t = Polynomial::variable(stu, "t");
    Polynomial u = Polynomial::variable(stu, "u");
    std::vector<Polynomial> w;
    for (int i = 0; i < 4; ++i)
        w.push_back(s.scaled(window.a[i]) + t.scaled(window.b[i]) + u.scaled(window.c[i]));
    Polynomial r = dispatch_restrict(enc, w, stu, strategy, opts);
    if (r.is_zero()) throw Error("window lies inside the surface (zero restriction)");
    int mult = std::max(enc.multiplicity, 1);
    return (mult == 1 ? r : r.pow(mult)).normalized();
}

Polynomial restrict_to_path(const RuledSurfaceEncoding& enc, const std::vector<Polynomial>& zt,
                            RestrictStrategy strategy, const GrassOpts& opts) {
    if (zt.size() != 4) throw Error("path must have four coordinates");
    const RingPtr& tring = zt[0].ring();
    Polynomial r = dispatch_restrict(enc, zt, tring, strategy, opts);
    if (r.is_zero()) throw Error("path lies inside the surface (zero restriction)");
    int mult = std::max(enc.multiplicity, 1);
    return (mult == 1 ? r : r.pow(mult)).normalized();
}

}  // namespace visev
