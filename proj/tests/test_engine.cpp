#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "visev/grassmann.hpp"
#include "visev/hilbert.hpp"
#include "visev/parser.hpp"

using namespace visev;

namespace {
Polynomial P(const RingPtr& r, const std::string& s) { return parse_polynomial(s, r); }
Ideal I(const RingPtr& r, std::initializer_list<std::string> gens) {
    std::vector<Polynomial> v;
    for (const auto& g : gens) v.push_back(P(r, g));
    return Ideal(r, std::move(v));
}

// Independent Buchberger check: every S-polynomial reduces to zero.
bool all_spolys_reduce(const std::vector<Polynomial>& gb) {
    if (gb.empty()) return true;
    const RingPtr& r = gb[0].ring();
    int nv = r->nvars();
    Ideal B(r, gb);
    for (size_t i = 0; i < gb.size(); ++i)
        for (size_t j = i + 1; j < gb.size(); ++j) {
            Monomial l = mono_lcm(gb[i].lead_monomial(), gb[j].lead_monomial(), nv);
            Polynomial s =
                gb[i].mul_term(mono_div(l, gb[i].lead_monomial(), nv), Rat(1) / gb[i].lead_coeff()) -
                gb[j].mul_term(mono_div(l, gb[j].lead_monomial(), nv), Rat(1) / gb[j].lead_coeff());
            if (!normal_form(s, B).is_zero()) return false;
        }
    return true;
}

Polynomial rand_poly(Rng& rng, const RingPtr& r, int maxdeg = 3, int nterms = 4) {
    std::vector<Term> terms;
    for (int i = 0; i < nterms; ++i) {
        Monomial m;
        int budget = static_cast<int>(rng.int_in(0, maxdeg));
        for (int v = 0; v < r->nvars() && budget > 0; ++v) {
            int e = static_cast<int>(rng.int_in(0, budget));
            m.e[v] = e;
            m.deg += e;
            budget -= e;
        }
        terms.push_back({m, rng.small_rat()});
    }
    return Polynomial::from_terms(r, std::move(terms));
}
}  // namespace

TEST_CASE("lex basis of the parabola ideal") {
    auto r = make_ring({"t", "x", "y"}, MonomialOrder::lex());
    auto gb = groebner_basis(I(r, {"x-t", "y-t^2"}), MonomialOrder::lex());
    REQUIRE(gb.size() == 2);
    CHECK(gb[0] == P(r, "x^2-y"));
    CHECK(gb[1] == P(r, "t-x"));
}

TEST_CASE("twisted cubic generators are already a grevlex basis") {
    auto r = make_ring({"x1", "x2", "x3", "x4"});
    Ideal tc = I(r, {"x1*x3-x2^2", "x2*x4-x3^2", "x1*x4-x2*x3"});
    auto gb = groebner_basis(tc, MonomialOrder::grevlex());
    CHECK(gb.size() == 3);
    CHECK(all_spolys_reduce(gb));
    for (const auto& g : tc.gens()) CHECK(ideal_contains(Ideal(r, gb), g));
}

TEST_CASE("empty ideal") {
    auto r = make_ring({"x"});
    CHECK(groebner_basis(Ideal::zero(r)).empty());
}

TEST_CASE("normal form: membership and nonmembership") {
    auto r = make_ring({"x1", "x2"});
    Ideal J = I(r, {"x1", "x2"});
    CHECK(normal_form(P(r, "x1"), J).is_zero());
    CHECK(normal_form(Polynomial::constant(r, Rat(1)), J) == Polynomial::constant(r, Rat(1)));
    CHECK(normal_form(P(r, "x1^2+x2+1"), J) == Polynomial::constant(r, Rat(1)));
}

TEST_CASE("Pluecker relation lies in the worked ruling-curve ideal") {
    auto p = plucker_ring("p");
    Ideal ic = I(p, {"2*p14-p23", "p24^2+3*p13*p34", "p13*p24-9*p12*p34", "p23^2-16*p12*p34",
                     "p13^2+3*p12*p24"});
    CHECK(ideal_contains(ic, plucker_relation(p, "p")));
}

TEST_CASE("eliminate") {
    auto r = make_ring({"t", "x", "y"});
    Ideal par = I(r, {"x-t", "y-t^2"});
    Ideal e = eliminate(par, {"t"});
    REQUIRE(e.gens().size() == 1);
    CHECK(e.gens()[0] == P(e.ring(), "x^2-y"));

    auto r2 = make_ring({"x1", "x2"});
    Ideal e2 = eliminate(I(r2, {"x1"}), {"x2"});
    REQUIRE(e2.gens().size() == 1);
    CHECK(e2.gens()[0].to_string() == "x1");
}

TEST_CASE("saturation basics") {
    auto r = make_ring({"x", "y", "z"});
    Ideal a = saturate(I(r, {"x*y", "x*z"}), P(r, "x"));
    CHECK(ideal_equal(a, I(r, {"y", "z"})));
    Ideal b = saturate(I(r, {"x^2"}), P(r, "x"));
    CHECK(b.is_unit());
}

TEST_CASE("saturation strategies agree and are idempotent") {
    Rng rng(424242);
    auto r = make_ring({"x", "y", "z"});
    int done = 0;
    for (int k = 0; done < 50 && k < 400; ++k) {
        Polynomial f = rand_poly(rng, r), g = rand_poly(rng, r), h = rand_poly(rng, r);
        if (f.is_zero() || g.is_zero() || h.is_zero() || h.is_constant()) continue;
        Ideal J(r, {f, g});
        if (J.gens().empty()) continue;
        Ideal s1 = saturate(J, h, SatStrategy::Rabinowitsch);
        Ideal s2 = saturate(J, h, SatStrategy::IteratedColon);
        CHECK(ideal_equal(s1, s2));
        Ideal s3 = saturate(s1, h, SatStrategy::Rabinowitsch);
        CHECK(ideal_equal(s1, s3));
        ++done;
    }
    CHECK(done == 50);
}

TEST_CASE("grevlex variable saturation agrees on homogeneous ideals") {
    Rng rng(77);
    auto r = make_ring({"x", "y", "z", "w"});
    auto randhom = [&](int deg) {
        std::vector<Term> terms;
        for (int i = 0; i < 4; ++i) {
            Monomial m;
            int left = deg;
            for (int v = 0; v < 3; ++v) {
                int e = static_cast<int>(rng.int_in(0, left));
                m.e[v] = e;
                left -= e;
            }
            m.e[3] = left;
            m.deg = deg;
            terms.push_back({m, rng.small_rat()});
        }
        return Polynomial::from_terms(r, std::move(terms));
    };
    for (int k = 0; k < 20; ++k) {
        Polynomial f = randhom(2), g = randhom(3);
        if (f.is_zero() || g.is_zero()) continue;
        Ideal J(r, {f, g});
        Polynomial w = Polynomial::variable(r, "w");
        CHECK(ideal_equal(saturate(J, w, SatStrategy::GrevlexVariable),
                          saturate(J, w, SatStrategy::Rabinowitsch)));
    }
}

TEST_CASE("quotient and intersection") {
    auto r = make_ring({"x", "y"});
    CHECK(ideal_equal(quotient(I(r, {"x^2", "x*y"}), P(r, "x")), I(r, {"x", "y"})));
    CHECK(ideal_equal(intersect(I(r, {"x"}), I(r, {"y"})), I(r, {"x*y"})));
}

TEST_CASE("kernels of ring morphisms") {
    // q_ij -> 2x2 minors of a generic 2x4 matrix: kernel is the Pluecker quadric
    auto q = plucker_ring("q");
    auto uv = make_ring({"u1", "u2", "u3", "u4", "v1", "v2", "v3", "v4"});
    RingMorphism phi{q, uv, {}};
    for (auto [a, b] : kPairIndex)
        phi.images.push_back(P(uv, "u" + std::to_string(a) + "*v" + std::to_string(b) + "-u" +
                                       std::to_string(b) + "*v" + std::to_string(a)));
    Ideal ker = kernel_of_morphism(phi);
    REQUIRE(ker.gens().size() == 1);
    CHECK(ker.gens()[0] == plucker_relation(q, "q").normalized());

    auto xy = make_ring({"x", "y"});
    auto t = make_ring({"t"});
    RingMorphism psi{xy, t, {P(t, "t^4"), P(t, "t^4")}};
    CHECK(ideal_equal(kernel_of_morphism(psi), I(xy, {"x-y"})));

    auto x = make_ring({"x1", "x2", "x3", "x4"});
    auto st = make_ring({"s", "t"});
    RingMorphism rho{x, st, {P(st, "s^4"), P(st, "s^3*t"), P(st, "s*t^3"), P(st, "t^4")}};
    Ideal quartic = kernel_of_morphism(rho);
    Ideal expected = I(x, {"x2*x3-x1*x4", "x3^3-x2*x4^2", "x1*x3^2-x2^2*x4", "x2^3-x1^2*x3"});
    CHECK(ideal_equal(quartic, expected));
}

TEST_CASE("hilbert data") {
    auto x = make_ring({"x1", "x2", "x3", "x4"});
    Ideal tc = I(x, {"x1*x3-x2^2", "x2*x4-x3^2", "x1*x4-x2*x3"});
    HilbertData h = hilbert_data(tc);
    CHECK(h.dimension == 1);
    CHECK(h.degree == 3);

    HilbertData hplane = hilbert_data(I(x, {"x1"}));
    CHECK(hplane.dimension == 2);
    CHECK(hplane.degree == 1);

    CHECK(hilbert_data(Ideal::unit(x)).dimension == -1);

    // principal ideal of an irreducible degree-d form has degree d
    HilbertData hq = hilbert_data(I(x, {"x1*x4-x2*x3"}));
    CHECK(hq.dimension == 2);
    CHECK(hq.degree == 2);
}

TEST_CASE("twisted cubic degree oracle: random plane section") {
    // parameterization (s^3, s^2 t, s t^2, t^3) restricted to a random plane
    // gives a binary cubic: three roots counted with multiplicity
    auto st = make_ring({"s", "t"});
    Rng rng(5);
    for (int trial = 0; trial < 5; ++trial) {
        Polynomial sec = Polynomial::zero(st);
        std::string mons[4] = {"s^3", "s^2*t", "s*t^2", "t^3"};
        for (int i = 0; i < 4; ++i) sec = sec + P(st, mons[i]).scaled(rng.small_rat());
        if (sec.is_zero()) continue;
        CHECK(sec.total_degree() == 3);
    }
}

TEST_CASE("radical membership") {
    auto r = make_ring({"x", "y"});
    Ideal J = I(r, {"x^2"});
    CHECK(in_radical(J, P(r, "x")));
    CHECK(!in_radical(J, P(r, "y")));
}

TEST_CASE("minimal generators of a padded ideal") {
    auto r = make_ring({"x", "y", "z"});
    Ideal J = I(r, {"x", "y", "x^2+x*y"});
    auto mg = minimal_generators(J);
    CHECK(mg.profile == std::map<int, int>{{1, 2}});
}

TEST_CASE("property: buchberger fixed point on random ideals") {
    Rng rng(20251);
    auto r = make_ring({"x", "y", "z"});
    int done = 0;
    for (int k = 0; done < 50 && k < 400; ++k) {
        Polynomial f = rand_poly(rng, r), g = rand_poly(rng, r);
        if (f.is_zero() || g.is_zero()) continue;
        auto gb = groebner_basis(Ideal(r, {f, g}));
        CHECK(all_spolys_reduce(gb));
        ++done;
    }
    CHECK(done == 50);
}

TEST_CASE("property: elimination matches the bivariate resultant") {
    Rng rng(5150);
    auto r = make_ring({"t", "x"});
    int done = 0;
    for (int k = 0; done < 20 && k < 300; ++k) {
        Polynomial f = P(r, "t^2") + P(r, "t").scaled(rng.small_rat()) +
                       P(r, "x").scaled(rng.small_rat()) +
                       Polynomial::constant(r, rng.small_rat());
        Polynomial g = P(r, "t^2") + P(r, "t*x").scaled(rng.small_rat()) +
                       Polynomial::constant(r, rng.small_rat());
        Ideal e = eliminate(Ideal(r, {f, g}), {"t"});
        if (e.gens().empty()) continue;
        BinaryForm bf = BinaryForm::from_polynomial(f, "t");
        BinaryForm bg = BinaryForm::from_polynomial(g, "t");
        Polynomial res = resultant(bf, bg);
        if (res.is_zero()) continue;
        CHECK(ideal_contains(e, map_poly(res, e.ring())));
        if (e.gens().size() == 1) {
            auto quot = map_poly(res, e.ring()).exact_divide(e.gens()[0].scaled(
                Rat(1) / e.gens()[0].lead_coeff()));
            CHECK(map_poly(res, e.ring()).exact_divide(e.gens()[0]).has_value());
        }
        ++done;
    }
    CHECK(done == 20);
}

TEST_CASE("budget exceeded is typed") {
    auto r = make_ring({"x", "y", "z", "w"});
    EngineOpts opts;
    opts.budget.max_pair_reductions = 1;
    Ideal hard = I(r, {"x^3*y - z*w^2 + x", "y^3*z - w*x^2 + y", "z^3*w - x*y^2"});
    CHECK_THROWS_AS(groebner_basis(hard, MonomialOrder::grevlex(), opts), BudgetExceeded);
}
