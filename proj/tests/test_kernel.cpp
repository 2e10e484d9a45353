#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "visev/parser.hpp"

using namespace visev;

namespace {
Polynomial P(const RingPtr& r, const std::string& s) { return parse_polynomial(s, r); }
}  // namespace

TEST_CASE("rational invariants") {
    Rat a("6/4");
    a.canonicalize();
    CHECK(a.get_num() == 3);
    CHECK(a.get_den() == 2);
    CHECK(rat_from_string("-4/6") == Rat(-2, 3));
}

TEST_CASE("arith basics and identities") {
    auto r = make_ring({"x1", "x2", "x3", "x4"});
    CHECK(P(r, "x1+x2") * P(r, "x1-x2") == P(r, "x1^2-x2^2"));
    CHECK(P(r, "x1*x4-x2*x3") + Polynomial::zero(r) == P(r, "x1*x4-x2*x3"));

    auto st = make_ring({"s", "t"});
    Polynomial f = P(st, "s^3*t^2+s^3+t^2+s+t+1");
    CHECK((f - f).is_zero());
    CHECK((f - f).nterms() == 0);
}

TEST_CASE("pow and ring mismatch errors") {
    auto r = make_ring({"x", "y"});
    auto r2 = make_ring({"x", "z"});
    CHECK(P(r, "x+y").pow(2) == P(r, "x^2+2*x*y+y^2"));
    CHECK_THROWS_AS(P(r, "x") + P(r2, "x"), Error);
    CHECK_THROWS_AS(P(r, "x^-2"), ParseError);
}

TEST_CASE("substitute: chart parameterization of the quadric") {
    auto x = make_ring({"x1", "x2", "x3", "x4"});
    auto pt = make_ring({"p12", "p13", "p14", "p23", "p24", "p34", "t"});
    Polynomial f = P(x, "x1*x4-x2*x3");
    std::map<std::string, Polynomial> img{
        {"x1", P(pt, "-p34")},
        {"x2", P(pt, "t*p34")},
        {"x3", P(pt, "p14-t*p24")},
        {"x4", P(pt, "t*p23-p13")},
    };
    Polynomial got = f.substitute_named(img, pt);
    CHECK(got == P(pt, "p24*p34*t^2 - (p14+p23)*p34*t + p13*p34"));

    // sanity at a handful of rational points against direct evaluation
    Rng rng(7);
    for (int k = 0; k < 5; ++k) {
        std::vector<Rat> pval;
        for (int i = 0; i < 7; ++i) pval.push_back(rng.small_rat());
        std::vector<Rat> xv = {img.at("x1").evaluate(pval), img.at("x2").evaluate(pval),
                               img.at("x3").evaluate(pval), img.at("x4").evaluate(pval)};
        CHECK(f.evaluate(xv) == got.evaluate(pval));
    }
}

TEST_CASE("substitute: identity and segre slice") {
    auto x = make_ring({"x1"});
    CHECK(P(x, "x1").substitute_named({{"x1", P(x, "x1")}}, x) == P(x, "x1"));

    auto st = make_ring({"s", "t"});
    Polynomial f = P(st, "s^3*t^2+s^3+t^2+s+t+1");
    auto got = f.substitute_named({{"s", P(st, "s")}, {"t", Polynomial::zero(st)}}, st);
    CHECK(got == P(st, "s^3+s+1"));

    CHECK_THROWS_AS(f.substitute_named({{"s", P(st, "s")}}, st), Error);  // t unassigned
}

TEST_CASE("differentiate, Euler, Hessian determinant") {
    auto x = make_ring({"x1", "x2", "x3", "x4"});
    Polynomial fermat = P(x, "x1^3+x2^3+x3^3+x4^3");
    CHECK(fermat.differentiate("x1") == P(x, "3*x1^2"));

    Polynomial quad = P(x, "x1*x4-x2*x3");
    Polynomial euler = Polynomial::zero(x);
    for (int i = 0; i < 4; ++i)
        euler = euler + Polynomial::variable(x, i) * quad.differentiate(i);
    CHECK(euler == quad.scaled(Rat(2)));
}

TEST_CASE("parse/print round trips and canonical form") {
    auto x = make_ring({"x1", "x2", "x3", "x4"});
    Polynomial f = P(x, "x1*x4 - x2*x3");
    CHECK(P(x, f.to_string()) == f);

    Polynomial q = P(x,
                     "x1^5+x2^5+x3^5+x4^5+(x1+x2+x3+x4)^5+x1*x2*x3*x4*(x1+x2+x3+x4)");
    CHECK(q.nterms() == 56);
    CHECK(q.is_homogeneous());
    CHECK(q.total_degree() == 5);
    CHECK(P(x, q.to_string()) == q);

    CHECK(P(x, "(2/3)*x1^2").lead_coeff() == Rat(2, 3));

    CHECK_THROWS_AS(P(x, "x1^^2"), ParseError);
    CHECK_THROWS_AS(P(x, "z9+1"), ParseError);
    try {
        P(x, "x1 +\n  @");
        CHECK(false);
    } catch (const ParseError& e) {
        CHECK(e.line == 2);
    }
}

TEST_CASE("normalization: content-free, positive lead") {
    auto x = make_ring({"x1", "x2"});
    Polynomial f = P(x, "-4*x1^2 + 6*x1*x2");
    Polynomial n = f.normalized();
    CHECK(n == P(x, "2*x1^2 - 3*x1*x2"));
    CHECK(n.content() == Rat(1));
}

TEST_CASE("property: ring axioms on random sparse polynomials") {
    auto r = make_ring({"a", "b", "c", "d", "e", "f"});
    Rng rng(20240817);
    auto randpoly = [&]() {
        std::vector<Term> terms;
        int n = static_cast<int>(rng.int_in(1, 6));
        for (int i = 0; i < n; ++i) {
            Monomial m;
            for (int v = 0; v < 6; ++v) {
                int e = static_cast<int>(rng.int_in(0, 2));
                m.e[v] = e;
                m.deg += e;
            }
            if (m.deg > 4) continue;
            terms.push_back({m, rng.small_rat()});
        }
        return Polynomial::from_terms(r, std::move(terms));
    };
    for (int k = 0; k < 60; ++k) {
        Polynomial A = randpoly(), B = randpoly(), C = randpoly();
        CHECK((A * B) * C == A * (B * C));
        CHECK(A * (B + C) == A * B + A * C);
        CHECK(A * B == B * A);
        CHECK(A + B == B + A);
    }
}

TEST_CASE("property: substitution is a ring morphism") {
    auto r = make_ring({"x", "y"});
    auto s = make_ring({"u", "v"});
    Rng rng(99);
    auto randpoly = [&](const RingPtr& ring) {
        std::vector<Term> terms;
        for (int i = 0; i < 4; ++i) {
            Monomial m;
            m.e[0] = static_cast<uint16_t>(rng.int_in(0, 3));
            m.e[1] = static_cast<uint16_t>(rng.int_in(0, 2));
            m.deg = m.e[0] + m.e[1];
            terms.push_back({m, rng.small_rat()});
        }
        return Polynomial::from_terms(ring, std::move(terms));
    };
    for (int k = 0; k < 60; ++k) {
        Polynomial A = randpoly(r), B = randpoly(r);
        std::map<std::string, Polynomial> img{{"x", randpoly(s)}, {"y", randpoly(s)}};
        CHECK((A * B).substitute_named(img, s) ==
              A.substitute_named(img, s) * B.substitute_named(img, s));
        CHECK((A + B).substitute_named(img, s) ==
              A.substitute_named(img, s) + B.substitute_named(img, s));
    }
}

TEST_CASE("property: Leibniz and Euler for homogeneous") {
    auto r = make_ring({"x", "y", "z"});
    Rng rng(123);
    auto randhom = [&](int deg) {
        std::vector<Term> terms;
        for (int i = 0; i < 5; ++i) {
            Monomial m;
            int a = static_cast<int>(rng.int_in(0, deg));
            int b = static_cast<int>(rng.int_in(0, deg - a));
            m.e[0] = a;
            m.e[1] = b;
            m.e[2] = deg - a - b;
            m.deg = deg;
            terms.push_back({m, rng.small_rat()});
        }
        return Polynomial::from_terms(r, std::move(terms));
    };
    for (int k = 0; k < 50; ++k) {
        Polynomial A = randhom(3), B = randhom(2);
        for (int v = 0; v < 3; ++v)
            CHECK((A * B).differentiate(v) ==
                  A.differentiate(v) * B + A * B.differentiate(v));
        if (!A.is_zero()) {
            Polynomial euler = Polynomial::zero(r);
            for (int v = 0; v < 3; ++v)
                euler = euler + Polynomial::variable(r, v) * A.differentiate(v);
            CHECK(euler == A.scaled(Rat(3)));
        }
    }
}

TEST_CASE("exact division") {
    auto r = make_ring({"x", "y"});
    Polynomial f = P(r, "x^2-y^2");
    CHECK(*f.exact_divide(P(r, "x-y")) == P(r, "x+y"));
    CHECK(!f.exact_divide(P(r, "x+1")).has_value());
}
