#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>

#include "visev/cache.hpp"
#include "visev/parser.hpp"
#include "visev/realroots.hpp"

using namespace visev;

namespace {
Polynomial P(const RingPtr& r, const std::string& s) { return parse_polynomial(s, r); }

struct CacheSandbox {
    std::filesystem::path dir;
    CacheSandbox() {
        dir = std::filesystem::temp_directory_path() /
              ("visev_mrl_test_" + std::to_string(::getpid()));
        std::filesystem::remove_all(dir);
        set_mrl_cache_dir(dir.string());
    }
    ~CacheSandbox() { std::filesystem::remove_all(dir); }
};
CacheSandbox sandbox;

// plant roots with prescribed multiplicities and return the coefficient vector
std::vector<Rat> planted_coeffs(Rng& rng, const Partition& lambda, int d) {
    UniPoly f = UniPoly::from_coeffs({Int(1)});
    int total = 0;
    std::vector<Int> used;
    for (int mult : lambda) {
        Int root;
        for (;;) {
            root = Int(rng.int_in(-6, 6));
            bool dup = false;
            for (const auto& u : used)
                if (u == root) dup = true;
            if (!dup) break;
        }
        used.push_back(root);
        UniPoly lin = UniPoly::from_coeffs({-root, Int(1)});
        for (int i = 0; i < mult; ++i) f = f * lin;
        total += mult;
    }
    while (total < d) {
        Int root(rng.int_in(7, 20));  // extra simple roots, disjoint range
        f = f * UniPoly::from_coeffs({-root, Int(1)});
        ++total;
    }
    std::vector<Rat> c(d + 1, Rat(0));
    for (int i = 0; i <= f.degree(); ++i) c[d - i] = Rat(f.a[i]);
    return c;
}

bool vanishes_at(const MRLIdeal& m, const std::vector<Rat>& coeffs) {
    for (const auto& g : m.ideal.gens())
        if (sgn(g.evaluate(coeffs)) != 0) return false;
    return true;
}
}  // namespace

TEST_CASE("quadruple root locus of quartics: the printed 2x4 matrix minors") {
    MRLIdeal m = mrl_ideal({4}, 4);
    RingPtr c = coefficient_ring(4);
    PolyMatrix M(2, 4, c);
    const char* top[4] = {"12*c0", "3*c1", "2*c2", "3*c3"};
    const char* bot[4] = {"3*c1", "2*c2", "3*c3", "12*c4"};
    for (int j = 0; j < 4; ++j) {
        M.at(0, j) = P(c, top[j]);
        M.at(1, j) = P(c, bot[j]);
    }
    Ideal minors(c, all_minors(M, 2));
    CHECK(ideal_equal(m.ideal, minors));
    CHECK(m.profile == std::map<int, int>{{2, 6}});
}

TEST_CASE("quadruple root locus of quintics: three printed quadrics") {
    MRLIdeal m = mrl_ideal({4}, 5);
    RingPtr c = coefficient_ring(5);
    Ideal expected(c, {P(c, "20*c0*c4-8*c1*c3+3*c2^2"), P(c, "50*c0*c5-6*c1*c4+c2*c3"),
                       P(c, "20*c1*c5-8*c2*c4+3*c3^2")});
    CHECK(ideal_equal(m.ideal, expected));
    CHECK(m.profile == std::map<int, int>{{2, 3}});
}

TEST_CASE("two double roots on quintics: codim 2, degree 12, ten quintics") {
    MRLIdeal m = mrl_ideal({2, 2}, 5);
    HilbertData h = hilbert_data(m.ideal);
    CHECK(5 - h.dimension == 2);  // codimension in P^5
    CHECK(h.degree == 12);
    CHECK(m.profile == std::map<int, int>{{5, 10}});
}

TEST_CASE("(3,2) on sextics matches the tabulated profile") {
    MRLIdeal m = mrl_ideal({3, 2}, 6);
    CHECK(m.profile == std::map<int, int>{{4, 1}, {5, 3}, {6, 31}});
    CHECK(m.profile_validated);
    CHECK_FALSE(m.profile_mismatch);
}

TEST_CASE("specialization soundness on planted roots") {
    std::vector<std::pair<Partition, int>> cases = {
        {{4}, 4}, {{4}, 5}, {{2, 2}, 5}, {{3, 2}, 5}, {{2, 2}, 4}, {{3}, 5}, {{2}, 4},
    };
    for (const auto& [lambda, d] : cases) {
        MRLIdeal m = mrl_ideal(lambda, d);
        Rng rng(900 + d * 10 + lambda[0]);
        for (int k = 0; k < 20; ++k) {
            auto good = planted_coeffs(rng, lambda, d);
            CHECK(vanishes_at(m, good));
        }
        // strictly coarser multiplicities than generic: a generic squarefree
        // polynomial must NOT satisfy the conditions
        Rng rng2(1700 + d);
        int nontrivial = 0;
        for (int k = 0; k < 20 && nontrivial < 5; ++k) {
            Partition ones;  // all simple roots
            auto free_coeffs = planted_coeffs(rng2, {1}, d);
            if (!vanishes_at(m, free_coeffs)) ++nontrivial;
        }
        CHECK(nontrivial == 5);
    }
}

TEST_CASE("subresultant route equals the catalecticant route for full multiplicity") {
    // (d)(d): points of the rational normal curve; plant (alpha t + beta)^d
    for (int d : {3, 4, 5}) {
        MRLIdeal m = mrl_ideal({d}, d);
        Rng rng(55 + d);
        for (int k = 0; k < 10; ++k) {
            Rat alpha = rng.small_rat(), beta = rng.small_rat();
            if (sgn(alpha) == 0 && sgn(beta) == 0) continue;
            std::vector<Rat> c(d + 1);
            // (alpha t + beta)^d: c_i = C(d,i) alpha^(d-i) beta^i
            Int binom = 1;
            for (int i = 0; i <= d; ++i) {
                if (i) binom = binom * (d - i + 1) / i;
                c[i] = Rat(binom) * rat_pow(alpha, d - i) * rat_pow(beta, i);
            }
            CHECK(vanishes_at(m, c));
        }
    }
}

TEST_CASE("cache round trip, verify, and corruption quarantine") {
    Partition lambda = {4};
    int d = 5;
    MRLIdeal first = mrl_ideal(lambda, d);
    auto got = mrl_cache_get(lambda, d);
    REQUIRE(got.has_value());
    CHECK(ideal_equal(got->ideal, first.ideal));

    CacheVerify v = mrl_cache_verify(lambda, d);
    CHECK(v.present);
    CHECK(v.checksum_ok);
    CHECK(v.profile_tabulated);
    CHECK(v.profile_ok);

    CHECK_FALSE(mrl_cache_verify({2, 2}, 7).present);  // empty-cache miss

    // corrupt the entry: get() must quarantine and miss
    auto path = std::filesystem::path(mrl_cache_dir()) / (mrl_cache_key(lambda, d) + ".json");
    {
        std::ofstream out(path);
        out << "{\"generators\": [\"c0\"], \"profile\": {}, \"checksum\": 1}";
    }
    CHECK_FALSE(mrl_cache_get(lambda, d).has_value());
    CHECK(std::filesystem::exists(path.string() + ".quarantine"));
}
