#include "visev/hilbert.hpp"

#include <algorithm>
#include <map>

namespace visev {

namespace {

// Z[t] as coefficient vectors.
using ZSeries = std::vector<Int>;

ZSeries zs_one() { return {Int(1)}; }

void zs_add(ZSeries& a, const ZSeries& b) {
    if (b.size() > a.size()) a.resize(b.size(), Int(0));
    for (size_t i = 0; i < b.size(); ++i) a[i] += b[i];
}

ZSeries zs_mul(const ZSeries& a, const ZSeries& b) {
    if (a.empty() || b.empty()) return {};
    ZSeries r(a.size() + b.size() - 1, Int(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

// 1 - t^d
ZSeries zs_one_minus_power(int d) {
    ZSeries r(d + 1, Int(0));
    r[0] = 1;
    r[d] = -1;
    return r;
}

ZSeries zs_shift(const ZSeries& a, int k) {
    ZSeries r(a.size() + k, Int(0));
    for (size_t i = 0; i < a.size(); ++i) r[i + k] = a[i];
    return r;
}

void drop_redundant(std::vector<Monomial>& gens, int nv) {
    std::vector<Monomial> out;
    for (size_t i = 0; i < gens.size(); ++i) {
        bool red = false;
        for (size_t j = 0; j < gens.size() && !red; ++j) {
            if (i == j) continue;
            if (mono_divides(gens[j], gens[i], nv) &&
                (gens[j] != gens[i] || j < i))
                red = true;
        }
        if (!red) out.push_back(gens[i]);
    }
    gens = std::move(out);
}

// Hilbert series numerator of R/<gens> over (1-t)^nv via pivot recursion:
// N(L) = N(L + <x>) + t * N(L : x).
ZSeries numerator(std::vector<Monomial> gens, int nv) {
    drop_redundant(gens, nv);
    if (gens.empty()) return zs_one();
    for (const auto& g : gens)
        if (g.is_one()) return ZSeries{};  // unit ideal: zero module

    // base case: pairwise coprime generators
    bool coprime = true;
    for (size_t i = 0; i < gens.size() && coprime; ++i)
        for (size_t j = i + 1; j < gens.size() && coprime; ++j)
            if (!mono_coprime(gens[i], gens[j], nv)) coprime = false;
    if (coprime) {
        ZSeries r = zs_one();
        for (const auto& g : gens) r = zs_mul(r, zs_one_minus_power(g.deg));
        return r;
    }

    // pivot: variable occurring most often among non-pure-power generators
    std::vector<int> freq(nv, 0);
    for (const auto& g : gens) {
        int support = 0;
        for (int v = 0; v < nv; ++v)
            if (g.e[v]) ++support;
        if (support <= 1) continue;
        for (int v = 0; v < nv; ++v)
            if (g.e[v]) ++freq[v];
    }
    int piv = 0;
    for (int v = 1; v < nv; ++v)
        if (freq[v] > freq[piv]) piv = v;

    // L + <x_piv>
    std::vector<Monomial> plus;
    plus.push_back(mono_var(piv));
    for (const auto& g : gens)
        if (g.e[piv] == 0) plus.push_back(g);
    // L : x_piv
    std::vector<Monomial> colon;
    for (const auto& g : gens) {
        Monomial m = g;
        if (m.e[piv]) {
            m.e[piv] -= 1;
            m.deg -= 1;
        }
        colon.push_back(m);
    }
    ZSeries r = numerator(std::move(plus), nv);
    zs_add(r, zs_shift(numerator(std::move(colon), nv), 1));
    return r;
}

}  // namespace

HilbertData hilbert_data(const Ideal& I, const EngineOpts& opts) {
    if (auto c = I.cached_hilbert()) return *c;
    for (const auto& g : I.gens())
        if (!g.is_homogeneous()) throw Error("hilbert_data requires a homogeneous ideal");

    int nv = I.ring()->nvars();
    HilbertData h;
    if (I.is_unit()) {
        h.dimension = -1;
        h.degree = 0;
        h.series_numerator = {};
        I.store_hilbert(h);
        return h;
    }

    auto gb = groebner_basis(I, MonomialOrder::grevlex(), opts);
    std::vector<Monomial> leads;
    RingPtr grl = make_ring(I.ring()->vars, MonomialOrder::grevlex());
    for (const auto& g : gb) leads.push_back(g.with_ring(grl).lead_monomial());

    ZSeries num = numerator(std::move(leads), nv);
    h.series_numerator.assign(num.begin(), num.end());

    // cancel (1-t) factors: affine Krull dim = nv - multiplicity of root t=1
    int s = 0;
    ZSeries q = num;
    for (;;) {
        Int at1(0);
        for (const auto& c : q) at1 += c;
        if (sgn(at1) != 0 || q.empty()) break;
        // divide by (1-t): synthetic division
        ZSeries d(q.size() - 1, Int(0));
        Int carry(0);
        for (size_t i = 0; i + 1 < q.size(); ++i) {
            carry = (i == 0 ? q[0] : d[i - 1] + q[i]);
            d[i] = carry;
        }
        q = std::move(d);
        ++s;
    }
    Int deg(0);
    for (const auto& c : q) deg += c;
    int affine_dim = nv - s;
    h.dimension = affine_dim - 1;
    h.degree = deg;
    I.store_hilbert(h);
    return h;
}

MinimalGenerators minimal_generators(const Ideal& I, const EngineOpts& opts) {
    for (const auto& g : I.gens())
        if (!g.is_homogeneous()) throw Error("minimal_generators requires a homogeneous ideal");
    MinimalGenerators out;
    if (I.is_zero_ideal()) return out;

    auto gb = groebner_basis(I, I.ring()->order, opts);
    std::stable_sort(gb.begin(), gb.end(), [](const Polynomial& a, const Polynomial& b) {
        return a.total_degree() < b.total_degree();
    });
    Ideal kept = Ideal::zero(I.ring());
    for (const auto& g : gb) {
        if (!kept.gens().empty() && ideal_contains(kept, g, opts)) continue;
        out.gens.push_back(g);
        out.profile[g.total_degree()] += 1;
        std::vector<Polynomial> gens = kept.gens();
        gens.push_back(g);
        kept = Ideal(I.ring(), std::move(gens));
    }
    return out;
}

std::string profile_to_string(const std::map<int, int>& profile) {
    std::string s;
    for (const auto& [deg, count] : profile) {
        if (!s.empty()) s += " ";
        s += std::to_string(deg) + "^" + std::to_string(count);
    }
    return s.empty() ? "-" : s;
}

}  // namespace visev
