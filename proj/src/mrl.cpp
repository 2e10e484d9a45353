#include "visev/mrl.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>

#include "visev/cache.hpp"

namespace visev {

std::string partition_to_string(const Partition& p) {
    std::string s;
    for (size_t i = 0; i < p.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(p[i]);
    }
    return s;
}

Partition parse_partition(const std::string& s) {
    Partition p;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ','))
        if (!tok.empty()) p.push_back(std::stoi(tok));
    if (p.empty()) throw Error("empty partition");
    for (size_t i = 0; i + 1 < p.size(); ++i)
        if (p[i] < p[i + 1]) throw Error("partition must be weakly decreasing");
    for (int x : p)
        if (x < 1) throw Error("partition entries must be positive");
    return p;
}

RingPtr coefficient_ring(int d, const std::string& prefix) {
    std::vector<std::string> vars;
    for (int i = 0; i <= d; ++i) vars.push_back(prefix + std::to_string(i));
    return make_ring(std::move(vars));
}

std::optional<std::map<int, int>> reference_profile(const Partition& lambda, int d) {
    const std::string key = partition_to_string(lambda) + "|" + std::to_string(d);
    static const std::map<std::string, std::map<int, int>> table = {
        {"4|4", {{2, 6}}},
        {"4|5", {{2, 3}}},
        {"4|6", {{2, 1}, {3, 3}, {4, 1}}},
        {"4|7", {{4, 20}}},
        {"3,2|5", {{4, 28}}},
        {"3,2|6", {{4, 1}, {5, 3}, {6, 31}}},
        {"3,2|7", {{6, 10}, {8, 38}}},
        {"2,2,2|6", {{4, 45}}},
        {"2,2,2|7", {{6, 78}}},
        {"2,2|5", {{5, 10}}},
    };
    auto it = table.find(key);
    if (it == table.end()) return std::nullopt;
    return it->second;
}

namespace {

Partition normalize_partition(Partition p) {
    std::sort(p.begin(), p.end(), std::greater<int>());
    while (!p.empty() && p.back() == 1) p.pop_back();
    return p;
}

// minimal strict coarsenings: merge two parts, re-sort, dedupe
std::vector<Partition> minimal_coarsenings(const Partition& p) {
    std::vector<Partition> out;
    for (size_t i = 0; i < p.size(); ++i)
        for (size_t j = i + 1; j < p.size(); ++j) {
            Partition q;
            for (size_t k = 0; k < p.size(); ++k)
                if (k != i && k != j) q.push_back(p[k]);
            q.push_back(p[i] + p[j]);
            q = normalize_partition(q);
            bool dup = false;
            for (const auto& r : out)
                if (r == q) dup = true;
            if (!dup) out.push_back(q);
        }
    return out;
}

std::mutex g_memo_mu;
std::map<std::string, MRLIdeal> g_memo;

// the generic form and its t-derivative over Q[c0..cd]
std::pair<BinaryForm, BinaryForm> generic_form(int d, const RingPtr& c) {
    BinaryForm h = BinaryForm::zero(d, c);
    for (int i = 0; i <= d; ++i) h.c[i] = Polynomial::variable(c, i);
    return {h, h.derivative()};
}

MRLIdeal compute_mrl(const Partition& lambda0, int d, const EngineOpts& opts) {
    Partition lambda = normalize_partition(lambda0);
    MRLIdeal out;
    out.lambda = lambda0;
    out.d = d;
    RingPtr c = coefficient_ring(d);
    if (lambda.empty()) {
        out.ideal = Ideal::zero(c);
        return out;
    }
    int total = 0;
    for (int x : lambda0) total += x;
    if (total > d) throw Error("partition exceeds the form degree");

    auto [h, hp] = generic_form(d, c);
    int r = 0;
    for (int x : lambda) r += x - 1;

    std::vector<Polynomial> gens;
    for (int i = 0; i < r; ++i) {
        BinaryForm s = subresultant(h, hp, i);
        for (const auto& coeff : s.c)
            if (!coeff.is_zero()) gens.push_back(coeff);
    }
    BinaryForm sr = subresultant(h, hp, r);

    Partition lam1;
    for (int x : lambda) lam1.push_back(x - 1);
    lam1 = normalize_partition(lam1);
    if (!lam1.empty()) {
        MRLIdeal sub = mrl_ideal(lam1, r, opts);
        for (const auto& g : substitute_mrl(sub, sr.c)) gens.push_back(g);
    }
    Ideal I(c, std::move(gens));

    // formal-degree junk: every subresultant vanishes identically on {c0 = 0}
    I = saturate(I, Polynomial::variable(c, 0), SatStrategy::Auto, opts);
    // gcd degree strictly above r: the whole S_r collapses
    {
        Ideal srIdeal(c, sr.c);
        if (!srIdeal.gens().empty()) I = saturate(I, srIdeal, SatStrategy::Auto, opts);
    }
    // separate lambda' from its coarser root patterns on the gcd
    for (const auto& nu : minimal_coarsenings(lam1)) {
        int nu_total = 0;
        for (int x : nu) nu_total += x;
        if (nu_total > r) continue;
        MRLIdeal sep = mrl_ideal(nu, r, opts);
        Ideal sepIdeal(c, substitute_mrl(sep, sr.c));
        if (!sepIdeal.gens().empty()) I = saturate(I, sepIdeal, SatStrategy::Auto, opts);
    }

    auto mg = minimal_generators(I, opts);
    out.ideal = Ideal(c, mg.gens);
    out.profile = mg.profile;
    if (auto ref = reference_profile(lambda0, d)) {
        out.profile_validated = true;
        out.profile_mismatch = (*ref != out.profile);
    }
    return out;
}

}  // namespace

MRLIdeal mrl_ideal(const Partition& lambda, int d, const EngineOpts& opts) {
    std::string key = partition_to_string(normalize_partition(lambda)) + "|" + std::to_string(d);
    {
        std::lock_guard<std::mutex> lk(g_memo_mu);
        auto it = g_memo.find(key);
        if (it != g_memo.end()) return it->second;
    }
    MRLIdeal got;
    bool from_disk = false;
    if (auto cached = mrl_cache_get(normalize_partition(lambda), d)) {
        got = std::move(*cached);
        from_disk = true;
    } else {
        got = compute_mrl(lambda, d, opts);
    }
    {
        std::lock_guard<std::mutex> lk(g_memo_mu);
        g_memo.emplace(key, got);
    }
    if (!from_disk) mrl_cache_put(got);
    return got;
}

std::vector<Polynomial> substitute_mrl(const MRLIdeal& mrl, const std::vector<Polynomial>& coeffs) {
    if (static_cast<int>(coeffs.size()) != mrl.d + 1)
        throw Error("coefficient count does not match the form degree");
    RingPtr target = coeffs[0].ring();
    std::map<int, Polynomial> images;
    for (int i = 0; i <= mrl.d; ++i) images.emplace(i, coeffs[i]);
    std::vector<Polynomial> out;
    for (const auto& g : mrl.ideal.gens()) {
        Polynomial s = g.substitute(images, target);
        if (!s.is_zero()) out.push_back(s);
    }
    return out;
}

}  // namespace visev
