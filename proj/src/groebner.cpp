#include "visev/groebner.hpp"

#include <algorithm>
#include <chrono>
#include <set>

namespace visev {

namespace {

double steady_now() {
    return std::chrono::duration<double>(std::chrono::steady_clock::now().time_since_epoch()).count();
}

thread_local GBStats g_stats;

void check_deadline(const Budget& b) {
    if (b.deadline > 0 && steady_now() > b.deadline)
        throw BudgetExceeded("wall-clock budget exceeded");
}

// Integer-coefficient working form, content-free with positive lead.
struct ZPoly {
    std::vector<Monomial> m;
    std::vector<Int> c;

    bool empty() const { return m.empty(); }
    size_t size() const { return m.size(); }
};

void strip_content(ZPoly& f) {
    if (f.empty()) return;
    Int g(0);
    for (const auto& x : f.c) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        if (g == 1) break;
    }
    if (sgn(f.c[0]) < 0) g = -g;
    if (g != 1)
        for (auto& x : f.c) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

ZPoly to_zpoly(const Polynomial& p) {
    ZPoly z;
    if (p.is_zero()) return z;
    Int den(1);
    for (const auto& t : p.terms())
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), mpq_denref(t.c.get_mpq_t()));
    z.m.reserve(p.nterms());
    z.c.reserve(p.nterms());
    for (const auto& t : p.terms()) {
        z.m.push_back(t.m);
        Rat v = t.c * Rat(den);
        z.c.push_back(Int(v.get_num()));
    }
    strip_content(z);
    return z;
}

Polynomial from_zpoly(const ZPoly& z, const RingPtr& ring, const Int& scale) {
    std::vector<Term> terms;
    terms.reserve(z.size());
    for (size_t i = 0; i < z.size(); ++i) {
        Rat c(z.c[i], scale);
        c.canonicalize();
        terms.push_back({z.m[i], std::move(c)});
    }
    return Polynomial::from_terms(ring, std::move(terms));
}

uint32_t divmask(const Monomial& m, int nv) {
    uint32_t mask = 0;
    for (int i = 0; i < nv; ++i)
        if (m.e[i]) mask |= (1u << i);
    return mask;
}

// a*f[f_start..] - b*(x^shift * g), leads assumed to cancel when cancel_lead is set.
ZPoly axpy(const Int& a, const ZPoly& f, const Int& b, const Monomial& shift, const ZPoly& g,
           const MonomialOrder& ord, int nv, bool cancel_lead, size_t f_start = 0) {
    ZPoly r;
    size_t n = f.size() - f_start + g.size();
    r.m.reserve(n);
    r.c.reserve(n);
    size_t i = f_start + (cancel_lead ? 1 : 0), j = cancel_lead ? 1 : 0;
    bool do_shift = !shift.is_one();
    Int tmp;
    while (i < f.size() || j < g.size()) {
        if (j == g.size()) {
            r.m.push_back(f.m[i]);
            r.c.push_back(a * f.c[i]);
            ++i;
            continue;
        }
        Monomial gm = do_shift ? mono_mul(g.m[j], shift, nv) : g.m[j];
        if (i == f.size()) {
            r.m.push_back(gm);
            r.c.push_back(-b * g.c[j]);
            ++j;
            continue;
        }
        int cmp = mono_cmp(f.m[i], gm, ord, nv);
        if (cmp > 0) {
            r.m.push_back(f.m[i]);
            r.c.push_back(a * f.c[i]);
            ++i;
        } else if (cmp < 0) {
            r.m.push_back(gm);
            r.c.push_back(-b * g.c[j]);
            ++j;
        } else {
            tmp = a * f.c[i] - b * g.c[j];
            if (sgn(tmp) != 0) {
                r.m.push_back(f.m[i]);
                r.c.push_back(tmp);
            }
            ++i;
            ++j;
        }
    }
    return r;
}

struct Engine {
    RingPtr ring;
    MonomialOrder ord;
    int nv;
    Budget budget;

    std::vector<ZPoly> basis;
    std::vector<uint32_t> lead_masks;

    struct Pair {
        Monomial lcm;
        uint32_t deg;
        int i, j;
    };
    struct PairCmp {
        const Engine* e;
        bool operator()(const Pair& a, const Pair& b) const {
            if (a.deg != b.deg) return a.deg < b.deg;
            int c = mono_cmp(a.lcm, b.lcm, e->ord, e->nv);
            if (c) return c < 0;
            if (a.i != b.i) return a.i < b.i;
            return a.j < b.j;
        }
    };
    std::set<Pair, PairCmp> pairs;

    Engine(RingPtr r, MonomialOrder o, Budget b)
        : ring(std::move(r)), ord(o), nv(ring->nvars()), budget(b), pairs(PairCmp{this}) {}

    const Monomial& lm(int i) const { return basis[i].m[0]; }
    const Int& lc(int i) const { return basis[i].c[0]; }

    int find_divisor(const Monomial& lead) const {
        uint32_t fmask = divmask(lead, nv);
        int found = -1;
        size_t best_len = 0;
        for (size_t k = 0; k < basis.size(); ++k) {
            if ((lead_masks[k] & ~fmask) != 0) continue;
            if (!mono_divides(basis[k].m[0], lead, nv)) continue;
            if (found < 0 || basis[k].size() < best_len) {
                found = static_cast<int>(k);
                best_len = basis[k].size();
            }
        }
        return found;
    }

    // Normal form core. The true value of the result is out/scale (with each
    // out coefficient deferred-scaled); callers either strip content or divide.
    void reduce_core(ZPoly f, ZPoly& out, std::vector<Int>& out_scale_at, Int& scale,
                     bool allow_gcd_trim) {
        scale = 1;
        uint64_t steps = 0;
        Int gcd, a, b;
        size_t fpos = 0;
        while (fpos < f.size()) {
            if (f.size() - fpos > budget.max_terms) throw BudgetExceeded("term budget exceeded");
            int found = find_divisor(f.m[fpos]);
            if (found < 0) {
                out.m.push_back(f.m[fpos]);
                out.c.push_back(f.c[fpos]);
                out_scale_at.push_back(scale);
                ++fpos;
                continue;
            }
            const ZPoly& g = basis[found];
            mpz_gcd(gcd.get_mpz_t(), f.c[fpos].get_mpz_t(), g.c[0].get_mpz_t());
            mpz_divexact(a.get_mpz_t(), g.c[0].get_mpz_t(), gcd.get_mpz_t());
            mpz_divexact(b.get_mpz_t(), f.c[fpos].get_mpz_t(), gcd.get_mpz_t());
            Monomial shift = mono_div(f.m[fpos], g.m[0], nv);
            f = axpy(a, f, b, shift, g, ord, nv, true, fpos);
            fpos = 0;
            if (a != 1) scale *= a;
            if ((++steps & 63) == 0) check_deadline(budget);
            if (allow_gcd_trim && (steps & 255) == 0 && !f.empty()) {
                // uniform rescale; the represented rational value is unchanged
                Int g0 = scale;
                for (const auto& x : f.c) {
                    mpz_gcd(g0.get_mpz_t(), g0.get_mpz_t(), x.get_mpz_t());
                    if (g0 == 1) break;
                }
                for (const auto& x : out.c) {
                    if (g0 == 1) break;
                    mpz_gcd(g0.get_mpz_t(), g0.get_mpz_t(), x.get_mpz_t());
                }
                for (const auto& x : out_scale_at) {
                    if (g0 == 1) break;
                    mpz_gcd(g0.get_mpz_t(), g0.get_mpz_t(), x.get_mpz_t());
                }
                if (g0 > 1) {
                    for (auto& x : f.c) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g0.get_mpz_t());
                    for (auto& x : out.c) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g0.get_mpz_t());
                    for (auto& x : out_scale_at)
                        mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g0.get_mpz_t());
                    mpz_divexact(scale.get_mpz_t(), scale.get_mpz_t(), g0.get_mpz_t());
                }
            }
        }
        // settle deferred scales: coefficient_i *= scale / scale_at_append_i
        for (size_t i = 0; i < out.size(); ++i) {
            if (out_scale_at[i] != scale) {
                Int f2;
                mpz_divexact(f2.get_mpz_t(), scale.get_mpz_t(), out_scale_at[i].get_mpz_t());
                out.c[i] *= f2;
            }
        }
    }

    // Full normal form against the current basis; content-free result.
    ZPoly reduce_full(ZPoly f) {
        ZPoly out;
        std::vector<Int> out_scale_at;
        Int scale;
        reduce_core(std::move(f), out, out_scale_at, scale, true);
        strip_content(out);
        return out;
    }

    // Exact remainder over Q.
    Polynomial reduce_exact(const Polynomial& p) {
        if (p.is_zero()) return p;
        ZPoly f = to_zpoly(p);
        Rat prefactor = p.lead_coeff() / Rat(f.c[0]);  // recover stripped content
        ZPoly out;
        std::vector<Int> out_scale_at;
        Int scale;
        reduce_core(std::move(f), out, out_scale_at, scale, true);
        return from_zpoly(out, ring, scale).scaled(prefactor);
    }

    ZPoly spoly(int i, int j) {
        Int gcd, a, b;
        mpz_gcd(gcd.get_mpz_t(), lc(i).get_mpz_t(), lc(j).get_mpz_t());
        mpz_divexact(a.get_mpz_t(), lc(j).get_mpz_t(), gcd.get_mpz_t());
        mpz_divexact(b.get_mpz_t(), lc(i).get_mpz_t(), gcd.get_mpz_t());
        Monomial l = mono_lcm(lm(i), lm(j), nv);
        Monomial si = mono_div(l, lm(i), nv);
        Monomial sj = mono_div(l, lm(j), nv);
        ZPoly shifted_i;
        shifted_i.m.reserve(basis[i].size());
        shifted_i.c.reserve(basis[i].size());
        for (size_t k = 0; k < basis[i].size(); ++k) {
            shifted_i.m.push_back(mono_mul(basis[i].m[k], si, nv));
            shifted_i.c.push_back(basis[i].c[k]);
        }
        return axpy(a, shifted_i, b, sj, basis[j], ord, nv, true);
    }

    // Gebauer-Moeller pair-set update for a new element h (already in basis slot t).
    void update_pairs(int t) {
        struct Cand {
            Monomial lcm;
            int i;
            bool keep = true;
        };
        std::vector<Cand> cand;
        cand.reserve(t);
        for (int i = 0; i < t; ++i) cand.push_back({mono_lcm(lm(i), lm(t), nv), i});

        // prune multiples among the new pairs (keep one representative per lcm)
        for (size_t x = 0; x < cand.size(); ++x) {
            if (!cand[x].keep) continue;
            for (size_t y = 0; y < cand.size(); ++y) {
                if (x == y || !cand[y].keep) continue;
                if (cand[y].lcm == cand[x].lcm && y > x) continue;  // F: handled below
                if (mono_divides(cand[y].lcm, cand[x].lcm, nv) && cand[y].lcm != cand[x].lcm)
                    cand[x].keep = false;
                if (!cand[x].keep) break;
            }
        }
        // F-criterion: among equal lcms keep the first
        for (size_t x = 0; x < cand.size(); ++x) {
            if (!cand[x].keep) continue;
            for (size_t y = x + 1; y < cand.size(); ++y)
                if (cand[y].keep && cand[y].lcm == cand[x].lcm) cand[y].keep = false;
        }
        // B-criterion on old pairs
        for (auto it = pairs.begin(); it != pairs.end();) {
            const Pair& p = *it;
            if (mono_divides(lm(t), p.lcm, nv) && mono_lcm(lm(p.i), lm(t), nv) != p.lcm &&
                mono_lcm(lm(p.j), lm(t), nv) != p.lcm) {
                it = pairs.erase(it);
            } else {
                ++it;
            }
        }
        // coprime criterion last
        for (const auto& cd : cand) {
            if (!cd.keep) continue;
            if (mono_coprime(lm(cd.i), lm(t), nv)) continue;
            pairs.insert(Pair{cd.lcm, cd.lcm.deg, cd.i, t});
        }
    }

    void add_element(ZPoly h) {
        basis.push_back(std::move(h));
        lead_masks.push_back(divmask(basis.back().m[0], nv));
        if (basis.size() > budget.max_basis) throw BudgetExceeded("basis size budget exceeded");
        update_pairs(static_cast<int>(basis.size()) - 1);
    }

    void run(std::vector<ZPoly> input) {
        // deterministic input order: ascending leads, then size
        std::sort(input.begin(), input.end(), [&](const ZPoly& a, const ZPoly& b) {
            int c = mono_cmp(a.m[0], b.m[0], ord, nv);
            if (c) return c < 0;
            return a.size() < b.size();
        });
        for (auto& f : input) {
            ZPoly h = reduce_full(std::move(f));
            if (!h.empty()) add_element(std::move(h));
        }
        uint64_t reductions = 0;
        while (!pairs.empty()) {
            check_deadline(budget);
            Pair p = *pairs.begin();
            pairs.erase(pairs.begin());
            ZPoly s = spoly(p.i, p.j);
            ++reductions;
            if (reductions > budget.max_pair_reductions)
                throw BudgetExceeded("pair-reduction budget exceeded");
            if (s.empty()) continue;
            ZPoly h = reduce_full(std::move(s));
            if (!h.empty()) {
                strip_content(h);
                add_element(std::move(h));
            }
        }
        g_stats.pair_reductions = reductions;
        g_stats.basis_size = basis.size();
    }

    // Minimal, fully inter-reduced, canonically sorted basis.
    std::vector<Polynomial> reduced_basis() {
        std::vector<int> keep;
        for (size_t i = 0; i < basis.size(); ++i) {
            bool minimal = true;
            for (size_t j = 0; j < basis.size(); ++j) {
                if (i == j) continue;
                if (mono_divides(basis[j].m[0], basis[i].m[0], nv)) {
                    if (basis[j].m[0] != basis[i].m[0] || j < i) {
                        minimal = false;
                        break;
                    }
                }
            }
            if (minimal) keep.push_back(static_cast<int>(i));
        }
        std::vector<ZPoly> mini;
        mini.reserve(keep.size());
        for (int i : keep) mini.push_back(basis[i]);
        std::sort(mini.begin(), mini.end(),
                  [&](const ZPoly& a, const ZPoly& b) { return mono_cmp(a.m[0], b.m[0], ord, nv) < 0; });

        // tail-reduce each against the others until stable
        Engine sub(ring, ord, budget);
        for (size_t i = 0; i < mini.size(); ++i) {
            sub.basis.clear();
            sub.lead_masks.clear();
            for (size_t j = 0; j < mini.size(); ++j) {
                if (j == i) continue;
                sub.basis.push_back(mini[j]);
                sub.lead_masks.push_back(divmask(mini[j].m[0], nv));
            }
            mini[i] = sub.reduce_full(std::move(mini[i]));
            if (mini[i].empty()) throw Error("internal: minimal element reduced to zero");
        }
        std::vector<Polynomial> out;
        out.reserve(mini.size());
        for (auto& z : mini) {
            strip_content(z);
            out.push_back(from_zpoly(z, ring, Int(1)));
        }
        return out;
    }
};

std::vector<ZPoly> zgens(const Ideal& I) {
    std::vector<ZPoly> v;
    for (const auto& g : I.gens()) {
        ZPoly z = to_zpoly(g);
        if (!z.empty()) v.push_back(std::move(z));
    }
    return v;
}

RingPtr reorder_ring(const RingPtr& r, const std::vector<int>& new_to_old, MonomialOrder ord) {
    std::vector<std::string> vars;
    vars.reserve(new_to_old.size());
    for (int i : new_to_old) vars.push_back(r->vars[i]);
    return make_ring(std::move(vars), ord);
}

std::vector<int> name_index_map(const RingPtr& from, const RingPtr& to) {
    std::vector<int> m(from->nvars());
    for (int i = 0; i < from->nvars(); ++i) m[i] = to->index_of(from->vars[i]);
    return m;
}

}  // namespace

const GBStats& last_gb_stats() { return g_stats; }

Budget Budget::deadline_in(double seconds_from_now) {
    Budget b;
    b.deadline = steady_now() + seconds_from_now;
    return b;
}

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> gens) : ring_(std::move(ring)) {
    for (auto& g : gens) {
        if (g.is_zero()) continue;
        if (!same_ring(g.ring(), ring_)) throw Error("ring mismatch in ideal generators");
        Polynomial n = g.normalized();
        bool dup = false;
        for (const auto& h : gens_)
            if (h == n) {
                dup = true;
                break;
            }
        if (!dup) gens_.push_back(std::move(n));
    }
}

Ideal Ideal::unit(RingPtr ring) {
    std::vector<Polynomial> g{Polynomial::constant(ring, Rat(1))};
    return Ideal(std::move(ring), std::move(g));
}

bool Ideal::is_unit() const {
    for (const auto& g : gens_)
        if (g.is_constant() && !g.is_zero()) return true;
    return false;
}

std::optional<std::vector<Polynomial>> Ideal::cached_basis(const MonomialOrder& ord) const {
    std::lock_guard<std::mutex> lk(cache_->mu);
    auto it = cache_->bases.find(ord.to_string());
    if (it == cache_->bases.end()) return std::nullopt;
    return it->second;
}

void Ideal::store_basis(const MonomialOrder& ord, std::vector<Polynomial> basis) const {
    std::lock_guard<std::mutex> lk(cache_->mu);
    cache_->bases[ord.to_string()] = std::move(basis);
}

std::optional<HilbertData> Ideal::cached_hilbert() const {
    std::lock_guard<std::mutex> lk(cache_->mu);
    return cache_->hilbert;
}

void Ideal::store_hilbert(HilbertData h) const {
    std::lock_guard<std::mutex> lk(cache_->mu);
    cache_->hilbert = std::move(h);
}

std::vector<Polynomial> groebner_basis(const Ideal& I, const MonomialOrder& ord,
                                       const EngineOpts& opts) {
    if (auto c = I.cached_basis(ord)) return *c;
    RingPtr work = same_ring(I.ring(), I.ring()) && I.ring()->order == ord
                       ? I.ring()
                       : make_ring(I.ring()->vars, ord);
    Engine e(work, ord, opts.budget);
    std::vector<ZPoly> in;
    for (const auto& g : I.gens()) {
        Polynomial h = I.ring()->order == ord ? g : g.with_ring(work);
        ZPoly z = to_zpoly(h);
        if (!z.empty()) in.push_back(std::move(z));
    }
    std::vector<Polynomial> out;
    if (!in.empty()) {
        e.run(std::move(in));
        out = e.reduced_basis();
        if (!(I.ring()->order == ord)) {
            for (auto& p : out) p = p.with_ring(I.ring());
        }
    }
    I.store_basis(ord, out);
    return out;
}

Polynomial normal_form(const Polynomial& f, const Ideal& I, const EngineOpts& opts) {
    if (!same_ring(f.ring(), I.ring())) throw Error("ring mismatch");
    auto gb = groebner_basis(I, I.ring()->order, opts);
    Engine e(I.ring(), I.ring()->order, opts.budget);
    for (const auto& g : gb) {
        ZPoly z = to_zpoly(g);
        e.lead_masks.push_back(divmask(z.m[0], e.nv));
        e.basis.push_back(std::move(z));
    }
    return e.reduce_exact(f);
}

bool ideal_contains(const Ideal& I, const Polynomial& f, const EngineOpts& opts) {
    if (f.is_zero()) return true;
    return normal_form(f, I, opts).is_zero();
}

bool ideal_equal(const Ideal& a, const Ideal& b, const EngineOpts& opts) {
    if (!same_ring(a.ring(), b.ring())) return false;
    auto ga = groebner_basis(a, a.ring()->order, opts);
    auto gb = groebner_basis(b, a.ring()->order, opts);
    if (ga.size() != gb.size()) return false;
    for (size_t i = 0; i < ga.size(); ++i)
        if (!(ga[i] == gb[i])) return false;
    return true;
}

bool in_radical(const Ideal& I, const Polynomial& g, const EngineOpts& opts) {
    if (g.is_zero()) return !I.is_zero_ideal() ? ideal_contains(I, g, opts) : true;
    const RingPtr& r = I.ring();
    std::vector<std::string> vars = r->vars;
    vars.insert(vars.begin(), "_w");
    RingPtr big = make_ring(vars, MonomialOrder::block(1));
    std::vector<int> imap = name_index_map(r, big);
    std::vector<Polynomial> gens;
    for (const auto& f : I.gens()) gens.push_back(f.map_vars(big, imap));
    Polynomial w = Polynomial::variable(big, 0);
    gens.push_back(w * g.map_vars(big, imap) - Polynomial::constant(big, Rat(1)));
    Ideal J(big, std::move(gens));
    auto basis = groebner_basis(J, MonomialOrder::block(1), opts);
    for (const auto& p : basis)
        if (p.is_constant()) return true;
    return false;
}

Ideal ideal_in(const RingPtr& ring, std::vector<Polynomial> gens) {
    return Ideal(ring, std::move(gens));
}

Ideal ideal_union(const Ideal& a, const std::vector<Polynomial>& more) {
    std::vector<Polynomial> gens = a.gens();
    for (const auto& g : more) gens.push_back(g);
    return Ideal(a.ring(), std::move(gens));
}

Polynomial map_poly(const Polynomial& f, const RingPtr& target) {
    return f.map_vars(target, name_index_map(f.ring(), target));
}

Ideal map_ideal(const Ideal& I, const RingPtr& target) {
    std::vector<Polynomial> gens;
    gens.reserve(I.gens().size());
    for (const auto& g : I.gens()) gens.push_back(map_poly(g, target));
    return Ideal(target, std::move(gens));
}

Ideal eliminate(const Ideal& I, const std::vector<std::string>& drop, const EngineOpts& opts) {
    const RingPtr& r = I.ring();
    std::vector<int> drop_idx;
    for (const auto& name : drop) {
        int i = r->index_of(name);
        if (i < 0) continue;  // dropping an absent variable is a no-op
        drop_idx.push_back(i);
    }
    std::vector<bool> dropped(r->nvars(), false);
    for (int i : drop_idx) dropped[i] = true;

    std::vector<std::string> keep;
    for (int i = 0; i < r->nvars(); ++i)
        if (!dropped[i]) keep.push_back(r->vars[i]);
    RingPtr keep_ring = make_ring(keep, MonomialOrder::grevlex());
    if (drop_idx.empty()) return map_ideal(I, keep_ring);

    std::vector<std::string> ordered;
    for (int i = 0; i < r->nvars(); ++i)
        if (dropped[i]) ordered.push_back(r->vars[i]);
    for (const auto& v : keep) ordered.push_back(v);
    RingPtr big = make_ring(ordered, MonomialOrder::block(static_cast<int>(drop_idx.size())));

    Ideal J = map_ideal(I, big);
    auto basis = groebner_basis(J, big->order, opts);
    std::vector<Polynomial> out;
    for (const auto& p : basis) {
        bool pure = true;
        for (int i = 0; i < static_cast<int>(drop_idx.size()) && pure; ++i)
            if (p.uses_var(i)) pure = false;
        if (pure) out.push_back(map_poly(p, keep_ring));
    }
    return Ideal(keep_ring, std::move(out));
}

Ideal intersect(const Ideal& a, const Ideal& b, const EngineOpts& opts) {
    if (!same_ring(a.ring(), b.ring())) throw Error("ring mismatch in intersection");
    if (a.is_zero_ideal() || b.is_zero_ideal()) return Ideal::zero(a.ring());
    const RingPtr& r = a.ring();
    std::vector<std::string> vars = r->vars;
    vars.insert(vars.begin(), "_w");
    RingPtr big = make_ring(vars, MonomialOrder::block(1));
    std::vector<int> imap = name_index_map(r, big);
    Polynomial w = Polynomial::variable(big, 0);
    Polynomial one = Polynomial::constant(big, Rat(1));
    std::vector<Polynomial> gens;
    for (const auto& f : a.gens()) gens.push_back(w * f.map_vars(big, imap));
    for (const auto& f : b.gens()) gens.push_back((one - w) * f.map_vars(big, imap));
    Ideal J(big, std::move(gens));
    Ideal out = eliminate(J, {"_w"}, opts);
    return map_ideal(out, r);
}

Ideal quotient(const Ideal& I, const Polynomial& g, const EngineOpts& opts) {
    if (g.is_zero()) return Ideal::unit(I.ring());
    if (I.is_zero_ideal()) return I;
    Ideal gi(I.ring(), {g});
    Ideal meet = intersect(I, gi, opts);
    std::vector<Polynomial> out;
    for (const auto& f : meet.gens()) {
        auto q = f.exact_divide(g);
        if (!q) throw Error("internal: quotient division failed");
        out.push_back(std::move(*q));
    }
    return Ideal(I.ring(), std::move(out));
}

Ideal quotient(const Ideal& I, const Ideal& J, const EngineOpts& opts) {
    if (J.is_zero_ideal()) return Ideal::unit(I.ring());
    std::optional<Ideal> acc;
    for (const auto& g : J.gens()) {
        Ideal q = quotient(I, g, opts);
        acc = acc ? intersect(*acc, q, opts) : q;
    }
    return *acc;
}

namespace {

Ideal saturate_rabinowitsch(const Ideal& I, const Polynomial& g, const EngineOpts& opts) {
    const RingPtr& r = I.ring();
    std::vector<std::string> vars = r->vars;
    vars.insert(vars.begin(), "_w");
    RingPtr big = make_ring(vars, MonomialOrder::block(1));
    std::vector<int> imap = name_index_map(r, big);
    std::vector<Polynomial> gens;
    for (const auto& f : I.gens()) gens.push_back(f.map_vars(big, imap));
    Polynomial w = Polynomial::variable(big, 0);
    gens.push_back(w * g.map_vars(big, imap) - Polynomial::constant(big, Rat(1)));
    Ideal J(big, std::move(gens));
    return map_ideal(eliminate(J, {"_w"}, opts), r);
}

// Bayer trick: for a homogeneous ideal and grevlex order with v last, dividing
// every basis element by its v-power generates I : v^infty.
Ideal saturate_grevlex_var(const Ideal& I, int var, const EngineOpts& opts) {
    const RingPtr& r = I.ring();
    std::vector<int> new_to_old;
    for (int i = 0; i < r->nvars(); ++i)
        if (i != var) new_to_old.push_back(i);
    new_to_old.push_back(var);
    RingPtr work = reorder_ring(r, new_to_old, MonomialOrder::grevlex());
    Ideal J = map_ideal(I, work);
    auto basis = groebner_basis(J, work->order, opts);
    int last = work->nvars() - 1;
    std::vector<Polynomial> out;
    for (const auto& p : basis) {
        int minexp = INT32_MAX;
        for (const auto& t : p.terms()) minexp = std::min(minexp, static_cast<int>(t.m.e[last]));
        if (minexp == 0) {
            out.push_back(p);
        } else {
            std::vector<Term> terms;
            for (const auto& t : p.terms()) {
                Monomial m = t.m;
                m.e[last] = static_cast<uint16_t>(m.e[last] - minexp);
                m.deg -= minexp;
                terms.push_back({m, t.c});
            }
            out.push_back(Polynomial::from_terms(work, std::move(terms)));
        }
    }
    return map_ideal(Ideal(work, std::move(out)), r);
}

bool all_homogeneous(const Ideal& I) {
    for (const auto& g : I.gens())
        if (!g.is_homogeneous()) return false;
    return true;
}

}  // namespace

Ideal saturate(const Ideal& I, const Polynomial& g, SatStrategy strat, const EngineOpts& opts) {
    if (g.is_zero()) return Ideal::unit(I.ring());
    if (g.is_constant()) return I;
    if (I.is_zero_ideal()) return I;
    switch (strat) {
        case SatStrategy::Rabinowitsch:
            return saturate_rabinowitsch(I, g, opts);
        case SatStrategy::GrevlexVariable: {
            if (g.nterms() == 1 && g.lead_monomial().deg == 1 && all_homogeneous(I)) {
                int var = -1;
                for (int i = 0; i < I.ring()->nvars(); ++i)
                    if (g.lead_monomial().e[i]) var = i;
                return saturate_grevlex_var(I, var, opts);
            }
            return saturate_rabinowitsch(I, g, opts);
        }
        case SatStrategy::IteratedColon:
            return saturate_colon_iterated(I, Ideal(I.ring(), {g}), opts);
        case SatStrategy::Auto: {
            if (g.nterms() == 1 && g.lead_monomial().deg == 1 && all_homogeneous(I)) {
                int var = -1;
                for (int i = 0; i < I.ring()->nvars(); ++i)
                    if (g.lead_monomial().e[i]) var = i;
                return saturate_grevlex_var(I, var, opts);
            }
            return saturate_rabinowitsch(I, g, opts);
        }
    }
    throw Error("unreachable");
}

Ideal saturate(const Ideal& I, const Ideal& J, SatStrategy strat, const EngineOpts& opts) {
    if (J.is_zero_ideal()) return Ideal::unit(I.ring());
    if (strat == SatStrategy::IteratedColon) return saturate_colon_iterated(I, J, opts);
    std::optional<Ideal> acc;
    for (const auto& g : J.gens()) {
        if (g.is_constant()) return I;  // unit in J: nothing is removed
        Ideal s = saturate(I, g, strat, opts);
        acc = acc ? intersect(*acc, s, opts) : s;
        if (acc->is_zero_ideal()) break;
    }
    return *acc;
}

Ideal saturate_colon_iterated(const Ideal& I, const Ideal& J, const EngineOpts& opts) {
    Ideal cur = I;
    for (;;) {
        Ideal next = quotient(cur, J, opts);
        if (ideal_equal(next, cur, opts)) return cur;
        cur = next;
    }
}

Ideal kernel_of_morphism(const RingMorphism& phi, const std::optional<Ideal>& modulo,
                         const EngineOpts& opts) {
    if (static_cast<int>(phi.images.size()) != phi.source->nvars())
        throw Error("morphism images arity mismatch");
    for (const auto& im : phi.images)
        if (!same_ring(im.ring(), phi.target)) throw Error("morphism image in wrong ring");
    if (modulo && !same_ring(modulo->ring(), phi.target)) throw Error("modulo ideal in wrong ring");

    std::vector<std::string> vars = phi.target->vars;
    for (const auto& v : phi.source->vars) vars.push_back(v);
    RingPtr big = make_ring(vars, MonomialOrder::block(phi.target->nvars()));

    std::vector<Polynomial> gens;
    if (modulo)
        for (const auto& f : modulo->gens()) gens.push_back(map_poly(f, big));
    for (int i = 0; i < phi.source->nvars(); ++i) {
        Polynomial v = Polynomial::variable(big, phi.source->vars[i]);
        gens.push_back(v - map_poly(phi.images[i], big));
    }
    Ideal J(big, std::move(gens));
    Ideal out = eliminate(J, phi.target->vars, opts);
    return map_ideal(out, phi.source);
}

Ideal chart_eliminate(const Ideal& I, const std::string& chart_var,
                      const std::vector<std::string>& drop, const EngineOpts& opts) {
    const RingPtr& r = I.ring();
    int cv = r->index_of(chart_var);
    if (cv < 0) throw Error("chart variable not in ring: " + chart_var);
    // substitute chart_var := 1 by zeroing its exponent
    std::vector<Polynomial> gens;
    for (const auto& g : I.gens()) {
        std::vector<Term> terms;
        for (const auto& t : g.terms()) {
            Monomial m = t.m;
            m.deg -= m.e[cv];
            m.e[cv] = 0;
            terms.push_back({m, t.c});
        }
        gens.push_back(Polynomial::from_terms(r, std::move(terms)));
    }
    std::vector<std::string> drop2;
    for (const auto& d : drop)
        if (d != chart_var) drop2.push_back(d);
    drop2.push_back(chart_var);  // now an inert variable; remove it from the ring
    return eliminate(Ideal(r, std::move(gens)), drop2, opts);
}

}  // namespace visev
