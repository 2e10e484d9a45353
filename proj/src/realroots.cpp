#include "visev/realroots.hpp"

#include <algorithm>
#include <sstream>

namespace visev {

namespace {

// Sign variations of the coefficient sequence.
int variations(const std::vector<Int>& a) {
    int v = 0, last = 0;
    for (const auto& c : a) {
        int s = sgn(c);
        if (s == 0) continue;
        if (last != 0 && s != last) ++v;
        last = s;
    }
    return v;
}

// Descartes bound for the number of roots of p in (0,1):
// variations of (1+x)^n p(1/(1+x)).
int variations_01(const UniPoly& p) {
    int n = p.degree();
    // q(x) = x^n p(1/x)  (reverse), then r(x) = q(x+1) (Taylor shift by 1)
    std::vector<Int> q(p.a.rbegin(), p.a.rend());
    for (int i = 0; i <= n; ++i)  // in-place shift: repeated synthetic addition
        for (int j = n - 1; j >= i; --j) q[j] += q[j + 1];
    return variations(q);
}

UniPoly scale_arg_pow2(const UniPoly& p, int log2c) {
    // p(2^log2c * x), normalized to integer coefficients
    UniPoly r = p;
    int n = p.degree();
    for (int i = 0; i <= n; ++i) {
        long sh = static_cast<long>(log2c) * i;
        if (log2c >= 0)
            mpz_mul_2exp(r.a[i].get_mpz_t(), r.a[i].get_mpz_t(), sh);
        else
            mpz_mul_2exp(r.a[i].get_mpz_t(), r.a[i].get_mpz_t(),
                         static_cast<unsigned long>(-static_cast<long>(log2c)) * (n - i));
    }
    return UniPoly::from_coeffs(std::move(r.a));
}

UniPoly shift_arg_1(const UniPoly& p) {
    // p(x+1)
    std::vector<Int> q = p.a;
    int n = p.degree();
    for (int i = 0; i <= n; ++i)
        for (int j = n - 1; j >= i; --j) q[j] += q[j + 1];
    return UniPoly::from_coeffs(std::move(q));
}

UniPoly half_shift(const UniPoly& p) {
    // 2^n p(x/2)
    UniPoly r = p;
    int n = p.degree();
    for (int i = 0; i <= n; ++i)
        mpz_mul_2exp(r.a[i].get_mpz_t(), r.a[i].get_mpz_t(), n - i);
    return UniPoly::from_coeffs(std::move(r.a));
}

// Isolate roots of sq (squarefree) within (0, 1) scaled into (lo, hi) of the
// original coordinates: interval arithmetic tracked by the caller's frame.
struct Frame {
    UniPoly p;  // roots of interest are those of p in (0,1)
    Rat lo, wid;
};

void isolate_01(const UniPoly& sq, const Rat& lo, const Rat& wid,
                std::vector<IsolatingInterval>& out) {
    std::vector<Frame> stack;
    stack.push_back({sq, lo, wid});
    while (!stack.empty()) {
        Frame f = std::move(stack.back());
        stack.pop_back();
        int v = variations_01(f.p);
        if (v == 0) continue;
        if (v == 1) {
            out.push_back({f.lo, f.lo + f.wid, 1});
            continue;
        }
        // bisect at 1/2; a root exactly there is reported and deflated so the
        // children keep root-free boundaries
        Rat mid = f.lo + f.wid / 2;
        UniPoly p = f.p;
        if (p.sign_at(Rat(1, 2)) == 0) {
            out.push_back({mid, mid, 1});
            p = uni_divexact(p, UniPoly::from_coeffs({Int(-1), Int(2)}));  // / (2x-1)
        }
        UniPoly left = half_shift(p);       // roots in (0,1/2) -> (0,1)
        UniPoly right = shift_arg_1(left);  // roots in (1/2,1) -> (0,1)
        stack.push_back({std::move(left), f.lo, f.wid / 2});
        stack.push_back({std::move(right), mid, f.wid / 2});
    }
}

// Multiplicity of an isolated root of f via the squarefree decomposition.
int multiplicity_in(const std::vector<UniPoly>& decomp, const Rat& lo, const Rat& hi) {
    for (size_t i = 0; i < decomp.size(); ++i) {
        const UniPoly& g = decomp[i];
        if (g.degree() <= 0) continue;
        if (lo == hi) {
            if (g.sign_at(lo) == 0) return static_cast<int>(i) + 1;
        } else if (g.sign_at(lo) * g.sign_at(hi) < 0 || g.sign_at(hi) == 0) {
            return static_cast<int>(i) + 1;
        }
    }
    return 1;
}

}  // namespace

std::vector<IsolatingInterval> isolate_real_roots(const UniPoly& h) {
    if (h.is_zero()) throw Error("cannot isolate roots of the zero polynomial");
    std::vector<IsolatingInterval> out;
    if (h.degree() == 0) return out;
    UniPoly sq = squarefree_part(h);
    auto decomp = squarefree_decomposition(h);

    // Cauchy-style power-of-two bound: |root| < 2^k
    int n = sq.degree();
    size_t maxbits = 0;
    for (int i = 0; i < n; ++i)
        maxbits = std::max(maxbits, mpz_sizeinbase(sq.a[i].get_mpz_t(), 2));
    size_t lcbits = mpz_sizeinbase(sq.lc().get_mpz_t(), 2);
    int k = static_cast<int>(maxbits) - static_cast<int>(lcbits) + 2;
    if (k < 1) k = 1;

    if (sq.sign_at(Rat(0)) == 0) out.push_back({Rat(0), Rat(0), 1});

    // positive roots: map (0, 2^k) to (0,1)
    {
        UniPoly pos = scale_arg_pow2(sq, k);
        isolate_01(pos, Rat(0), rat_pow(Rat(2), k), out);
    }
    // negative roots
    {
        UniPoly neg = sq;
        for (int i = 1; i <= sq.degree(); i += 2) neg.a[i] = -neg.a[i];
        neg = UniPoly::from_coeffs(std::move(neg.a));
        UniPoly pos = scale_arg_pow2(neg, k);
        std::vector<IsolatingInterval> tmp;
        isolate_01(pos, Rat(0), rat_pow(Rat(2), k), tmp);
        for (auto& iv : tmp) out.push_back({-iv.upper, -iv.lower, 1});
    }

    // An interval abutting an exact root keeps its own root strictly interior;
    // shrink until the upper endpoint is root-free so intervals stay disjoint.
    for (auto& iv : out) {
        if (iv.exact()) continue;
        while (sq.sign_at(iv.upper) == 0) {
            Rat m = (iv.lower + iv.upper) / 2;
            int sm = sq.sign_at(m);
            if (sm == 0) {
                iv.lower = iv.upper = m;
                break;
            }
            if (sq.sign_at(iv.lower) * sm < 0)
                iv.upper = m;
            else
                iv.lower = m;
        }
    }

    for (auto& iv : out) iv.multiplicity = multiplicity_in(decomp, iv.lower, iv.upper);
    std::sort(out.begin(), out.end(),
              [](const IsolatingInterval& a, const IsolatingInterval& b) { return a.lower < b.lower; });
    return out;
}

Rat refine_root(const UniPoly& h, const IsolatingInterval& iv, const Rat& tol) {
    if (h.is_zero()) throw Error("zero polynomial");
    UniPoly sq = squarefree_part(h);
    if (iv.exact()) {
        if (sq.sign_at(iv.lower) != 0) throw Error("interval does not isolate a root");
        return iv.lower;
    }
    // exact rational root of a linear squarefree part
    if (sq.degree() == 1) {
        Rat root = Rat(-sq.a[0]) / Rat(sq.a[1]);
        if (!(iv.lower < root) || !(root <= iv.upper)) throw Error("interval does not isolate a root");
        return root;
    }
    Rat lo = iv.lower, hi = iv.upper;
    int slo = sq.sign_at(lo), shi = sq.sign_at(hi);
    if (shi == 0) {
        // root exactly at the upper endpoint
        return hi;
    }
    if (slo == 0 || slo * shi > 0) throw Error("interval does not isolate a root");
    while (hi - lo >= tol) {
        Rat mid = (lo + hi) / 2;
        int sm = sq.sign_at(mid);
        if (sm == 0) return mid;
        if (sm == slo)
            lo = mid;
        else
            hi = mid;
    }
    return (lo + hi) / 2;
}

std::vector<Rat> real_roots_approx(const UniPoly& h, const Rat& tol) {
    std::vector<Rat> out;
    for (const auto& iv : isolate_real_roots(h)) out.push_back(refine_root(h, iv, tol));
    std::sort(out.begin(), out.end());
    return out;
}

std::string rat_to_decimal(const Rat& v, int digits) {
    if (sgn(v) == 0) return "0";
    Rat a = v;
    bool neg = sgn(a) < 0;
    if (neg) a = -a;
    // exponent: position of the leading digit
    int e = 0;
    Rat ten(10);
    Rat x = a;
    while (x >= ten) {
        x /= ten;
        ++e;
    }
    while (x < 1) {
        x *= ten;
        --e;
    }
    // round(a * 10^(digits-1-e))
    Rat scaled = a * rat_pow(ten, std::abs(digits - 1 - e));
    if (digits - 1 - e < 0) scaled = a / rat_pow(ten, e - digits + 1);
    Int m;
    Rat half(1, 2);
    Rat sh = scaled + half;
    mpz_fdiv_q(m.get_mpz_t(), mpq_numref(sh.get_mpq_t()), mpq_denref(sh.get_mpq_t()));
    std::string ds = m.get_str();
    if (static_cast<int>(ds.size()) > digits) {  // rounding bumped a digit
        e += static_cast<int>(ds.size()) - digits;
        ds = ds.substr(0, digits);
    }
    // render as fixed decimal
    std::string s;
    if (e >= 0) {
        if (e + 1 >= static_cast<int>(ds.size())) {
            s = ds + std::string(e + 1 - ds.size(), '0');
        } else {
            s = ds.substr(0, e + 1) + "." + ds.substr(e + 1);
        }
    } else {
        s = "0." + std::string(-e - 1, '0') + ds;
    }
    while (s.find('.') != std::string::npos && (s.back() == '0')) s.pop_back();
    if (!s.empty() && s.back() == '.') s.pop_back();
    return neg ? "-" + s : s;
}

}  // namespace visev
